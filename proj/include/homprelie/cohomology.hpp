/**
 * Cohomology of the full cochain complex: kernels and images of the
 * assembled total differentials, deterministic representative selection,
 * and the solver that decides whether two cocycles are cohomologous.
 */

#ifndef HOMPRELIE_COHOMOLOGY_HPP
#define HOMPRELIE_COHOMOLOGY_HPP

#include <optional>

#include "homprelie/coboundary.hpp"

namespace homprelie {

struct CohomologyReport {
  std::size_t degree = 0;
  std::size_t dim_cochain = 0;
  std::size_t dim_cocycle = 0;     // dim Z^n
  std::size_t dim_coboundary = 0;  // dim B^n
  std::size_t dim_cohomology = 0;  // dim H^n
  /** Cocycles whose classes form a basis of H^n, chosen by extending a
   *  basis of B^n to Z^n in reduced echelon order. */
  std::vector<Cochain> representative_basis;
};

/** Full cohomology at degree n >= 1. B^1 = 0 since there is no C^0. */
CohomologyReport cohomology(const Representation& r, std::size_t n);

struct CocycleCheck {
  bool closed = false;
  Cochain residual;  // the total differential of the input, degree n+1
};

CocycleCheck is_cocycle(const Representation& r, const Cochain& c);

/**
 * A correction x of degree n-1 with d(x) = c1 - c2, or nullopt when the
 * classes differ. Inputs must be cocycles of equal degree n >= 2.
 */
std::optional<Cochain> cohomologous(const Representation& r, const Cochain& c1,
                                    const Cochain& c2);

struct ClassDecomposition {
  Vec coordinates;  // of [c] in the representative basis
  /** Degree n-1 cochain with c = sum coords * reps + d(correction);
   *  absent at degree 1, where every cocycle is its own class. */
  std::optional<Cochain> correction;
};

/** Decompose a cocycle against the representative basis at its degree. */
ClassDecomposition class_decompose(const Representation& r, const Cochain& c);

}  // namespace homprelie

#endif
