/**
 * Representations (V, beta, rho, mu) of a Hom-pre-Lie algebra. rho and mu
 * are stored on basis vectors only; arbitrary arguments are resolved by
 * linear extension at evaluation time, which is what the coboundary
 * formulas need when they act through composite arguments.
 */

#ifndef HOMPRELIE_REPRESENTATION_HPP
#define HOMPRELIE_REPRESENTATION_HPP

#include <vector>

#include "homprelie/algebra.hpp"

namespace homprelie {

struct Representation {
  HomPreLieAlgebra algebra;
  std::size_t vdim = 0;       // m
  Matrix beta;                // m x m
  std::vector<Matrix> rho;    // d matrices, m x m
  std::vector<Matrix> mu;     // d matrices, m x m

  /** Matrix of rho at an arbitrary algebra vector: sum_i x_i rho[i]. */
  Matrix rho_at(const Vec& x) const;
  Matrix mu_at(const Vec& x) const;

  /** rho(x) v without materializing the matrix. */
  Vec apply_rho(const Vec& x, const Vec& v) const;
  Vec apply_mu(const Vec& x, const Vec& v) const;
};

/**
 * Verify all four identities of a Hom-pre-Lie representation on basis
 * pairs: the two Hom-Lie conditions for rho with respect to beta, and the
 * two mixed rho/mu conditions. Witness residuals are flattened m x m
 * matrices.
 */
AxiomReport check_representation(const Representation& r);

/**
 * The regular representation: V = A, beta = alpha, rho = left
 * multiplication, mu = right multiplication. Throws if the algebra fails
 * its axioms.
 */
Representation regular_representation(const HomPreLieAlgebra& a);

}  // namespace homprelie

#endif
