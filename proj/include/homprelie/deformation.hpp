/**
 * Truncated 1-parameter formal deformations of a Hom-pre-Lie algebra,
 * where the product and the twisting endomorphism deform simultaneously:
 *
 *   w_t = w + w_1 t + ... + w_N t^N,   a_t = a + a_1 t + ... + a_N t^N.
 *
 * verify(D, K) checks the deformation equations modulo t^{K+1}; since
 * every summand of the order-n equations carries an index > N once
 * n > 3N, checking at K = 3N is a full polynomial verification.
 *
 * Sign convention, fixed by the order-1 identity and property-tested at
 * every order: the full order-n sum equals the interior sum (all indices
 * <= n-1) minus the total differential of (w_n, a_n) over the regular
 * representation. The order-n equation therefore holds exactly when the
 * interior sum equals d(w_n, a_n).
 */

#ifndef HOMPRELIE_DEFORMATION_HPP
#define HOMPRELIE_DEFORMATION_HPP

#include <optional>

#include "homprelie/cohomology.hpp"

namespace homprelie {

struct TruncatedDeformation {
  HomPreLieAlgebra base;
  std::size_t order = 0;                  // N
  std::vector<StructureConstants> omegas; // w_1 .. w_N
  std::vector<Matrix> alphas;             // a_1 .. a_N

  /** Coefficient of t^i in w_t: the base product at i = 0, zero beyond N. */
  const StructureConstants& omega_at(std::size_t i) const;
  /** Coefficient of t^i in a_t. */
  const Matrix& alpha_at(std::size_t i) const;
};

/** Phi_t = Id + phi_1 t + ... + phi_K t^K. */
struct GaugeTransformation {
  std::size_t order = 0;
  std::vector<Matrix> phis;  // phi_1 .. phi_K; phi_0 = Id implicitly
};

struct HomLieTruncatedDeformation {
  HomLieAlgebra base;
  std::size_t order = 0;
  std::vector<StructureConstants> brackets;
  std::vector<Matrix> phis;
};

struct OrderReport {
  std::size_t order = 0;
  bool pass = true;
  std::vector<Witness> witnesses;
};

struct DeformationReport {
  bool pass = true;
  std::vector<OrderReport> orders;
};

/** Order at which verification becomes a full polynomial check. */
inline std::size_t full_verification_order(const TruncatedDeformation& d) {
  return 3 * d.order;
}

/** Check the two deformation equation families at orders 1..K. */
DeformationReport verify(const TruncatedDeformation& d, std::size_t k);

/**
 * Interior sums of the order-n equations (every index <= n-1), packaged
 * as a degree-3 cochain over the regular representation. The order-n
 * equation holds iff this equals the total differential of (w_n, a_n).
 * Requires orders 1..n-1 to hold; throws otherwise.
 */
Cochain obstruction(const TruncatedDeformation& d, std::size_t n);

/** (w_1, a_1) as a degree-2 cochain over the regular representation.
 *  Requires verify(d, 1); the result is then always a 2-cocycle. */
Cochain infinitesimal(const TruncatedDeformation& d);

/** Pack the order-i deformer pair as a degree-2 cochain (V = A). */
Cochain deformer_cochain(const TruncatedDeformation& d, std::size_t i);

/**
 * Conjugate the deformation by the gauge: w' = Phi^{-1} o w_t o (Phi x Phi),
 * a' = Phi^{-1} o a_t o Phi, all as series truncated at t^K. The formal
 * inverse is built recursively from phi_0 = Id.
 */
TruncatedDeformation gauge_transform(const TruncatedDeformation& d,
                                     const GaugeTransformation& g, std::size_t k);

struct EquivalenceReport {
  bool equivalent = true;
  DeformationReport details;  // per-order residuals of gauge(d2) - d1
};

/** Does g carry d2 to d1 coefficientwise through order K? */
EquivalenceReport equivalent(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                             const GaugeTransformation& g, std::size_t k);

/**
 * Constructive rigidity: repeatedly kill the lowest-order nonzero
 * deformer by gauging with Id + phi_n t^n, where (w_n, a_n) = d(-phi_n).
 * Returns the composite gauge, or nullopt as soon as some (w_n, a_n) is
 * not a coboundary. The returned gauge carries d to the zero deformation
 * through order K. Throws if d fails verification up to K.
 */
std::optional<GaugeTransformation> trivialize(const TruncatedDeformation& d, std::size_t k);

/** The induced deformation of the sub-adjacent Hom-Lie algebra:
 *  bracket deformers w_i - w_i o flip, twisting deformers a_i. */
HomLieTruncatedDeformation induced_sub_adjacent(const TruncatedDeformation& d);

/** Order-by-order skew-symmetry, Hom-Jacobi and multiplicativity checks
 *  for a truncated Hom-Lie deformation. */
DeformationReport verify_hom_lie(const HomLieTruncatedDeformation& hd, std::size_t k);

}  // namespace homprelie

#endif
