/**
 * The bigraded cochain spaces of a Hom-pre-Lie algebra with coefficients
 * in a representation:
 *
 *   C^n_w = Hom(Wedge^{n-1} A (x) A, V),   C^n_a = Hom(Wedge^{n-2} A (x) A, V)
 *
 * for n >= 2, and C^1 = Hom(A, V) (carried in the omega slot, alpha slot
 * empty). There is no C^0, so first-degree coboundaries are zero.
 *
 * Basis ordering is lexicographic on (S ascending, then j, then v) with v
 * fastest, where S is the increasing wedge tuple, j the tensor slot index
 * and v the coordinate in V. Spaces with n-1 > d (resp. n-2 > d) are zero.
 */

#ifndef HOMPRELIE_COCHAIN_HPP
#define HOMPRELIE_COCHAIN_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "homprelie/matrix.hpp"

namespace homprelie {

/** C(n, k) as an exact machine count; 0 when k > n. */
std::size_t binomial(std::size_t n, std::size_t k);

/** All strictly increasing k-tuples over {0..d-1}, lexicographically. */
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t d, std::size_t k);

/** Lex rank of an increasing k-tuple among increasing_tuples(d, k). */
std::size_t tuple_rank(std::span<const std::size_t> tuple, std::size_t d);

/**
 * Sort indices ascending, tracking the permutation sign. Returns nullopt
 * on a repeated index (the wedge kills it).
 */
std::optional<std::pair<std::vector<std::size_t>, int>> sort_with_sign(
    std::span<const std::size_t> indices);

struct CochainSpaceDims {
  std::size_t dim_omega = 0;
  std::size_t dim_alpha = 0;
  std::size_t total() const { return dim_omega + dim_alpha; }
};

/** Dimensions of (C^n_w, C^n_a) for an algebra of dimension d and
 *  coefficients of dimension m. Throws for n = 0. */
CochainSpaceDims space_dims(std::size_t n, std::size_t d, std::size_t m);

/** An element (phi, psi) of the degree-n cochain space. */
class Cochain {
 public:
  Cochain() = default;
  /** Zero cochain of the given degree. */
  Cochain(std::size_t degree, std::size_t d, std::size_t m);

  std::size_t degree() const { return degree_; }
  std::size_t alg_dim() const { return d_; }
  std::size_t coeff_dim() const { return m_; }

  /** Coefficient of the omega part at basis index (S, j, v). */
  Scalar& omega_at(std::span<const std::size_t> s, std::size_t j, std::size_t v);
  const Scalar& omega_at(std::span<const std::size_t> s, std::size_t j, std::size_t v) const;
  Scalar& alpha_at(std::span<const std::size_t> s, std::size_t j, std::size_t v);
  const Scalar& alpha_at(std::span<const std::size_t> s, std::size_t j, std::size_t v) const;

  const Vec& omega_coeffs() const { return omega_; }
  const Vec& alpha_coeffs() const { return alpha_; }
  Vec& omega_coeffs() { return omega_; }
  Vec& alpha_coeffs() { return alpha_; }

  /** Stacked coefficient vector: omega block then alpha block. */
  Vec coefficients() const;
  static Cochain from_coefficients(std::size_t degree, std::size_t d, std::size_t m,
                                   const Vec& coeffs);

  /**
   * Value of the omega part on an n-tuple of coordinate vectors.
   * Multilinear in every slot and antisymmetric in the first n-1.
   */
  Vec evaluate_omega(std::span<const Vec> args) const;
  /** Value of the alpha part on an (n-1)-tuple; requires degree >= 2. */
  Vec evaluate_alpha(std::span<const Vec> args) const;

  bool operator==(const Cochain& o) const = default;
  bool is_zero() const { return homprelie::is_zero(omega_) && homprelie::is_zero(alpha_); }

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain scaled(const Scalar& s) const;

 private:
  std::size_t degree_ = 0, d_ = 0, m_ = 0;
  Vec omega_;
  Vec alpha_;
};

/** Value of a multilinear table on basis tuples: (wedge indices..., j) -> V. */
using BasisTable = std::function<Vec(std::span<const std::size_t>, std::size_t)>;

/**
 * Build the omega part of a degree-n cochain from a dense multilinear
 * table by antisymmetrizing its first n-1 slots (average over signed
 * permutations). A table that is already antisymmetric is reproduced
 * exactly.
 */
Cochain omega_from_dense_table(std::size_t degree, std::size_t d, std::size_t m,
                               const BasisTable& table);

/** As above for the alpha part (degree >= 2, wedge arity n-2). */
void set_alpha_from_dense_table(Cochain& c, const BasisTable& table);

}  // namespace homprelie

#endif
