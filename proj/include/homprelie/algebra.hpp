/**
 * Hom-pre-Lie and Hom-Lie algebras given by structure constants, their
 * axiom checkers, the sub-adjacent (commutator) functor, and morphism
 * verification.
 *
 * A product is stored as the rank-3 tensor c with
 *     e_i * e_j = sum_k c[i][j][k] e_k    (0-based indices in code).
 * The twisting endomorphism alpha acts by its matrix in the same basis.
 */

#ifndef HOMPRELIE_ALGEBRA_HPP
#define HOMPRELIE_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "homprelie/matrix.hpp"

namespace homprelie {

/** Rank-3 coefficient tensor of a bilinear map A x A -> A. */
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  bool operator==(const StructureConstants& o) const = default;
  bool is_zero() const;

  /** Bilinear extension: the product of coordinate vectors x and y. */
  Vec product(const Vec& x, const Vec& y) const;

  StructureConstants operator+(const StructureConstants& o) const;
  StructureConstants operator-(const StructureConstants& o) const;

  /** M composed after the bilinear map: (x,y) -> M(w(x,y)). */
  StructureConstants post_compose(const Matrix& m) const;
  /** Bilinear map composed with linear maps in each slot: (x,y) -> w(P x, Q y). */
  StructureConstants pre_compose(const Matrix& p, const Matrix& q) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

struct HomPreLieAlgebra {
  std::size_t dim = 0;
  StructureConstants mult;
  Matrix alpha;

  Vec product(const Vec& x, const Vec& y) const { return mult.product(x, y); }
  /** Commutator [x,y] = x*y - y*x. */
  Vec bracket(const Vec& x, const Vec& y) const;
};

struct HomLieAlgebra {
  std::size_t dim = 0;
  StructureConstants bracket;
  Matrix phi;
};

/** One violated identity: which law, at which basis tuple, with what residual. */
struct Witness {
  std::string law;
  std::vector<std::size_t> indices;  // 0-based basis indices of the tuple
  Vec residual;
};

struct AxiomReport {
  bool pass = true;
  std::vector<Witness> witnesses;
};

/**
 * Check alpha-multiplicativity and the Hom-pre-Lie identity
 *   (x*y)*a(z) - a(x)*(y*z) = (y*x)*a(z) - a(y)*(x*z)
 * on all basis tuples. Every violation is reported with its exact residual.
 */
AxiomReport check_hom_pre_lie(const HomPreLieAlgebra& a);

/** Check skew-symmetry, phi-multiplicativity and the Hom-Jacobi identity. */
AxiomReport check_hom_lie(const HomLieAlgebra& g);

/**
 * The sub-adjacent Hom-Lie algebra: bracket = commutator of the product,
 * phi = alpha. Throws std::invalid_argument if the input fails its axioms.
 */
HomLieAlgebra sub_adjacent(const HomPreLieAlgebra& a);

/** f(x*y) = f(x)*'f(y) and f o alpha = alpha' o f on all basis pairs.
 *  f must be target.dim x source.dim. */
AxiomReport check_morphism(const Matrix& f, const HomPreLieAlgebra& source,
                           const HomPreLieAlgebra& target);

/** Flip both input slots: result[i][j][k] = w[j][i][k]. An involution. */
StructureConstants flip_compose(const StructureConstants& w);

/** Informational only: alpha invertible. Regularity is never required. */
bool is_regular(const HomPreLieAlgebra& a);

}  // namespace homprelie

#endif
