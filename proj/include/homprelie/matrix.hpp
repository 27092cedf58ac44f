/**
 * Dense matrices and vectors over exact rationals, with the Gaussian
 * elimination kernels (rank / nullspace / solve) used throughout the
 * cohomology computations.
 *
 * All elimination is deterministic: pivots are the first nonzero entry in
 * column order, kernels come out in the reduced echelon parameterization,
 * and particular solutions set every free variable to zero. Identical
 * inputs therefore produce identical bases, which keeps downstream
 * cohomology representatives and CLI output reproducible.
 */

#ifndef HOMPRELIE_MATRIX_HPP
#define HOMPRELIE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "homprelie/rational.hpp"

namespace homprelie {

using Vec = std::vector<Scalar>;

/** Row-major dense matrix. 0xN and Nx0 shapes are legal and behave as the
 *  corresponding maps between zero spaces. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

  bool is_zero() const;
  Matrix transposed() const;
  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;  // throws on dimension mismatch
  Matrix operator*(const Scalar& s) const;

  /** M * v. Throws if v.size() != cols(). */
  Vec apply(const Vec& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);
Vec unit_vec(std::size_t dim, std::size_t i);
/** dst += s * src (dimensions must agree). */
void axpy(Vec& dst, const Scalar& s, const Vec& src);

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;       // reduced echelon parameterization
  std::vector<std::size_t> pivot_columns;
};

/**
 * Rank, kernel basis and pivot columns of M by exact Gauss-Jordan
 * elimination. rank + kernel_basis.size() == cols(M), and M * k == 0
 * exactly for every basis vector k.
 */
RankKernelImage rank_kernel_image(const Matrix& m);

/**
 * Particular solution of M x = b with free variables set to zero, or
 * nullopt when b is outside the column space. Throws if b.size() != rows.
 */
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace homprelie

#endif
