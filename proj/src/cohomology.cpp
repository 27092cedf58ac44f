#include "homprelie/cohomology.hpp"

#include <stdexcept>

namespace homprelie {

CohomologyReport cohomology(const Representation& r, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cohomology: the complex starts at degree 1");
  const std::size_t d = r.algebra.dim, m = r.vdim;
  CohomologyReport rep;
  rep.degree = n;
  rep.dim_cochain = space_dims(n, d, m).total();

  Matrix dn = assemble(r, n).total();
  auto kern = rank_kernel_image(dn);
  rep.dim_cocycle = kern.kernel_basis.size();

  std::vector<Vec> boundary_basis;
  if (n >= 2) {
    Matrix dprev = assemble(r, n - 1).total();
    auto im = rank_kernel_image(dprev);
    for (auto c : im.pivot_columns) boundary_basis.push_back(dprev.column(c));
  }
  rep.dim_coboundary = boundary_basis.size();
  rep.dim_cohomology = rep.dim_cocycle - rep.dim_coboundary;

  // Extend the boundary basis to the cocycle space: kernel vectors whose
  // columns are pivots of [B | K] are the representatives.
  std::vector<Vec> cols = boundary_basis;
  cols.insert(cols.end(), kern.kernel_basis.begin(), kern.kernel_basis.end());
  Matrix bk = Matrix::from_columns(rep.dim_cochain, cols);
  auto ext = rank_kernel_image(bk);
  for (auto c : ext.pivot_columns) {
    if (c < boundary_basis.size()) continue;
    rep.representative_basis.push_back(
        Cochain::from_coefficients(n, d, m, kern.kernel_basis[c - boundary_basis.size()]));
  }
  return rep;
}

CocycleCheck is_cocycle(const Representation& r, const Cochain& c) {
  CocycleCheck out;
  out.residual = apply(r, c);
  out.closed = out.residual.is_zero();
  return out;
}

std::optional<Cochain> cohomologous(const Representation& r, const Cochain& c1,
                                    const Cochain& c2) {
  if (c1.degree() != c2.degree() || c1.degree() < 2)
    throw std::invalid_argument("cohomologous: need two cochains of equal degree >= 2");
  if (!is_cocycle(r, c1).closed || !is_cocycle(r, c2).closed)
    throw std::invalid_argument("cohomologous: inputs must be cocycles");
  const std::size_t n = c1.degree();
  Matrix dprev = assemble(r, n - 1).total();
  auto x = solve(dprev, (c1 - c2).coefficients());
  if (!x) return std::nullopt;
  return Cochain::from_coefficients(n - 1, c1.alg_dim(), c1.coeff_dim(), *x);
}

ClassDecomposition class_decompose(const Representation& r, const Cochain& c) {
  if (!is_cocycle(r, c).closed)
    throw std::invalid_argument("class_decompose: input must be a cocycle");
  const std::size_t n = c.degree(), d = c.alg_dim(), m = c.coeff_dim();
  auto rep = cohomology(r, n);
  std::vector<Vec> cols;
  cols.reserve(rep.representative_basis.size());
  for (const auto& b : rep.representative_basis) cols.push_back(b.coefficients());
  Matrix reps = Matrix::from_columns(rep.dim_cochain, cols);
  Matrix dprev = n >= 2 ? assemble(r, n - 1).total() : Matrix(rep.dim_cochain, 0);
  auto sol = solve(hstack(reps, dprev), c.coefficients());
  if (!sol) throw std::logic_error("class_decompose: cocycle outside Z^n, impossible");
  ClassDecomposition out;
  out.coordinates.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(cols.size()));
  if (n >= 2) {
    Vec corr(sol->begin() + static_cast<std::ptrdiff_t>(cols.size()), sol->end());
    out.correction = Cochain::from_coefficients(n - 1, d, m, corr);
  }
  return out;
}

}  // namespace homprelie
