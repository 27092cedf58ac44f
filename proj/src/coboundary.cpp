#include "homprelie/coboundary.hpp"

#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace homprelie {

namespace {

void require_compatible(const Representation& r, const Cochain& c) {
  if (c.alg_dim() != r.algebra.dim || c.coeff_dim() != r.vdim)
    throw std::invalid_argument("coboundary: cochain does not match the representation");
}

std::vector<Matrix> alpha_powers(const Matrix& alpha, std::size_t up_to) {
  std::vector<Matrix> p;
  p.reserve(up_to + 1);
  p.push_back(Matrix::identity(alpha.rows()));
  for (std::size_t k = 1; k <= up_to; ++k) p.push_back(alpha * p.back());
  return p;
}

std::vector<Vec> omit(std::span<const Vec> args, std::size_t skip) {
  std::vector<Vec> out;
  out.reserve(args.size() - 1);
  for (std::size_t t = 0; t < args.size(); ++t)
    if (t != skip) out.push_back(args[t]);
  return out;
}

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

// (d_ww phi)(x_1..x_{n+1}) =
//     sum_i (-1)^{i+1} rho(a^{n-1} x_i) phi(.. x_i ..)
//   + sum_i (-1)^{i+1} mu(a^{n-1} x_{n+1}) phi(x_1 .. x_i .. x_n, x_i)
//   - sum_i (-1)^{i+1} phi(a x_1 .. a x_i .. a x_n, x_i * x_{n+1})
//   + sum_{i<j} (-1)^{i+j} phi([x_i,x_j], a x_1 .. a x_i .. a x_j .. a x_{n+1})
Vec eval_d_omega_omega(const Representation& r, const Cochain& c, std::span<const Vec> args) {
  const std::size_t n = c.degree();
  if (args.size() != n + 1) throw std::invalid_argument("d_omega_omega: arity mismatch");
  const auto& a = r.algebra;
  Matrix an1 = alpha_powers(a.alpha, n - 1).back();
  Vec out(r.vdim);
  std::vector<Vec> aimg(args.size());
  for (std::size_t t = 0; t < args.size(); ++t) aimg[t] = a.alpha.apply(args[t]);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar sgn = parity_sign(i);
    axpy(out, sgn, r.apply_rho(an1.apply(args[i]), c.evaluate_omega(omit(args, i))));
    std::vector<Vec> rot;
    rot.reserve(n);
    for (std::size_t t = 0; t < n; ++t)
      if (t != i) rot.push_back(args[t]);
    rot.push_back(args[i]);
    axpy(out, sgn, r.apply_mu(an1.apply(args[n]), c.evaluate_omega(rot)));
    std::vector<Vec> tw;
    tw.reserve(n);
    for (std::size_t t = 0; t < n; ++t)
      if (t != i) tw.push_back(aimg[t]);
    tw.push_back(a.product(args[i], args[n]));
    axpy(out, -sgn, c.evaluate_omega(tw));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar sgn = parity_sign(i + j);  // (-1)^{(i+1)+(j+1)}
      std::vector<Vec> br;
      br.reserve(n);
      br.push_back(a.bracket(args[i], args[j]));
      for (std::size_t t = 0; t < n + 1; ++t)
        if (t != i && t != j) br.push_back(aimg[t]);
      axpy(out, sgn, c.evaluate_omega(br));
    }
  return out;
}

// (d_aa psi)(x_1..x_n) =
//     sum_{i<=n-1} (-1)^i rho(a^{n-1} x_i) psi(.. x_i ..)
//   + sum_{i<=n-1} (-1)^i mu(a^{n-1} x_n) psi(x_1 .. x_i .. x_{n-1}, x_i)
//   - sum_{i<=n-1} (-1)^i psi(a x_1 .. a x_i .. a x_{n-1}, x_i * x_n)
//   + sum_{i<j<=n-1} (-1)^{i+j-1} psi([x_i,x_j], a x_1 .. a x_i .. a x_j .. a x_n)
Vec eval_d_alpha_alpha(const Representation& r, const Cochain& c, std::span<const Vec> args) {
  const std::size_t n = c.degree();
  if (n < 2) throw std::invalid_argument("d_alpha_alpha: needs degree >= 2");
  if (args.size() != n) throw std::invalid_argument("d_alpha_alpha: arity mismatch");
  const auto& a = r.algebra;
  Matrix an1 = alpha_powers(a.alpha, n - 1).back();
  Vec out(r.vdim);
  std::vector<Vec> aimg(args.size());
  for (std::size_t t = 0; t < args.size(); ++t) aimg[t] = a.alpha.apply(args[t]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Scalar sgn = -parity_sign(i);  // (-1)^{i+1} for 1-based index i+1
    axpy(out, sgn, r.apply_rho(an1.apply(args[i]), c.evaluate_alpha(omit(args, i))));
    std::vector<Vec> rot;
    rot.reserve(n - 1);
    for (std::size_t t = 0; t + 1 < n; ++t)
      if (t != i) rot.push_back(args[t]);
    rot.push_back(args[i]);
    axpy(out, sgn, r.apply_mu(an1.apply(args[n - 1]), c.evaluate_alpha(rot)));
    std::vector<Vec> tw;
    tw.reserve(n - 1);
    for (std::size_t t = 0; t + 1 < n; ++t)
      if (t != i) tw.push_back(aimg[t]);
    tw.push_back(a.product(args[i], args[n - 1]));
    axpy(out, -sgn, c.evaluate_alpha(tw));
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      const Scalar sgn = -parity_sign(i + j);  // (-1)^{(i+1)+(j+1)-1}
      std::vector<Vec> br;
      br.reserve(n - 1);
      br.push_back(a.bracket(args[i], args[j]));
      for (std::size_t t = 0; t < n; ++t)
        if (t != i && t != j) br.push_back(aimg[t]);
      axpy(out, sgn, c.evaluate_alpha(br));
    }
  return out;
}

// (d_wa phi)(x_1..x_n) = beta phi(x_1..x_n) - phi(a x_1 .. a x_n)
Vec eval_d_omega_alpha(const Representation& r, const Cochain& c, std::span<const Vec> args) {
  const std::size_t n = c.degree();
  if (args.size() != n) throw std::invalid_argument("d_omega_alpha: arity mismatch");
  std::vector<Vec> aimg(args.size());
  for (std::size_t t = 0; t < args.size(); ++t) aimg[t] = r.algebra.alpha.apply(args[t]);
  return r.beta.apply(c.evaluate_omega(args)) - c.evaluate_omega(aimg);
}

// (d_aw psi)(x_1..x_{n+1}) = sum_{i<j<=n} (-1)^{i+j} [
//     rho([a^{n-2} x_i, a^{n-2} x_j]) psi(.. x_i .. x_j .., x_{n+1})
//   + mu(a^{n-2} x_i * a^{n-2} x_{n+1}) psi(x_1 .. x_i .. x_j .. x_n, x_j)
//   - mu(a^{n-2} x_j * a^{n-2} x_{n+1}) psi(x_1 .. x_i .. x_j .. x_n, x_i) ]
Vec eval_d_alpha_omega(const Representation& r, const Cochain& c, std::span<const Vec> args) {
  const std::size_t n = c.degree();
  if (n < 2) throw std::invalid_argument("d_alpha_omega: needs degree >= 2");
  if (args.size() != n + 1) throw std::invalid_argument("d_alpha_omega: arity mismatch");
  const auto& a = r.algebra;
  Matrix an2 = alpha_powers(a.alpha, n - 2).back();
  Vec out(r.vdim);
  Vec alast = an2.apply(args[n]);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ai = an2.apply(args[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar sgn = parity_sign(i + j);
      Vec aj = an2.apply(args[j]);
      std::vector<Vec> rest;
      rest.reserve(n - 1);
      for (std::size_t t = 0; t < n + 1; ++t)
        if (t != i && t != j) rest.push_back(args[t]);
      axpy(out, sgn, r.apply_rho(a.bracket(ai, aj), c.evaluate_alpha(rest)));
      std::vector<Vec> head;
      head.reserve(n - 2);
      for (std::size_t t = 0; t < n; ++t)
        if (t != i && t != j) head.push_back(args[t]);
      std::vector<Vec> with_j = head;
      with_j.push_back(args[j]);
      axpy(out, sgn, r.apply_mu(a.product(ai, alast), c.evaluate_alpha(with_j)));
      std::vector<Vec> with_i = std::move(head);
      with_i.push_back(args[i]);
      axpy(out, -sgn, r.apply_mu(a.product(aj, alast), c.evaluate_alpha(with_i)));
    }
  }
  return out;
}

namespace {

using PointEvaluator = Vec (*)(const Representation&, const Cochain&, std::span<const Vec>);

// Pack operator values on all increasing output tuples into a coefficient
// vector for the destination space (wedge size `out_wedge`, arity
// out_wedge + 1).
Vec assemble_part(const Representation& r, const Cochain& c, std::size_t out_wedge,
                  PointEvaluator ev) {
  const std::size_t d = r.algebra.dim, m = r.vdim;
  Vec coeffs(binomial(d, out_wedge) * d * m);
  if (coeffs.empty()) return coeffs;
  auto tuples = increasing_tuples(d, out_wedge);
  std::vector<Vec> args(out_wedge + 1);
  std::size_t off = 0;
  for (const auto& s : tuples) {
    for (std::size_t t = 0; t < out_wedge; ++t) args[t] = unit_vec(d, s[t]);
    for (std::size_t j = 0; j < d; ++j) {
      args[out_wedge] = unit_vec(d, j);
      Vec val = ev(r, c, args);
      for (std::size_t v = 0; v < m; ++v) coeffs[off + v] = val[v];
      off += m;
    }
  }
  return coeffs;
}

}  // namespace

Cochain d_omega_omega(const Representation& r, const Cochain& c) {
  require_compatible(r, c);
  Cochain out(c.degree() + 1, c.alg_dim(), c.coeff_dim());
  out.omega_coeffs() = assemble_part(r, c, c.degree(), &eval_d_omega_omega);
  return out;
}

Cochain d_alpha_alpha(const Representation& r, const Cochain& c) {
  require_compatible(r, c);
  if (c.degree() < 2) throw std::invalid_argument("d_alpha_alpha: needs degree >= 2");
  Cochain out(c.degree() + 1, c.alg_dim(), c.coeff_dim());
  out.alpha_coeffs() = assemble_part(r, c, c.degree() - 1, &eval_d_alpha_alpha);
  return out;
}

Cochain d_omega_alpha(const Representation& r, const Cochain& c) {
  require_compatible(r, c);
  Cochain out(c.degree() + 1, c.alg_dim(), c.coeff_dim());
  out.alpha_coeffs() = assemble_part(r, c, c.degree() - 1, &eval_d_omega_alpha);
  return out;
}

Cochain d_alpha_omega(const Representation& r, const Cochain& c) {
  require_compatible(r, c);
  if (c.degree() < 2) throw std::invalid_argument("d_alpha_omega: needs degree >= 2");
  Cochain out(c.degree() + 1, c.alg_dim(), c.coeff_dim());
  out.omega_coeffs() = assemble_part(r, c, c.degree(), &eval_d_alpha_omega);
  return out;
}

Cochain apply(const Representation& r, const Cochain& c) {
  Cochain out = d_omega_omega(r, c) + d_omega_alpha(r, c);
  if (c.degree() >= 2) out = out + d_alpha_omega(r, c) + d_alpha_alpha(r, c);
  return out;
}

Matrix CoboundaryBlocks::total() const {
  return vstack(hstack(m_ww, m_aw), hstack(m_wa, m_aa));
}

std::size_t assembly_threads() {
  if (const char* env = std::getenv("HOMPRELIE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t threads = std::min(assembly_threads(), count ? count : std::size_t{1});
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

CoboundaryBlocks assemble(const Representation& r, std::size_t n) {
  if (n == 0) throw std::invalid_argument("assemble: the complex starts at degree 1");
  const std::size_t d = r.algebra.dim, m = r.vdim;
  const auto src = space_dims(n, d, m);
  const auto dst = space_dims(n + 1, d, m);
  CoboundaryBlocks blocks;
  blocks.degree = n;
  blocks.m_ww = Matrix(dst.dim_omega, src.dim_omega);
  blocks.m_wa = Matrix(dst.dim_alpha, src.dim_omega);
  blocks.m_aw = Matrix(dst.dim_omega, src.dim_alpha);
  blocks.m_aa = Matrix(dst.dim_alpha, src.dim_alpha);
  parallel_for(src.dim_omega, [&](std::size_t col) {
    Cochain basis(n, d, m);
    basis.omega_coeffs()[col] = 1;
    Vec w = assemble_part(r, basis, n, &eval_d_omega_omega);
    for (std::size_t row = 0; row < w.size(); ++row) blocks.m_ww(row, col) = std::move(w[row]);
    Vec a = assemble_part(r, basis, n - 1, &eval_d_omega_alpha);
    for (std::size_t row = 0; row < a.size(); ++row) blocks.m_wa(row, col) = std::move(a[row]);
  });
  if (n >= 2) {
    parallel_for(src.dim_alpha, [&](std::size_t col) {
      Cochain basis(n, d, m);
      basis.alpha_coeffs()[col] = 1;
      Vec w = assemble_part(r, basis, n, &eval_d_alpha_omega);
      for (std::size_t row = 0; row < w.size(); ++row) blocks.m_aw(row, col) = std::move(w[row]);
      Vec a = assemble_part(r, basis, n - 1, &eval_d_alpha_alpha);
      for (std::size_t row = 0; row < a.size(); ++row) blocks.m_aa(row, col) = std::move(a[row]);
    });
  }
  return blocks;
}

}  // namespace homprelie
