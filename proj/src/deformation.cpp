#include "homprelie/deformation.hpp"

#include <map>
#include <stdexcept>

namespace homprelie {

namespace {

void require_shape(const TruncatedDeformation& d) {
  if (d.omegas.size() != d.order || d.alphas.size() != d.order)
    throw std::invalid_argument("deformation: deformer list lengths must equal the order");
  for (const auto& w : d.omegas)
    if (w.dim() != d.base.dim) throw std::invalid_argument("deformation: omega deformer shape");
  for (const auto& a : d.alphas)
    if (a.rows() != d.base.dim || a.cols() != d.base.dim)
      throw std::invalid_argument("deformation: alpha deformer shape");
}

// Stable references to zero deformers, one per dimension.
const StructureConstants& zero_sc(std::size_t d) {
  static thread_local std::map<std::size_t, StructureConstants> cache;
  return cache.try_emplace(d, StructureConstants(d)).first->second;
}

const Matrix& zero_mat(std::size_t d) {
  static thread_local std::map<std::size_t, Matrix> cache;
  return cache.try_emplace(d, Matrix(d, d)).first->second;
}

void record(OrderReport& rep, std::string law, std::vector<std::size_t> idx, Vec residual) {
  if (is_zero(residual)) return;
  rep.pass = false;
  rep.witnesses.push_back({std::move(law), std::move(idx), std::move(residual)});
}

}  // namespace

const StructureConstants& TruncatedDeformation::omega_at(std::size_t i) const {
  if (i == 0) return base.mult;
  if (i <= order) return omegas[i - 1];
  return zero_sc(base.dim);
}

const Matrix& TruncatedDeformation::alpha_at(std::size_t i) const {
  if (i == 0) return base.alpha;
  if (i <= order) return alphas[i - 1];
  return zero_mat(base.dim);
}

namespace {

// Residual families of the order-n deformation equations at basis tuples.
// R1 is trilinear (the deformed pre-Lie identity), R2 bilinear (the
// deformed multiplicativity of the twisting series).
Vec order_residual_pre_lie(const TruncatedDeformation& d, std::size_t n, const Vec& x,
                           const Vec& y, const Vec& z, std::size_t lo, std::size_t hi) {
  const std::size_t dim = d.base.dim;
  Vec out(dim);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) {
      const std::size_t k = n - i - j;
      if (i < lo || j < lo || k < lo || i > hi || j > hi || k > hi) continue;
      const auto& wi = d.omega_at(i);
      const auto& wj = d.omega_at(j);
      const auto& wk = d.omega_at(k);
      const auto& aj = d.alpha_at(j);
      const auto& ak = d.alpha_at(k);
      axpy(out, 1, wi.product(wj.product(x, y), ak.apply(z)));
      axpy(out, -1, wi.product(aj.apply(x), wk.product(y, z)));
      axpy(out, -1, wi.product(wj.product(y, x), ak.apply(z)));
      axpy(out, 1, wi.product(aj.apply(y), wk.product(x, z)));
    }
  return out;
}

Vec order_residual_mult(const TruncatedDeformation& d, std::size_t n, const Vec& x, const Vec& y,
                        std::size_t lo, std::size_t hi) {
  const std::size_t dim = d.base.dim;
  Vec out(dim);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) {
      const std::size_t k = n - i - j;
      if (i < lo || j < lo || k < lo || i > hi || j > hi || k > hi) continue;
      axpy(out, 1, d.omega_at(i).product(d.alpha_at(j).apply(x), d.alpha_at(k).apply(y)));
    }
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t j = n - i;
    if (i < lo || j < lo || i > hi || j > hi) continue;
    axpy(out, -1, d.alpha_at(i).apply(d.omega_at(j).product(x, y)));
  }
  return out;
}

}  // namespace

DeformationReport verify(const TruncatedDeformation& d, std::size_t k) {
  require_shape(d);
  if (k < 1) throw std::invalid_argument("verify: order must be >= 1");
  DeformationReport rep;
  const std::size_t dim = d.base.dim;
  for (std::size_t n = 1; n <= k; ++n) {
    OrderReport o;
    o.order = n;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Vec x = unit_vec(dim, i), y = unit_vec(dim, j);
        for (std::size_t l = 0; l < dim; ++l)
          record(o, "deformed-pre-lie-identity", {i, j, l},
                 order_residual_pre_lie(d, n, x, y, unit_vec(dim, l), 0, n));
        record(o, "deformed-multiplicativity", {i, j}, order_residual_mult(d, n, x, y, 0, n));
      }
    rep.pass = rep.pass && o.pass;
    rep.orders.push_back(std::move(o));
  }
  return rep;
}

Cochain deformer_cochain(const TruncatedDeformation& d, std::size_t i) {
  require_shape(d);
  const std::size_t dim = d.base.dim;
  Cochain c(2, dim, dim);
  const auto& w = d.omega_at(i);
  const auto& a = d.alpha_at(i);
  for (std::size_t p = 0; p < dim; ++p) {
    std::size_t s[1] = {p};
    for (std::size_t q = 0; q < dim; ++q)
      for (std::size_t v = 0; v < dim; ++v) c.omega_at(s, q, v) = w.at(p, q, v);
  }
  for (std::size_t q = 0; q < dim; ++q)
    for (std::size_t v = 0; v < dim; ++v) c.alpha_at({}, q, v) = a(v, q);
  return c;
}

Cochain obstruction(const TruncatedDeformation& d, std::size_t n) {
  require_shape(d);
  if (n < 1) throw std::invalid_argument("obstruction: order must be >= 1");
  if (n >= 2) {
    auto pre = verify(d, n - 1);
    if (!pre.pass)
      throw std::runtime_error("obstruction: deformation equations fail below order " +
                               std::to_string(n));
  }
  const std::size_t dim = d.base.dim;
  Cochain c(3, dim, dim);
  const std::size_t hi = n == 0 ? 0 : n - 1;  // interior: all indices <= n-1
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      std::size_t s[2] = {i, j};
      for (std::size_t l = 0; l < dim; ++l) {
        Vec val = order_residual_pre_lie(d, n, unit_vec(dim, i), unit_vec(dim, j),
                                         unit_vec(dim, l), 0, hi);
        for (std::size_t v = 0; v < dim; ++v) c.omega_at(s, l, v) = val[v];
      }
    }
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t s[1] = {i};
    for (std::size_t j = 0; j < dim; ++j) {
      Vec val = order_residual_mult(d, n, unit_vec(dim, i), unit_vec(dim, j), 0, hi);
      for (std::size_t v = 0; v < dim; ++v) c.alpha_at(s, j, v) = val[v];
    }
  }
  return c;
}

Cochain infinitesimal(const TruncatedDeformation& d) {
  require_shape(d);
  auto rep = verify(d, 1);
  if (!rep.pass) throw std::runtime_error("infinitesimal: order-1 equations fail");
  Cochain c = deformer_cochain(d, 1);
  auto check = is_cocycle(regular_representation(d.base), c);
  if (!check.closed)
    throw std::logic_error("infinitesimal: verified order-1 deformer is not closed");
  return c;
}

namespace {

// Coefficients of Phi_t and of its formal inverse, up to t^k.
std::vector<Matrix> gauge_series(const GaugeTransformation& g, std::size_t dim, std::size_t k) {
  std::vector<Matrix> p;
  p.reserve(k + 1);
  p.push_back(Matrix::identity(dim));
  for (std::size_t i = 1; i <= k; ++i)
    p.push_back(i <= g.order && i <= g.phis.size() ? g.phis[i - 1] : Matrix(dim, dim));
  return p;
}

std::vector<Matrix> inverse_series(const std::vector<Matrix>& p, std::size_t dim, std::size_t k) {
  std::vector<Matrix> q;
  q.reserve(k + 1);
  q.push_back(Matrix::identity(dim));
  for (std::size_t n = 1; n <= k; ++n) {
    Matrix acc(dim, dim);
    for (std::size_t i = 1; i <= n; ++i) acc = acc + p[i] * q[n - i];
    q.push_back(-acc);
  }
  return q;
}

std::vector<Matrix> series_product(const std::vector<Matrix>& a, const std::vector<Matrix>& b,
                                   std::size_t dim, std::size_t k) {
  std::vector<Matrix> r(k + 1, Matrix(dim, dim));
  for (std::size_t n = 0; n <= k; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      if (i < a.size() && n - i < b.size()) r[n] = r[n] + a[i] * b[n - i];
  return r;
}

}  // namespace

TruncatedDeformation gauge_transform(const TruncatedDeformation& d, const GaugeTransformation& g,
                                     std::size_t k) {
  require_shape(d);
  if (k < 1) throw std::invalid_argument("gauge_transform: order must be >= 1");
  const std::size_t dim = d.base.dim;
  for (const auto& m : g.phis)
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("gauge_transform: gauge matrix shape");
  auto p = gauge_series(g, dim, k);
  auto q = inverse_series(p, dim, k);
  TruncatedDeformation out;
  out.base = d.base;
  out.order = k;
  out.omegas.assign(k, StructureConstants(dim));
  out.alphas.assign(k, Matrix(dim, dim));
  for (std::size_t n = 0; n <= k; ++n) {
    StructureConstants w(dim);
    Matrix a(dim, dim);
    for (std::size_t qa = 0; qa <= n; ++qa) {
      if (q[qa].is_zero()) continue;
      for (std::size_t wb = 0; qa + wb <= n; ++wb) {
        // omega': sum over q_a o w_b(p_c x, p_e y)
        if (!d.omega_at(wb).is_zero()) {
          for (std::size_t pc = 0; qa + wb + pc <= n; ++pc) {
            const std::size_t pe = n - qa - wb - pc;
            if (p[pc].is_zero() || p[pe].is_zero()) continue;
            w = w + d.omega_at(wb).pre_compose(p[pc], p[pe]).post_compose(q[qa]);
          }
        }
        // alpha': q_a o a_b o p_c with c = n - a - b
        a = a + q[qa] * d.alpha_at(wb) * p[n - qa - wb];
      }
    }
    if (n == 0) {
      if (!(w == d.base.mult) || !(a == d.base.alpha))
        throw std::logic_error("gauge_transform: constant term drifted");
      continue;
    }
    out.omegas[n - 1] = std::move(w);
    out.alphas[n - 1] = std::move(a);
  }
  return out;
}

EquivalenceReport equivalent(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                             const GaugeTransformation& g, std::size_t k) {
  require_shape(d1);
  require_shape(d2);
  if (d1.base.dim != d2.base.dim)
    throw std::invalid_argument("equivalent: deformations of different dimensions");
  TruncatedDeformation t = gauge_transform(d2, g, k);
  EquivalenceReport rep;
  const std::size_t dim = d1.base.dim;
  if (!(d1.base.mult == d2.base.mult) || !(d1.base.alpha == d2.base.alpha)) {
    OrderReport o;
    o.order = 0;
    o.pass = false;
    o.witnesses.push_back({"base-algebra-mismatch", {}, {}});
    rep.details.pass = false;
    rep.details.orders.push_back(std::move(o));
  }
  for (std::size_t n = 1; n <= k; ++n) {
    OrderReport o;
    o.order = n;
    StructureConstants dw = t.omega_at(n) - d1.omega_at(n);
    Matrix da = t.alpha_at(n) - d1.alpha_at(n);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Vec res(dim);
        for (std::size_t l = 0; l < dim; ++l) res[l] = dw.at(i, j, l);
        record(o, "omega-coefficient-mismatch", {i, j}, std::move(res));
      }
    for (std::size_t j = 0; j < dim; ++j)
      record(o, "alpha-coefficient-mismatch", {j}, da.column(j));
    rep.details.pass = rep.details.pass && o.pass;
    rep.details.orders.push_back(std::move(o));
  }
  rep.equivalent = rep.details.pass;
  return rep;
}

std::optional<GaugeTransformation> trivialize(const TruncatedDeformation& d, std::size_t k) {
  require_shape(d);
  if (!verify(d, k).pass)
    throw std::runtime_error("trivialize: deformation equations fail below the requested order");
  const std::size_t dim = d.base.dim;
  Matrix d1 = assemble(regular_representation(d.base), 1).total();

  TruncatedDeformation cur = gauge_transform(d, GaugeTransformation{0, {}}, k);  // pad to order k
  std::vector<Matrix> total = gauge_series(GaugeTransformation{0, {}}, dim, k);
  while (true) {
    std::size_t n = 0;
    for (std::size_t i = 1; i <= k; ++i)
      if (!cur.omega_at(i).is_zero() || !cur.alpha_at(i).is_zero()) {
        n = i;
        break;
      }
    if (n == 0) break;  // zero through order k
    Vec rhs = deformer_cochain(cur, n).coefficients();
    for (auto& x : rhs) x = -x;
    auto sol = solve(d1, rhs);
    if (!sol) return std::nullopt;  // (w_n, a_n) is not a coboundary
    Matrix phi(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t v = 0; v < dim; ++v) phi(v, j) = (*sol)[j * dim + v];
    GaugeTransformation step;
    step.order = n;
    step.phis.assign(n, Matrix(dim, dim));
    step.phis[n - 1] = phi;
    cur = gauge_transform(cur, step, k);
    total = series_product(total, gauge_series(step, dim, k), dim, k);
  }
  GaugeTransformation g;
  g.order = k;
  g.phis.assign(total.begin() + 1, total.end());
  return g;
}

HomLieTruncatedDeformation induced_sub_adjacent(const TruncatedDeformation& d) {
  require_shape(d);
  HomLieTruncatedDeformation hd;
  hd.base = sub_adjacent(d.base);
  hd.order = d.order;
  hd.brackets.reserve(d.order);
  for (const auto& w : d.omegas) hd.brackets.push_back(w - flip_compose(w));
  hd.phis = d.alphas;
  return hd;
}

namespace {

const StructureConstants& hl_bracket(const HomLieTruncatedDeformation& hd, std::size_t i) {
  if (i == 0) return hd.base.bracket;
  if (i <= hd.order) return hd.brackets[i - 1];
  return zero_sc(hd.base.dim);
}

const Matrix& hl_phi(const HomLieTruncatedDeformation& hd, std::size_t i) {
  if (i == 0) return hd.base.phi;
  if (i <= hd.order) return hd.phis[i - 1];
  return zero_mat(hd.base.dim);
}

}  // namespace

DeformationReport verify_hom_lie(const HomLieTruncatedDeformation& hd, std::size_t k) {
  if (hd.brackets.size() != hd.order || hd.phis.size() != hd.order)
    throw std::invalid_argument("hom-Lie deformation: deformer list lengths must equal the order");
  if (k < 1) throw std::invalid_argument("verify_hom_lie: order must be >= 1");
  DeformationReport rep;
  const std::size_t dim = hd.base.dim;
  for (std::size_t n = 1; n <= k; ++n) {
    OrderReport o;
    o.order = n;
    if (n <= hd.order) {
      const auto& b = hd.brackets[n - 1];
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
          Vec res(dim);
          for (std::size_t l = 0; l < dim; ++l) res[l] = b.at(i, j, l) + b.at(j, i, l);
          record(o, "deformer-skew-symmetry", {i, j}, std::move(res));
        }
    }
    for (std::size_t bi = 0; bi < dim; ++bi)
      for (std::size_t bj = 0; bj < dim; ++bj) {
        Vec x = unit_vec(dim, bi), y = unit_vec(dim, bj);
        // multiplicativity: sum phi_i([x,y]_j) = sum [phi_j x, phi_k y]_i
        Vec res(dim);
        for (std::size_t i = 0; i <= n; ++i)
          axpy(res, 1, hl_phi(hd, i).apply(hl_bracket(hd, n - i).product(x, y)));
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = 0; i + j <= n; ++j)
            axpy(res, -1,
                 hl_bracket(hd, i).product(hl_phi(hd, j).apply(x),
                                           hl_phi(hd, n - i - j).apply(y)));
        record(o, "deformed-phi-multiplicativity", {bi, bj}, std::move(res));
        for (std::size_t bl = 0; bl < dim; ++bl) {
          Vec z = unit_vec(dim, bl);
          Vec jac(dim);
          for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j) {
              const std::size_t l = n - i - j;
              axpy(jac, 1,
                   hl_bracket(hd, l).product(hl_phi(hd, i).apply(x),
                                             hl_bracket(hd, j).product(y, z)));
              axpy(jac, 1,
                   hl_bracket(hd, l).product(hl_phi(hd, i).apply(y),
                                             hl_bracket(hd, j).product(z, x)));
              axpy(jac, 1,
                   hl_bracket(hd, l).product(hl_phi(hd, i).apply(z),
                                             hl_bracket(hd, j).product(x, y)));
            }
          record(o, "deformed-hom-jacobi", {bi, bj, bl}, std::move(jac));
        }
      }
    rep.pass = rep.pass && o.pass;
    rep.orders.push_back(std::move(o));
  }
  return rep;
}

}  // namespace homprelie
