#include "homprelie/extension.hpp"

#include <stdexcept>

namespace homprelie {

Cochain Cocycle2::as_cochain() const {
  Cochain c(2, adim, vdim);
  for (std::size_t i = 0; i < adim; ++i) {
    std::size_t s[1] = {i};
    for (std::size_t j = 0; j < adim; ++j)
      for (std::size_t v = 0; v < vdim; ++v) c.omega_at(s, j, v) = theta_at(i, j, v);
  }
  for (std::size_t j = 0; j < adim; ++j)
    for (std::size_t v = 0; v < vdim; ++v) c.alpha_at({}, j, v) = xi(v, j);
  return c;
}

Cocycle2 Cocycle2::from_cochain(const Cochain& c) {
  if (c.degree() != 2) throw std::invalid_argument("Cocycle2: needs a degree-2 cochain");
  Cocycle2 out;
  out.adim = c.alg_dim();
  out.vdim = c.coeff_dim();
  out.theta.assign(out.adim * out.adim * out.vdim, Scalar(0));
  out.xi = Matrix(out.vdim, out.adim);
  for (std::size_t i = 0; i < out.adim; ++i) {
    std::size_t s[1] = {i};
    for (std::size_t j = 0; j < out.adim; ++j)
      for (std::size_t v = 0; v < out.vdim; ++v) out.theta_at(i, j, v) = c.omega_at(s, j, v);
  }
  for (std::size_t j = 0; j < out.adim; ++j)
    for (std::size_t v = 0; v < out.vdim; ++v) out.xi(v, j) = c.alpha_at({}, j, v);
  return out;
}

namespace {

void require_cocycle_shape(const HomPreLieAlgebra& a, const Representation& r, const Cocycle2& c) {
  if (r.algebra.dim != a.dim) throw std::invalid_argument("extension: representation/algebra dim");
  if (c.adim != a.dim || c.vdim != r.vdim)
    throw std::invalid_argument("extension: cocycle shape mismatch");
  if (c.theta.size() != c.adim * c.adim * c.vdim || c.xi.rows() != c.vdim || c.xi.cols() != c.adim)
    throw std::invalid_argument("extension: cocycle data lengths");
}

void record(AxiomReport& rep, std::string law, std::vector<std::size_t> idx, Vec residual) {
  if (is_zero(residual)) return;
  rep.pass = false;
  rep.witnesses.push_back({std::move(law), std::move(idx), std::move(residual)});
}

}  // namespace

AbelianExtension build(const HomPreLieAlgebra& a, const Representation& r, const Cocycle2& c) {
  require_cocycle_shape(a, r, c);
  const std::size_t d = a.dim, m = r.vdim, n = d + m;
  AbelianExtension e;
  e.total.dim = n;
  e.total.mult = StructureConstants(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) e.total.mult.at(i, j, k) = a.mult.at(i, j, k);
      for (std::size_t v = 0; v < m; ++v) e.total.mult.at(i, j, d + v) = c.theta_at(i, j, v);
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        e.total.mult.at(i, d + u, d + v) = r.rho[i](v, u);  // e_i o f_u = rho(e_i) f_u
        e.total.mult.at(d + u, i, d + v) = r.mu[i](v, u);   // f_u o e_i = mu(e_i) f_u
      }
  e.total.alpha = Matrix(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) e.total.alpha(i, j) = a.alpha(i, j);
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t j = 0; j < d; ++j) e.total.alpha(d + v, j) = c.xi(v, j);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) e.total.alpha(d + u, d + v) = r.beta(u, v);
  e.iota = Matrix(n, m);
  for (std::size_t v = 0; v < m; ++v) e.iota(d + v, v) = 1;
  e.proj = Matrix(d, n);
  for (std::size_t i = 0; i < d; ++i) e.proj(i, i) = 1;
  return e;
}

namespace {

// Coordinates of w in the image of iota, or an error naming `what`.
Vec fiber_coordinates(const Matrix& iota, const Vec& w, const char* what) {
  auto u = solve(iota, w);
  if (!u) throw std::invalid_argument(std::string(what) + " does not land in iota(V)");
  return *u;
}

}  // namespace

ExtractedData extract(const AbelianExtension& e, const HomPreLieAlgebra& a,
                      const SectionData& sec) {
  const std::size_t d = a.dim, n = e.total.dim;
  if (e.iota.rows() != n || e.proj.rows() != d || e.proj.cols() != n)
    throw std::invalid_argument("extract: iota/proj shapes");
  const std::size_t m = e.iota.cols();
  if (n != d + m) throw std::invalid_argument("extract: total dimension must be d + m");
  if (sec.s.rows() != n || sec.s.cols() != d) throw std::invalid_argument("extract: section shape");
  if (!(e.proj * sec.s == Matrix::identity(d)))
    throw std::invalid_argument("extract: s is not a section of proj");

  ExtractedData out;
  out.cocycle.adim = d;
  out.cocycle.vdim = m;
  out.cocycle.theta.assign(d * d * m, Scalar(0));
  out.cocycle.xi = Matrix(m, d);

  std::vector<Vec> s_of(d);
  for (std::size_t i = 0; i < d; ++i) s_of[i] = sec.s.column(i);

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec w = e.total.product(s_of[i], s_of[j]) - sec.s.apply(a.product(unit_vec(d, i), unit_vec(d, j)));
      Vec u = fiber_coordinates(e.iota, w, "theta value");
      for (std::size_t v = 0; v < m; ++v) out.cocycle.theta_at(i, j, v) = u[v];
    }
  for (std::size_t i = 0; i < d; ++i) {
    Vec w = e.total.alpha.apply(s_of[i]) - sec.s.apply(a.alpha.apply(unit_vec(d, i)));
    Vec u = fiber_coordinates(e.iota, w, "xi value");
    for (std::size_t v = 0; v < m; ++v) out.cocycle.xi(v, i) = u[v];
  }

  Representation& rep = out.representation;
  rep.algebra = a;
  rep.vdim = m;
  rep.beta = Matrix(m, m);
  rep.rho.assign(d, Matrix(m, m));
  rep.mu.assign(d, Matrix(m, m));
  for (std::size_t u = 0; u < m; ++u) {
    Vec iu = e.iota.column(u);
    Vec bi = fiber_coordinates(e.iota, e.total.alpha.apply(iu), "twist of iota(V)");
    for (std::size_t v = 0; v < m; ++v) rep.beta(v, u) = bi[v];
    for (std::size_t i = 0; i < d; ++i) {
      Vec ru = fiber_coordinates(e.iota, e.total.product(s_of[i], iu), "rho value");
      Vec mu = fiber_coordinates(e.iota, e.total.product(iu, s_of[i]), "mu value");
      for (std::size_t v = 0; v < m; ++v) {
        rep.rho[i](v, u) = ru[v];
        rep.mu[i](v, u) = mu[v];
      }
    }
  }
  return out;
}

std::optional<IsomorphismWitness> classify(const HomPreLieAlgebra& a, const Representation& r,
                                           const Cocycle2& c1, const Cocycle2& c2) {
  require_cocycle_shape(a, r, c1);
  require_cocycle_shape(a, r, c2);
  if (!is_cocycle(r, c1.as_cochain()).closed || !is_cocycle(r, c2.as_cochain()).closed)
    throw std::invalid_argument("classify: inputs must be 2-cocycles");
  const std::size_t d = a.dim, m = r.vdim;
  Matrix d1 = assemble(r, 1).total();
  auto sol = solve(d1, (c1.as_cochain() - c2.as_cochain()).coefficients());
  if (!sol) return std::nullopt;

  IsomorphismWitness w;
  w.phi = Matrix(m, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t v = 0; v < m; ++v) w.phi(v, j) = (*sol)[j * m + v];
  w.zeta = Matrix::identity(d + m);
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t j = 0; j < d; ++j) w.zeta(d + v, j) = w.phi(v, j);

  AbelianExtension e1 = build(a, r, c1), e2 = build(a, r, c2);
  if (!check_morphism(w.zeta, e1.total, e2.total).pass)
    throw std::logic_error("classify: constructed zeta is not a morphism");
  if (!(w.zeta * e1.iota == e2.iota) || !(e2.proj * w.zeta == e1.proj))
    throw std::logic_error("classify: constructed zeta breaks the extension diagram");
  return w;
}

AxiomReport is_abelian_extension(const AbelianExtension& e, const HomPreLieAlgebra& a) {
  const std::size_t n = e.total.dim, d = a.dim;
  if (e.iota.rows() != n || e.proj.cols() != n || e.proj.rows() != d)
    throw std::invalid_argument("is_abelian_extension: iota/proj shapes");
  const std::size_t m = e.iota.cols();
  AxiomReport rep;

  auto total_axioms = check_hom_pre_lie(e.total);
  if (!total_axioms.pass) {
    rep.pass = false;
    for (auto& w : total_axioms.witnesses) {
      w.law = "total-" + w.law;
      rep.witnesses.push_back(std::move(w));
    }
  }

  Matrix pi = e.proj * e.iota;
  for (std::size_t j = 0; j < m; ++j) record(rep, "exactness-proj-iota", {j}, pi.column(j));
  if (rank_kernel_image(e.iota).rank != m)
    record(rep, "iota-injectivity", {}, {Scalar(1)});
  if (rank_kernel_image(e.proj).rank != d)
    record(rep, "proj-surjectivity", {}, {Scalar(1)});

  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      record(rep, "abelian-ideal", {u, v}, e.total.product(e.iota.column(u), e.iota.column(v)));

  // iota intertwines the twists: the total twist must preserve iota(V).
  for (std::size_t u = 0; u < m; ++u) {
    Vec w = e.total.alpha.apply(e.iota.column(u));
    if (!solve(e.iota, w)) record(rep, "twist-preserves-fiber", {u}, w);
  }

  // proj is a morphism onto the base algebra.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = e.proj.apply(e.total.product(unit_vec(n, i), unit_vec(n, j)));
      Vec rhs = a.product(e.proj.apply(unit_vec(n, i)), e.proj.apply(unit_vec(n, j)));
      record(rep, "proj-product-compatibility", {i, j}, lhs - rhs);
    }
  Matrix comm = e.proj * e.total.alpha - a.alpha * e.proj;
  for (std::size_t j = 0; j < n; ++j)
    record(rep, "proj-twisting-compatibility", {j}, comm.column(j));
  return rep;
}

SectionData section_exists(const AbelianExtension& e) {
  const std::size_t d = e.proj.rows(), n = e.proj.cols();
  SectionData sec;
  sec.s = Matrix(n, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto col = solve(e.proj, unit_vec(d, j));
    if (!col) throw std::invalid_argument("section_exists: proj is not surjective");
    for (std::size_t i = 0; i < n; ++i) sec.s(i, j) = (*col)[i];
  }
  return sec;
}

}  // namespace homprelie
