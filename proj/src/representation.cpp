#include "homprelie/representation.hpp"

#include <stdexcept>

namespace homprelie {

namespace {

void require_shape(const Representation& r) {
  const std::size_t d = r.algebra.dim, m = r.vdim;
  if (r.algebra.mult.dim() != d) throw std::invalid_argument("representation: algebra shape");
  if (r.beta.rows() != m || r.beta.cols() != m)
    throw std::invalid_argument("representation: beta must be vdim x vdim");
  if (r.rho.size() != d || r.mu.size() != d)
    throw std::invalid_argument("representation: need one rho and one mu matrix per basis vector");
  for (const auto& x : r.rho)
    if (x.rows() != m || x.cols() != m) throw std::invalid_argument("representation: rho shape");
  for (const auto& x : r.mu)
    if (x.rows() != m || x.cols() != m) throw std::invalid_argument("representation: mu shape");
}

void record(AxiomReport& rep, std::string law, std::vector<std::size_t> idx, const Matrix& residual) {
  if (residual.is_zero()) return;
  Vec flat;
  flat.reserve(residual.rows() * residual.cols());
  for (std::size_t i = 0; i < residual.rows(); ++i)
    for (std::size_t j = 0; j < residual.cols(); ++j) flat.push_back(residual(i, j));
  rep.pass = false;
  rep.witnesses.push_back({std::move(law), std::move(idx), std::move(flat)});
}

}  // namespace

Matrix Representation::rho_at(const Vec& x) const {
  Matrix out(vdim, vdim);
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (x[i] != 0) out = out + rho[i] * x[i];
  return out;
}

Matrix Representation::mu_at(const Vec& x) const {
  Matrix out(vdim, vdim);
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (x[i] != 0) out = out + mu[i] * x[i];
  return out;
}

Vec Representation::apply_rho(const Vec& x, const Vec& v) const {
  Vec out(vdim);
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (x[i] != 0) axpy(out, x[i], rho[i].apply(v));
  return out;
}

Vec Representation::apply_mu(const Vec& x, const Vec& v) const {
  Vec out(vdim);
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (x[i] != 0) axpy(out, x[i], mu[i].apply(v));
  return out;
}

AxiomReport check_representation(const Representation& r) {
  require_shape(r);
  AxiomReport rep;
  const auto& a = r.algebra;
  const std::size_t d = a.dim;
  for (std::size_t i = 0; i < d; ++i) {
    Vec ax = a.alpha.apply(unit_vec(d, i));
    record(rep, "hom-lie-rep-1", {i}, r.rho_at(ax) * r.beta - r.beta * r.rho[i]);
    record(rep, "rep-1", {i}, r.beta * r.mu[i] - r.mu_at(ax) * r.beta);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec x = unit_vec(d, i), y = unit_vec(d, j);
      Vec ax = a.alpha.apply(x), ay = a.alpha.apply(y);
      record(rep, "hom-lie-rep-2", {i, j},
             r.rho_at(a.bracket(x, y)) * r.beta - (r.rho_at(ax) * r.rho[j] - r.rho_at(ay) * r.rho[i]));
      record(rep, "rep-2", {i, j},
             (r.mu_at(ay) * r.mu[i] - r.mu_at(a.product(x, y)) * r.beta) -
                 (r.mu_at(ay) * r.rho[i] - r.rho_at(ax) * r.mu[j]));
    }
  return rep;
}

Representation regular_representation(const HomPreLieAlgebra& a) {
  if (!check_hom_pre_lie(a).pass)
    throw std::invalid_argument("regular_representation: input fails the Hom-pre-Lie axioms");
  const std::size_t d = a.dim;
  Representation r;
  r.algebra = a;
  r.vdim = d;
  r.beta = a.alpha;
  r.rho.assign(d, Matrix(d, d));
  r.mu.assign(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        r.rho[i](k, j) = a.mult.at(i, j, k);  // L_{e_i} e_j
        r.mu[i](k, j) = a.mult.at(j, i, k);   // R_{e_i} e_j
      }
  return r;
}

}  // namespace homprelie
