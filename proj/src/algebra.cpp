#include "homprelie/algebra.hpp"

#include <stdexcept>

namespace homprelie {

bool StructureConstants::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Vec StructureConstants::product(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("structure constants: argument length mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = at(i, j, k);
        if (c != 0) out[k] += f * c;
      }
    }
  }
  return out;
}

StructureConstants StructureConstants::operator+(const StructureConstants& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("structure constants add: dim mismatch");
  StructureConstants r(dim_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

StructureConstants StructureConstants::operator-(const StructureConstants& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("structure constants sub: dim mismatch");
  StructureConstants r(dim_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

StructureConstants StructureConstants::post_compose(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_)
    throw std::invalid_argument("post_compose: matrix shape mismatch");
  StructureConstants r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t l = 0; l < dim_; ++l) {
        const Scalar& w = at(i, j, l);
        if (w == 0) continue;
        for (std::size_t k = 0; k < dim_; ++k)
          if (m(k, l) != 0) r.at(i, j, k) += m(k, l) * w;
      }
  return r;
}

StructureConstants StructureConstants::pre_compose(const Matrix& p, const Matrix& q) const {
  if (p.rows() != dim_ || p.cols() != dim_ || q.rows() != dim_ || q.cols() != dim_)
    throw std::invalid_argument("pre_compose: matrix shape mismatch");
  StructureConstants r(dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& w = at(a, b, k);
        if (w == 0) continue;
        for (std::size_t i = 0; i < dim_; ++i) {
          if (p(a, i) == 0) continue;
          Scalar f = p(a, i) * w;
          for (std::size_t j = 0; j < dim_; ++j)
            if (q(b, j) != 0) r.at(i, j, k) += f * q(b, j);
        }
      }
  return r;
}

Vec HomPreLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  return mult.product(x, y) - mult.product(y, x);
}

namespace {

void require_shape(const HomPreLieAlgebra& a) {
  if (a.mult.dim() != a.dim || a.alpha.rows() != a.dim || a.alpha.cols() != a.dim)
    throw std::invalid_argument("hom-pre-Lie algebra: inconsistent shapes");
}

void record(AxiomReport& rep, std::string law, std::vector<std::size_t> idx, Vec residual) {
  if (is_zero(residual)) return;
  rep.pass = false;
  rep.witnesses.push_back({std::move(law), std::move(idx), std::move(residual)});
}

}  // namespace

AxiomReport check_hom_pre_lie(const HomPreLieAlgebra& a) {
  require_shape(a);
  AxiomReport rep;
  const std::size_t d = a.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ei = unit_vec(d, i), ej = unit_vec(d, j);
      Vec lhs = a.alpha.apply(a.product(ei, ej));
      Vec rhs = a.product(a.alpha.apply(ei), a.alpha.apply(ej));
      record(rep, "alpha-multiplicativity", {i, j}, lhs - rhs);
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec x = unit_vec(d, i), y = unit_vec(d, j), z = unit_vec(d, k);
        Vec az = a.alpha.apply(z);
        Vec lhs = a.product(a.product(x, y), az) - a.product(a.alpha.apply(x), a.product(y, z));
        Vec rhs = a.product(a.product(y, x), az) - a.product(a.alpha.apply(y), a.product(x, z));
        record(rep, "hom-pre-lie-identity", {i, j, k}, lhs - rhs);
      }
  return rep;
}

AxiomReport check_hom_lie(const HomLieAlgebra& g) {
  if (g.bracket.dim() != g.dim || g.phi.rows() != g.dim || g.phi.cols() != g.dim)
    throw std::invalid_argument("hom-Lie algebra: inconsistent shapes");
  AxiomReport rep;
  const std::size_t d = g.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec res(d);
      for (std::size_t k = 0; k < d; ++k) res[k] = g.bracket.at(i, j, k) + g.bracket.at(j, i, k);
      record(rep, "skew-symmetry", {i, j}, std::move(res));
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ei = unit_vec(d, i), ej = unit_vec(d, j);
      Vec lhs = g.phi.apply(g.bracket.product(ei, ej));
      Vec rhs = g.bracket.product(g.phi.apply(ei), g.phi.apply(ej));
      record(rep, "phi-multiplicativity", {i, j}, lhs - rhs);
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec x = unit_vec(d, i), y = unit_vec(d, j), z = unit_vec(d, k);
        Vec s = g.bracket.product(g.phi.apply(x), g.bracket.product(y, z)) +
                g.bracket.product(g.phi.apply(y), g.bracket.product(z, x)) +
                g.bracket.product(g.phi.apply(z), g.bracket.product(x, y));
        record(rep, "hom-jacobi", {i, j, k}, std::move(s));
      }
  return rep;
}

HomLieAlgebra sub_adjacent(const HomPreLieAlgebra& a) {
  if (!check_hom_pre_lie(a).pass)
    throw std::invalid_argument("sub_adjacent: input fails the Hom-pre-Lie axioms");
  HomLieAlgebra g;
  g.dim = a.dim;
  g.bracket = a.mult - flip_compose(a.mult);
  g.phi = a.alpha;
  return g;
}

AxiomReport check_morphism(const Matrix& f, const HomPreLieAlgebra& source,
                           const HomPreLieAlgebra& target) {
  require_shape(source);
  require_shape(target);
  if (f.rows() != target.dim || f.cols() != source.dim)
    throw std::invalid_argument("check_morphism: f must be target.dim x source.dim");
  AxiomReport rep;
  const std::size_t d = source.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ei = unit_vec(d, i), ej = unit_vec(d, j);
      Vec lhs = f.apply(source.product(ei, ej));
      Vec rhs = target.product(f.apply(ei), f.apply(ej));
      record(rep, "product-compatibility", {i, j}, lhs - rhs);
    }
  Matrix comm = f * source.alpha - target.alpha * f;
  for (std::size_t j = 0; j < d; ++j)
    record(rep, "twisting-compatibility", {j}, comm.column(j));
  return rep;
}

StructureConstants flip_compose(const StructureConstants& w) {
  const std::size_t d = w.dim();
  StructureConstants r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) r.at(i, j, k) = w.at(j, i, k);
  return r;
}

bool is_regular(const HomPreLieAlgebra& a) {
  return rank_kernel_image(a.alpha).rank == a.dim;
}

}  // namespace homprelie
