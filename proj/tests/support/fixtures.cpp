#include "support/fixtures.hpp"

#include <array>
#include <stdexcept>

#include "homprelie/cohomology.hpp"

namespace homprelie::testing {

HomPreLieAlgebra idempotent_line() {
  HomPreLieAlgebra a;
  a.dim = 1;
  a.mult = StructureConstants(1);
  a.mult.at(0, 0, 0) = 1;
  a.alpha = Matrix::identity(1);
  return a;
}

HomPreLieAlgebra zero_line() {
  HomPreLieAlgebra a;
  a.dim = 1;
  a.mult = StructureConstants(1);
  a.alpha = Matrix(1, 1);
  return a;
}

HomPreLieAlgebra two_dim_fixture() {
  HomPreLieAlgebra a;
  a.dim = 2;
  a.mult = StructureConstants(2);
  a.mult.at(1, 0, 0) = 1;  // e2 * e1 = e1
  a.mult.at(1, 1, 1) = 1;  // e2 * e2 = e2
  a.alpha = Matrix(2, 2);
  a.alpha(0, 0) = 1;
  a.alpha(0, 1) = 1;
  a.alpha(1, 1) = 1;
  return a;
}

namespace {

// Fast integer-arithmetic axiom check for the exhaustive d=2 search; the
// box {-1,0,1} keeps every intermediate far below overflow.
struct IntAlgebra2 {
  std::array<long, 8> c;   // c[(i*2+j)*2+k]
  std::array<long, 4> al;  // al[k*2+j]

  void prod(const long x[2], const long y[2], long out[2]) const {
    out[0] = out[1] = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out[k] += x[i] * y[j] * c[(i * 2 + j) * 2 + k];
  }
  void ap(const long x[2], long out[2]) const {
    out[0] = al[0] * x[0] + al[1] * x[1];
    out[1] = al[2] * x[0] + al[3] * x[1];
  }
  bool passes() const {
    const long e[2][2] = {{1, 0}, {0, 1}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        long p[2], l[2], ai[2], aj[2], r[2];
        prod(e[i], e[j], p);
        ap(p, l);
        ap(e[i], ai);
        ap(e[j], aj);
        prod(ai, aj, r);
        if (l[0] != r[0] || l[1] != r[1]) return false;
      }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          long az[2], xy[2], yx[2], yz[2], xz[2], ax[2], ay[2];
          ap(e[k], az);
          prod(e[i], e[j], xy);
          prod(e[j], e[i], yx);
          prod(e[j], e[k], yz);
          prod(e[i], e[k], xz);
          ap(e[i], ax);
          ap(e[j], ay);
          long t1[2], t2[2], t3[2], t4[2];
          prod(xy, az, t1);
          prod(ax, yz, t2);
          prod(yx, az, t3);
          prod(ay, xz, t4);
          for (int v = 0; v < 2; ++v)
            if (t1[v] - t2[v] != t3[v] - t4[v]) return false;
        }
    return true;
  }
};

}  // namespace

HomPreLieAlgebra search_two_dim_fixture() {
  const long vals[3] = {0, 1, -1};
  IntAlgebra2 a{};
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = 0; c2 < 3; ++c2)
        for (int c3 = 0; c3 < 3; ++c3)
          for (int c4 = 0; c4 < 3; ++c4)
            for (int c5 = 0; c5 < 3; ++c5)
              for (int c6 = 0; c6 < 3; ++c6)
                for (int c7 = 0; c7 < 3; ++c7) {
                  a.c = {vals[c0], vals[c1], vals[c2], vals[c3],
                         vals[c4], vals[c5], vals[c6], vals[c7]};
                  bool commutative = true;
                  for (int i = 0; i < 2 && commutative; ++i)
                    for (int j = 0; j < 2 && commutative; ++j)
                      for (int k = 0; k < 2; ++k)
                        if (a.c[(i * 2 + j) * 2 + k] != a.c[(j * 2 + i) * 2 + k]) {
                          commutative = false;
                          break;
                        }
                  if (commutative) continue;
                  for (int a0 = 0; a0 < 3; ++a0)
                    for (int a1 = 0; a1 < 3; ++a1)
                      for (int a2 = 0; a2 < 3; ++a2)
                        for (int a3 = 0; a3 < 3; ++a3) {
                          a.al = {vals[a0], vals[a1], vals[a2], vals[a3]};
                          if (a.al[1] == 0 && a.al[2] == 0) continue;             // diagonal
                          if (a.al[0] * a.al[3] - a.al[1] * a.al[2] == 0) continue;  // singular
                          if (!a.passes()) continue;
                          HomPreLieAlgebra out;
                          out.dim = 2;
                          out.mult = StructureConstants(2);
                          for (int i = 0; i < 2; ++i)
                            for (int j = 0; j < 2; ++j)
                              for (int k = 0; k < 2; ++k)
                                out.mult.at(i, j, k) = a.c[(i * 2 + j) * 2 + k];
                          out.alpha = Matrix(2, 2);
                          for (int i = 0; i < 2; ++i)
                            for (int j = 0; j < 2; ++j) out.alpha(i, j) = a.al[i * 2 + j];
                          return out;
                        }
                }
  throw std::logic_error("search_two_dim_fixture: empty search");
}

Scalar random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return Scalar(num(rng), den(rng));
}

Matrix random_box_matrix(Rng& rng, std::size_t rows, std::size_t cols, double fill) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> sign(0, 1);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) < fill) m(i, j) = sign(rng) ? 1 : -1;
  return m;
}

std::optional<HomPreLieAlgebra> random_passing_algebra(Rng& rng, std::size_t d,
                                                       std::size_t attempts) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> sign(0, 1);
  const double tensor_fill = d >= 3 ? 0.10 : 0.25;
  for (std::size_t t = 0; t < attempts; ++t) {
    HomPreLieAlgebra a;
    a.dim = d;
    a.mult = StructureConstants(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (coin(rng) < tensor_fill) a.mult.at(i, j, k) = sign(rng) ? 1 : -1;
    a.alpha = random_box_matrix(rng, d, d, 0.4);
    if (check_hom_pre_lie(a).pass) return a;
  }
  return std::nullopt;
}

HomPreLieAlgebra random_passing_algebra_always(Rng& rng, std::size_t d) {
  if (auto a = random_passing_algebra(rng, d)) return *a;
  // abelian fallback: any alpha passes when the product is zero
  HomPreLieAlgebra a;
  a.dim = d;
  a.mult = StructureConstants(d);
  a.alpha = random_box_matrix(rng, d, d, 0.5);
  return a;
}

Representation zero_action_representation(Rng& rng, const HomPreLieAlgebra& a, std::size_t m) {
  Representation r;
  r.algebra = a;
  r.vdim = m;
  r.beta = random_box_matrix(rng, m, m, 0.5);
  r.rho.assign(a.dim, Matrix(m, m));
  r.mu.assign(a.dim, Matrix(m, m));
  return r;
}

Representation direct_sum(const Representation& r1, const Representation& r2) {
  Representation r;
  r.algebra = r1.algebra;
  r.vdim = r1.vdim + r2.vdim;
  auto block = [&](const Matrix& a, const Matrix& b) {
    Matrix m(r.vdim, r.vdim);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r1.vdim + i, r1.vdim + j) = b(i, j);
    return m;
  };
  r.beta = block(r1.beta, r2.beta);
  for (std::size_t i = 0; i < r.algebra.dim; ++i) {
    r.rho.push_back(block(r1.rho[i], r2.rho[i]));
    r.mu.push_back(block(r1.mu[i], r2.mu[i]));
  }
  return r;
}

Representation random_representation(Rng& rng, const HomPreLieAlgebra& a) {
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0:
      return regular_representation(a);
    case 1:
      return zero_action_representation(rng, a, 1 + rng() % 3);
    case 2: {
      auto reg = regular_representation(a);
      if (reg.vdim + 1 <= 3) return direct_sum(reg, zero_action_representation(rng, a, 1));
      return reg;
    }
    default: {
      auto z1 = zero_action_representation(rng, a, 1 + rng() % 2);
      auto z2 = zero_action_representation(rng, a, 1);
      return z1.vdim + z2.vdim <= 3 ? direct_sum(z1, z2) : z1;
    }
  }
}

Cochain random_cochain(Rng& rng, std::size_t degree, std::size_t d, std::size_t m) {
  Cochain c(degree, d, m);
  for (auto& x : c.omega_coeffs()) x = random_rational(rng);
  for (auto& x : c.alpha_coeffs()) x = random_rational(rng);
  return c;
}

Cochain random_cocycle2(Rng& rng, const Representation& r) {
  Matrix d2 = assemble(r, 2).total();
  auto kernel = rank_kernel_image(d2).kernel_basis;
  Vec coeffs(d2.cols());
  for (const auto& k : kernel) axpy(coeffs, random_rational(rng), k);
  return Cochain::from_coefficients(2, r.algebra.dim, r.vdim, coeffs);
}

GaugeTransformation random_gauge(Rng& rng, std::size_t d, std::size_t k) {
  GaugeTransformation g;
  g.order = k;
  for (std::size_t i = 0; i < k; ++i) g.phis.push_back(random_box_matrix(rng, d, d, 0.5));
  return g;
}

TruncatedDeformation random_order1_deformation(Rng& rng, const HomPreLieAlgebra& a) {
  auto r = regular_representation(a);
  Cochain z = random_cocycle2(rng, r);
  auto c2 = Cocycle2::from_cochain(z);
  TruncatedDeformation d;
  d.base = a;
  d.order = 1;
  StructureConstants w(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) w.at(i, j, k) = c2.theta_at(i, j, k);
  Matrix al(a.dim, a.dim);
  for (std::size_t v = 0; v < a.dim; ++v)
    for (std::size_t j = 0; j < a.dim; ++j) al(v, j) = c2.xi(v, j);
  d.omegas.push_back(std::move(w));
  d.alphas.push_back(std::move(al));
  return d;
}

TruncatedDeformation random_gauged_zero_deformation(Rng& rng, const HomPreLieAlgebra& a,
                                                    std::size_t k) {
  TruncatedDeformation zero{a, 0, {}, {}};
  return gauge_transform(zero, random_gauge(rng, a.dim, k), k);
}

}  // namespace homprelie::testing
