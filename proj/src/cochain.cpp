#include "homprelie/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace homprelie {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > d) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (k == 0) break;
    // advance to the next combination in lex order
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == d - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t tuple_rank(std::span<const std::size_t> tuple, std::size_t d) {
  const std::size_t k = tuple.size();
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = prev; v < tuple[i]; ++v) rank += binomial(d - 1 - v, k - 1 - i);
    prev = tuple[i] + 1;
  }
  return rank;
}

std::optional<std::pair<std::vector<std::size_t>, int>> sort_with_sign(
    std::span<const std::size_t> indices) {
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  int sign = 1;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return std::nullopt;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  if (idx.size() >= 2)
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return std::nullopt;
  return std::make_pair(std::move(idx), sign);
}

CochainSpaceDims space_dims(std::size_t n, std::size_t d, std::size_t m) {
  if (n == 0) throw std::invalid_argument("space_dims: the complex starts at degree 1");
  CochainSpaceDims dims;
  dims.dim_omega = binomial(d, n - 1) * d * m;
  dims.dim_alpha = n >= 2 ? binomial(d, n - 2) * d * m : 0;
  return dims;
}

Cochain::Cochain(std::size_t degree, std::size_t d, std::size_t m)
    : degree_(degree), d_(d), m_(m) {
  auto dims = space_dims(degree, d, m);
  omega_.assign(dims.dim_omega, Scalar(0));
  alpha_.assign(dims.dim_alpha, Scalar(0));
}

namespace {

std::size_t basis_offset(std::span<const std::size_t> s, std::size_t j, std::size_t v,
                         std::size_t d, std::size_t m) {
  return (tuple_rank(s, d) * d + j) * m + v;
}

}  // namespace

Scalar& Cochain::omega_at(std::span<const std::size_t> s, std::size_t j, std::size_t v) {
  if (s.size() + 1 != degree_) throw std::invalid_argument("omega_at: wedge arity mismatch");
  return omega_[basis_offset(s, j, v, d_, m_)];
}

const Scalar& Cochain::omega_at(std::span<const std::size_t> s, std::size_t j,
                                std::size_t v) const {
  if (s.size() + 1 != degree_) throw std::invalid_argument("omega_at: wedge arity mismatch");
  return omega_[basis_offset(s, j, v, d_, m_)];
}

Scalar& Cochain::alpha_at(std::span<const std::size_t> s, std::size_t j, std::size_t v) {
  if (degree_ < 2 || s.size() + 2 != degree_)
    throw std::invalid_argument("alpha_at: wedge arity mismatch");
  return alpha_[basis_offset(s, j, v, d_, m_)];
}

const Scalar& Cochain::alpha_at(std::span<const std::size_t> s, std::size_t j,
                                std::size_t v) const {
  if (degree_ < 2 || s.size() + 2 != degree_)
    throw std::invalid_argument("alpha_at: wedge arity mismatch");
  return alpha_[basis_offset(s, j, v, d_, m_)];
}

Vec Cochain::coefficients() const {
  Vec out;
  out.reserve(omega_.size() + alpha_.size());
  out.insert(out.end(), omega_.begin(), omega_.end());
  out.insert(out.end(), alpha_.begin(), alpha_.end());
  return out;
}

Cochain Cochain::from_coefficients(std::size_t degree, std::size_t d, std::size_t m,
                                   const Vec& coeffs) {
  Cochain c(degree, d, m);
  if (coeffs.size() != c.omega_.size() + c.alpha_.size())
    throw std::invalid_argument("from_coefficients: length mismatch");
  std::copy(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(c.omega_.size()),
            c.omega_.begin());
  std::copy(coeffs.begin() + static_cast<std::ptrdiff_t>(c.omega_.size()), coeffs.end(),
            c.alpha_.begin());
  return c;
}

namespace {

// Multilinear expansion over the nonzero coordinates of args; the first
// `wedge` slots are antisymmetrized through sort_with_sign.
Vec evaluate_part(const Vec& coeffs, std::size_t wedge, std::span<const Vec> args,
                  std::size_t d, std::size_t m) {
  const std::size_t n = args.size();
  Vec out(m);
  if (coeffs.empty()) return out;
  std::vector<std::size_t> idx(n);
  // iterative odometer over basis indices of each slot, pruning zeros
  std::vector<Scalar> prefix(n + 1);
  prefix[0] = 1;
  std::size_t pos = 0;
  idx[0] = 0;
  while (true) {
    if (idx[pos] == d) {
      if (pos == 0) break;
      --pos;
      ++idx[pos];
      continue;
    }
    const Scalar& coord = args[pos][idx[pos]];
    if (coord == 0) {
      ++idx[pos];
      continue;
    }
    prefix[pos + 1] = prefix[pos] * coord;
    if (pos + 1 < n) {
      ++pos;
      idx[pos] = 0;
      continue;
    }
    // leaf: split into wedge part and tensor slot
    auto sorted = sort_with_sign(std::span<const std::size_t>(idx.data(), wedge));
    if (sorted) {
      const auto& [s, sign] = *sorted;
      std::size_t off = (tuple_rank(s, d) * d + idx[n - 1]) * m;
      for (std::size_t v = 0; v < m; ++v) {
        const Scalar& cv = coeffs[off + v];
        if (cv != 0) out[v] += sign * prefix[n] * cv;
      }
    }
    ++idx[pos];
  }
  return out;
}

}  // namespace

Vec Cochain::evaluate_omega(std::span<const Vec> args) const {
  if (args.size() != degree_) throw std::invalid_argument("evaluate_omega: arity mismatch");
  for (const auto& a : args)
    if (a.size() != d_) throw std::invalid_argument("evaluate_omega: argument length mismatch");
  return evaluate_part(omega_, degree_ - 1, args, d_, m_);
}

Vec Cochain::evaluate_alpha(std::span<const Vec> args) const {
  if (degree_ < 2) throw std::invalid_argument("evaluate_alpha: needs degree >= 2");
  if (args.size() != degree_ - 1) throw std::invalid_argument("evaluate_alpha: arity mismatch");
  for (const auto& a : args)
    if (a.size() != d_) throw std::invalid_argument("evaluate_alpha: argument length mismatch");
  return evaluate_part(alpha_, degree_ - 2, args, d_, m_);
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (degree_ != o.degree_ || d_ != o.d_ || m_ != o.m_)
    throw std::invalid_argument("cochain add: shape mismatch");
  Cochain r = *this;
  for (std::size_t i = 0; i < omega_.size(); ++i) r.omega_[i] += o.omega_[i];
  for (std::size_t i = 0; i < alpha_.size(); ++i) r.alpha_[i] += o.alpha_[i];
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  if (degree_ != o.degree_ || d_ != o.d_ || m_ != o.m_)
    throw std::invalid_argument("cochain sub: shape mismatch");
  Cochain r = *this;
  for (std::size_t i = 0; i < omega_.size(); ++i) r.omega_[i] -= o.omega_[i];
  for (std::size_t i = 0; i < alpha_.size(); ++i) r.alpha_[i] -= o.alpha_[i];
  return r;
}

Cochain Cochain::scaled(const Scalar& s) const {
  Cochain r = *this;
  for (auto& x : r.omega_) x *= s;
  for (auto& x : r.alpha_) x *= s;
  return r;
}

namespace {

void antisymmetrize_into(Vec& coeffs, std::size_t wedge, std::size_t d, std::size_t m,
                         const BasisTable& table) {
  // coefficient at (S, j) = average of sign(sigma) * table(sigma(S), j)
  auto tuples = increasing_tuples(d, wedge);
  Scalar factorial = 1;
  for (std::size_t i = 2; i <= wedge; ++i) factorial *= static_cast<int>(i);
  for (const auto& s : tuples) {
    std::vector<std::size_t> perm = s;
    std::sort(perm.begin(), perm.end());
    for (std::size_t j = 0; j < d; ++j) {
      Vec acc(m);
      do {
        auto sorted = sort_with_sign(perm);
        Vec val = table(perm, j);
        if (val.size() != m) throw std::invalid_argument("dense table: value length mismatch");
        axpy(acc, Scalar(sorted->second), val);
      } while (std::next_permutation(perm.begin(), perm.end()));
      std::size_t off = (tuple_rank(s, d) * d + j) * m;
      for (std::size_t v = 0; v < m; ++v) coeffs[off + v] = acc[v] / factorial;
    }
  }
}

}  // namespace

Cochain omega_from_dense_table(std::size_t degree, std::size_t d, std::size_t m,
                               const BasisTable& table) {
  Cochain c(degree, d, m);
  antisymmetrize_into(c.omega_coeffs(), degree - 1, d, m, table);
  return c;
}

void set_alpha_from_dense_table(Cochain& c, const BasisTable& table) {
  if (c.degree() < 2) throw std::invalid_argument("alpha part: needs degree >= 2");
  antisymmetrize_into(c.alpha_coeffs(), c.degree() - 2, c.alg_dim(), c.coeff_dim(), table);
}

}  // namespace homprelie
