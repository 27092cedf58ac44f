#include "homprelie/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace homprelie {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_rational(std::string_view token) {
  auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(token))
      throw std::invalid_argument("not a rational token: '" + std::string(token) + "'");
    return Scalar(std::string(token));
  }
  std::string_view num = token.substr(0, slash);
  std::string_view den = token.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw std::invalid_argument("not a rational token: '" + std::string(token) + "'");
  boost::multiprecision::mpz_int p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  return Scalar(p, q);  // mpq canonicalizes sign and gcd
}

std::string format_rational(const Scalar& q) {
  return q.str();
}

}  // namespace homprelie
