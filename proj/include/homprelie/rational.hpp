/**
 * Exact rational scalars: the ground field for every computation in this
 * library. Backed by GMP through Boost.Multiprecision; values stay in
 * canonical form (gcd(|p|, q) = 1, q > 0) after every operation.
 */

#ifndef HOMPRELIE_RATIONAL_HPP
#define HOMPRELIE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace homprelie {

using Scalar = boost::multiprecision::mpq_rational;

/**
 * Parse a rational token: an optional-sign integer, or `p/q` with q > 0
 * after normalization. Decimal notation is rejected.
 *
 * Throws std::invalid_argument on malformed input.
 */
Scalar parse_rational(std::string_view token);

/** Format as `p` or `p/q`, matching the file formats used by the CLI. */
std::string format_rational(const Scalar& q);

}  // namespace homprelie

#endif
