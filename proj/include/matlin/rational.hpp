#ifndef MATLIN_RATIONAL_HPP
#define MATLIN_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace matlin {

/// Exact rational backed by GMP. Values are always canonical: reduced,
/// positive denominator, zero is 0/1.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rat parse_rat(std::string_view text);

/// Serializes as "p/q", or "p" when the denominator is one.
std::string to_string(const Rat& value);

}  // namespace matlin

#endif
