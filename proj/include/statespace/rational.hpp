#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace statespace {

// Exact rational scalar. GMP keeps values canonical: lowest terms,
// denominator > 0. All geometry in this library is computed with these;
// floating point appears only in the analytic models.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p" (sign on the numerator). Throws std::invalid_argument
/// on malformed input or zero denominator. Result is canonical.
Rational parse_rational(std::string_view text);

/// Parses "p/q", "p", or a decimal like "-0.25" (decimals are exact
/// rationals). Throws std::invalid_argument on malformed input.
Rational parse_decimal_or_rational(std::string_view text);

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Total bits in numerator plus denominator; used to pick small pivots.
std::size_t bit_size(const Rational& value);

using Vec = std::vector<Rational>;
using Point = Vec;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

std::string to_string(const Vec& v);

}  // namespace statespace
