#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamsense {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);
Rational rational_pow(const Rational& base, std::uint64_t exponent);

// Ceiling/floor of a rational as a big integer.
BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

// Parses "p/q", "-p/q" or a plain integer. Throws InvalidInput.
Rational parse_rational(std::string_view text);

// Always "p/q" with q >= 1 (e.g. "3/1", "-1/2").
std::string format_fraction(const Rational& q);

// "3" for integers, "-1/2" otherwise.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

// Narrowing that throws ResourceLimit instead of wrapping.
std::uint64_t to_u64(const BigInt& value, std::string_view what);

}  // namespace hamsense
