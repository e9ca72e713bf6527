#include "hamsense/numeric.hpp"

#include <charconv>
#include <string>

#include "hamsense/errors.hpp"

namespace hamsense {

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Rational rational_pow(const Rational& base, std::uint64_t exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt floor_of(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_fraction(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return format_fraction(q);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::uint64_t to_u64(const BigInt& value, std::string_view what) {
  if (value < 0 || value > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw ResourceLimit(std::string(what) + " does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace hamsense
