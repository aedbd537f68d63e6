#pragma once

// Arbitrary-precision rationals. Backed by Boost.Multiprecision, whose
// cpp_rational is always kept in lowest terms with a positive denominator.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "nball/errors.hpp"

namespace nball {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline ExactRational rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw domain_error("rational: zero denominator");
  return ExactRational(BigInt(num), BigInt(den));
}

inline BigInt num(const ExactRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const ExactRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const ExactRational& q) { return den(q) == 1; }

// True for k + 1/2, k any integer.
inline bool is_half_integer(const ExactRational& q) { return den(q) == 2; }

inline double to_double(const ExactRational& q) { return q.convert_to<double>(); }

inline std::string to_string(const ExactRational& q) { return q.str(); }

// Every finite double is a dyadic rational; this conversion is exact.
inline ExactRational exact_from_double(double x) {
  if (!std::isfinite(x)) throw domain_error("exact_from_double: non-finite input");
  return ExactRational(x);
}

// Rational with denominator <= max_den that equals x exactly, if any.
inline std::optional<ExactRational> small_rational(double x, int max_den = 64) {
  if (!std::isfinite(x)) return std::nullopt;
  for (int d = 1; d <= max_den; ++d) {
    const double scaled = x * d;
    if (std::abs(scaled) < 9e15 && scaled == std::nearbyint(scaled)) {
      const auto n = static_cast<std::int64_t>(std::nearbyint(scaled));
      const ExactRational q = rational(n, d);
      if (to_double(q) == x) return q;
    }
  }
  return std::nullopt;
}

inline ExactRational pow_int(const ExactRational& base, long long e) {
  if (e < 0) {
    if (base == 0) throw domain_error("pow_int: zero to a negative power");
    return 1 / pow_int(base, -e);
  }
  ExactRational result = 1;
  ExactRational b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

// q^e for e with denominator 1 or 2, when the result is rational.
inline std::optional<ExactRational> rational_power(const ExactRational& q, const ExactRational& e) {
  if (is_integer(e)) return pow_int(q, num(e).convert_to<long long>());
  if (!is_half_integer(e) || q < 0) return std::nullopt;
  auto rn = exact_isqrt(num(q));
  auto rd = exact_isqrt(den(q));
  if (!rn || !rd) return std::nullopt;
  const ExactRational root(*rn, *rd);
  const BigInt twice = num(e);  // e = twice / 2
  return pow_int(root, twice.convert_to<long long>());
}

// Accepts "a", "a/b", decimals and scientific notation ("2.5", "-1e-3").
inline ExactRational parse_rational(std::string_view text) {
  auto fail = [&]() -> ExactRational {
    throw domain_error("parse_rational: cannot parse '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const ExactRational n = parse_rational(text.substr(0, slash));
    const ExactRational d = parse_rational(text.substr(slash + 1));
    if (!is_integer(n) || !is_integer(d) || d == 0) return fail();
    return n / d;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  BigInt digits = 0;
  long long scale = 0;
  bool any = false;
  bool dot = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (dot) --scale;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) return fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return fail();
    const std::string exponent(text.substr(i + 1));
    if (exponent.empty()) return fail();
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(exponent, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exponent.size()) return fail();
    scale += e;
  }
  ExactRational value(digits);
  value *= pow_int(ExactRational(10), scale);
  return negative ? ExactRational(-value) : value;
}

}  // namespace nball
