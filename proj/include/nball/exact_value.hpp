#pragma once

// Exact real value coeff * pi^(pi_half_power/2) * r^r_power.
//
// Text grammar, also accepted by parse_exact_value:
//   value   := rational [" * " pi] [" * " radius]
//   rational:= ["-"] digits ["/" digits]
//   pi      := "pi" | "pi^" exp          exp is an integer or "n/2"
//   radius  := "r"  | "r^" integer
// "pi" alone means pi^1, "r" alone r^1. Zero prints as "0".

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nball/errors.hpp"
#include "nball/rational.hpp"
#include "nball/scalar.hpp"

namespace nball {

class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(ExactRational coeff, int pi_half_power = 0, int r_power = 0)
      : coeff_(std::move(coeff)), pi_half_power_(pi_half_power), r_power_(r_power) {
    if (coeff_ == 0) pi_half_power_ = r_power_ = 0;
  }

  const ExactRational& coeff() const { return coeff_; }
  int pi_half_power() const { return pi_half_power_; }
  int r_power() const { return r_power_; }

  double to_double(double r = 1.0) const {
    double v = nball::to_double(coeff_) * std::pow(std::numbers::pi, pi_half_power_ / 2.0);
    if (r_power_ != 0) v *= std::pow(r, r_power_);
    return v;
  }

  // Substitutes an exact radius, folding r^r_power into the coefficient.
  ExactValue bind_radius(const ExactRational& r) const {
    if (r <= 0) throw domain_error("bind_radius: radius must be positive");
    return {coeff_ * pow_int(r, r_power_), pi_half_power_, 0};
  }

  ExactValue with_r_power(int r_power) const { return {coeff_, pi_half_power_, r_power}; }

  friend ExactValue operator*(const ExactValue& a, const ExactValue& b) {
    return {a.coeff_ * b.coeff_, a.pi_half_power_ + b.pi_half_power_, a.r_power_ + b.r_power_};
  }

  friend ExactValue operator/(const ExactValue& a, const ExactValue& b) {
    if (b.coeff_ == 0) throw domain_error("ExactValue: division by zero");
    return {a.coeff_ / b.coeff_, a.pi_half_power_ - b.pi_half_power_, a.r_power_ - b.r_power_};
  }

  friend bool operator==(const ExactValue&, const ExactValue&) = default;

 private:
  ExactRational coeff_ = 0;
  int pi_half_power_ = 0;
  int r_power_ = 0;
};

// Real, sqrt(2)-free exact scalars convert; anything else has no ExactValue form.
inline std::optional<ExactValue> to_exact_value(const Scalar& s) {
  const auto& x = s.exact_form();
  if (!x || x->im != 0 || x->sqrt2_power != 0) return std::nullopt;
  return ExactValue(x->re, x->pi_half_power);
}

inline Scalar to_scalar(const ExactValue& v) {
  if (v.r_power() != 0) throw domain_error("to_scalar: value still depends on r");
  return Scalar::exact(v.coeff(), 0, v.pi_half_power());
}

inline std::string to_string(const ExactValue& v) {
  if (v.coeff() == 0) return "0";
  std::string out = to_string(v.coeff());
  const int p = v.pi_half_power();
  if (p == 2) {
    out += " * pi";
  } else if (p != 0) {
    out += " * pi^" + (p % 2 == 0 ? std::to_string(p / 2) : std::to_string(p) + "/2");
  }
  if (v.r_power() == 1) {
    out += " * r";
  } else if (v.r_power() != 0) {
    out += " * r^" + std::to_string(v.r_power());
  }
  return out;
}

inline ExactValue parse_exact_value(std::string_view text) {
  auto fail = [&]() -> ExactValue {
    throw domain_error("parse_exact_value: cannot parse '" + std::string(text) + "'");
  };
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const std::size_t sep = text.find(" * ", start);
    parts.push_back(text.substr(start, sep == std::string_view::npos ? sep : sep - start));
    if (sep == std::string_view::npos) break;
    start = sep + 3;
  }
  if (parts.empty() || parts.front().empty()) return fail();
  const ExactRational coeff = parse_rational(parts.front());
  if (parts.front().find_first_of(".eE") != std::string_view::npos) return fail();

  auto parse_int = [&](std::string_view s) -> int {
    try {
      std::size_t used = 0;
      const int v = std::stoi(std::string(s), &used);
      if (used != s.size()) fail();
      return v;
    } catch (const std::exception&) {
      fail();
    }
    return 0;
  };

  int pi_half = 0;
  int r_pow = 0;
  bool seen_pi = false;
  bool seen_r = false;
  for (std::size_t n = 1; n < parts.size(); ++n) {
    const std::string_view f = parts[n];
    if (!seen_pi && !seen_r && f.substr(0, 2) == "pi") {
      seen_pi = true;
      if (f == "pi") {
        pi_half = 2;
      } else if (f.substr(0, 3) == "pi^") {
        const std::string_view e = f.substr(3);
        if (const auto slash = e.find('/'); slash != std::string_view::npos) {
          if (e.substr(slash + 1) != "2") return fail();
          pi_half = parse_int(e.substr(0, slash));
          if (pi_half % 2 == 0) return fail();
        } else {
          pi_half = 2 * parse_int(e);
        }
        if (pi_half == 0 || pi_half == 2) return fail();
      } else {
        return fail();
      }
    } else if (!seen_r && f.substr(0, 1) == "r") {
      seen_r = true;
      if (f == "r") {
        r_pow = 1;
      } else if (f.substr(0, 2) == "r^") {
        r_pow = parse_int(f.substr(2));
        if (r_pow == 0 || r_pow == 1) return fail();
      } else {
        return fail();
      }
    } else {
      return fail();
    }
  }
  if (coeff == 0 && parts.size() > 1) return fail();
  return ExactValue(coeff, pi_half, r_pow);
}

}  // namespace nball
