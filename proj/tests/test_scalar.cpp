#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "nball/scalar.hpp"

using namespace nball;

TEST_CASE("rational parsing", "[rational]") {
  CHECK(parse_rational("3/4") == rational(3, 4));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("0.25") == rational(1, 4));
  CHECK(parse_rational("1e-2") == rational(1, 100));
  CHECK(parse_rational("2.5E1") == 25);
  CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
  CHECK_THROWS_AS(parse_rational("abc"), domain_error);
  CHECK_THROWS_AS(parse_rational(""), domain_error);
}

TEST_CASE("rational powers", "[rational]") {
  CHECK(rational_power(rational(9, 4), rational(1, 2)) == rational(3, 2));
  CHECK(rational_power(rational(4), rational(-3, 2)) == rational(1, 8));
  CHECK_FALSE(rational_power(rational(2), rational(1, 2)).has_value());
  CHECK(small_rational(-0.75) == rational(-3, 4));
  CHECK_FALSE(small_rational(std::numbers::pi).has_value());
}

TEST_CASE("scalar rendering", "[scalar]") {
  CHECK(to_string(Scalar::exact(2, 0, 2)) == "2*pi");
  CHECK(to_string(Scalar::exact(0, -1, 2)) == "-i*pi");
  CHECK(to_string(Scalar::exact(2, 0, 1)) == "2*sqrt(pi)");
  CHECK(to_string(Scalar::exact(1, 0, -1)) == "pi^(-1/2)");
  CHECK(to_string(Scalar::exact(rational(1, 2), rational(1, 2), 0, 1)) == "(1/2+1/2*i)*sqrt(2)");
  CHECK(to_string(Scalar::exact(0)) == "0");
  CHECK(to_string(Scalar::numeric({1.5, -2.0})) == "(1.5-2*i)");
}

TEST_CASE("sqrt(2) powers normalize", "[scalar]") {
  CHECK(Scalar::exact(1, 0, 0, 2).exactly_equals(Scalar::exact(2)));
  CHECK(Scalar::exact(1, 0, 0, -1).exactly_equals(Scalar::exact(rational(1, 2), 0, 0, 1)));
  const Scalar root2 = Scalar::exact(1, 0, 0, 1);
  CHECK((root2 * root2).exactly_equals(Scalar::exact(2)));
}

TEST_CASE("units raised to rational powers", "[scalar]") {
  CHECK(unit_power(Unit::minus_one, rational(1, 2)).exactly_equals(Scalar::exact(0, -1)));
  CHECK(unit_power(Unit::i, rational(1, 2)).exactly_equals(Scalar::exact(rational(1, 2), rational(1, 2), 0, 1)));
  CHECK(unit_power(Unit::i, 4).exactly_equals(Scalar::exact(1)));
  CHECK_FALSE(unit_power(Unit::i, rational(1, 3)).is_exact());
}

TEST_CASE("exact and float parts stay consistent", "[scalar][property]") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> small(-6, 6);
  const Unit units[] = {Unit::one, Unit::i, Unit::minus_one, Unit::minus_i};
  for (int trial = 0; trial < 400; ++trial) {
    const ExactRational e = rational(small(rng), 1 + std::abs(small(rng)) % 4);
    const Unit u = units[trial % 4];
    const Scalar a = unit_power(u, e) * Scalar::exact(rational(small(rng), 3), 0, small(rng), 1);
    const Scalar b = Scalar::exact(rational(small(rng), 5), rational(small(rng), 7), small(rng));
    for (const Scalar& s : {a + b, a - b, a * b}) {
      if (!s.is_exact()) continue;
      const ExactCoeff& c = *s.exact_form();
      CHECK((c.value() - s.value()).abs() <= 1e-9 * std::max(1.0, s.value().abs()));
    }
    if (!b.is_zero()) {
      const Scalar q = a / b;
      CHECK((q.value() - a.value() / b.value()).abs() <= 1e-9 * std::max(1.0, q.value().abs()));
    }
  }
}

TEST_CASE("scalar powers of exact positive bases", "[scalar]") {
  const Scalar s = scalar_power(Scalar::exact(1, 0, 2), rational(-1, 2));
  CHECK(s.exactly_equals(Scalar::exact(1, 0, -1)));
  CHECK(scalar_power(Scalar::exact(4), rational(-1, 2)).exactly_equals(Scalar::exact(rational(1, 2))));
  CHECK_THROWS_AS(scalar_power(Scalar::exact(0), rational(1, 2)), domain_error);
}
