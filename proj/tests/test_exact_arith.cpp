#include <doctest.h>

#include <random>
#include <set>

#include "levelstruct/mod_matrix.hpp"
#include "levelstruct/number_theory.hpp"
#include "levelstruct/rational.hpp"

using namespace levelstruct;

TEST_CASE("rational normal form") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("4/2") == Rational(2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("rational overflow is reported, not wrapped") {
  Rational big(static_cast<long long>(1) << 62);
  CHECK_THROWS_AS(big * big * big, std::overflow_error);
}

TEST_CASE("rational arithmetic round-trips (random)") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long long> num(-100000, 100000), den(1, 5000);
  for (int i = 0; i < 5000; ++i) {
    const Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
    CHECK(Rational::parse(x.to_string()) == x);
    CHECK(((x < y) || (y < x) || (x == y)));
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(25) == Factorization{{5, 2}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-3), std::invalid_argument);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t product = 1, last = 1;
    for (const auto& pp : factorize(n)) {
      CHECK(pp.prime > last);
      CHECK(is_prime(pp.prime));
      last = pp.prime;
      for (int e = 0; e < pp.exponent; ++e) product *= pp.prime;
    }
    CHECK(product == n);
  }
}

TEST_CASE("legendre against exhaustive squares") {
  CHECK(legendre(-1, 5) == 1);
  CHECK(legendre(-1, 7) == -1);
  CHECK(legendre(-3, 13) == 1);
  CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 9), std::invalid_argument);
  for (std::int64_t p = 3; p < 200; p += 2) {
    if (!is_prime(p)) continue;
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::int64_t a = -2 * p; a <= 2 * p; ++a) {
      const std::int64_t r = mod_floor(a, p);
      const int expected = r == 0 ? 0 : (squares.contains(r) ? 1 : -1);
      CHECK(legendre(a, p) == expected);
    }
  }
}

TEST_CASE("sl2 enumeration: small sizes") {
  CHECK(sl2_enumerate(2).size() == 6);
  CHECK(sl2_enumerate(3).size() == 24);
  CHECK(sl2_enumerate(4).size() == 48);
}

TEST_CASE("sl2 enumeration matches a scan of all N^4 matrices") {
  for (int n = 2; n <= 12; ++n) {
    const Sl2Group g = sl2_enumerate(n);
    std::size_t count = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            if (mod_floor(a * d - b * c, n) == 1 % n) {
              ++count;
              CHECK(g.contains(ModMatrix2(n, a, b, c, d)));
            }
    CHECK(count == g.size());
  }
}

TEST_CASE("sl2 enumeration size matches the product formula up to 60") {
  for (int n = 2; n <= 60; ++n) {
    std::int64_t expected = static_cast<std::int64_t>(n) * n * n;
    for (const auto& pp : factorize(n)) expected = expected / (pp.prime * pp.prime) * (pp.prime * pp.prime - 1);
    CHECK(static_cast<std::int64_t>(sl2_enumerate(n).size()) == expected);
  }
}

TEST_CASE("sl2 enumeration is closed under products and inverses") {
  for (int n : {2, 3, 4, 6, 8}) {
    const Sl2Group g = sl2_enumerate(n);
    for (const auto& x : g.elements()) {
      CHECK(g.contains(x.inverse()));
      CHECK((x * x.inverse()).is_identity());
      for (const auto& y : g.elements()) CHECK(g.contains(x * y));
    }
  }
}

TEST_CASE("sl2 enumeration bounds") {
  CHECK_THROWS_AS(sl2_enumerate(1), std::invalid_argument);
  CHECK_THROWS_AS(sl2_enumerate(61), EnumerationBoundExceeded);
  CHECK_THROWS_AS(sl2_enumerate(12, EnumerationLimit{10}), EnumerationBoundExceeded);
  CHECK(sl2_enumerate(61, EnumerationLimit{61}).size() == 226920);  // 61^3 - 61
}

TEST_CASE("mod matrices") {
  CHECK_THROWS_AS(ModMatrix2(5, 1, 1, 1, 1), std::invalid_argument);
  const ModMatrix2 s = ModMatrix2::s(7), t = ModMatrix2::t(7);
  CHECK(s.pow(4).is_identity());
  CHECK(s.pow(2) == ModMatrix2::minus_identity(7));
  CHECK((s * t).pow(6).is_identity());
  CHECK(t.pow(7).is_identity());
  const ModMatrix2 m(12, 5, 7, 2, 3);
  CHECK(m.reduce(4) == ModMatrix2(4, 1, 3, 2, 3));
  const Sl2Group group = sl2_enumerate(12);
  for (const auto& g : group.elements()) {
    const IntMatrix2 lift = lift_to_sl2z(g);
    CHECK(lift.det() == 1);
    CHECK(ModMatrix2(12, lift) == g);
  }
}
