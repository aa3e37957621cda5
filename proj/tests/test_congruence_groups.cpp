#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <map>
#include <set>

#include "levelstruct/congruence_groups.hpp"
#include "levelstruct/number_theory.hpp"

using namespace levelstruct;

namespace {

constexpr LevelKind kKinds[] = {LevelKind::Full, LevelKind::Point, LevelKind::Cyclic};

// Defining congruences, written out independently of the library.
bool in_subgroup(LevelKind kind, int n, int a, int b, int c, int d) {
  switch (kind) {
    case LevelKind::Full:
      return a == 1 % n && b == 0 && c == 0 && d == 1 % n;
    case LevelKind::Point:
      return a == 1 % n && c == 0 && d == 1 % n;
    case LevelKind::Cyclic:
      return c == 0;
  }
  return false;
}

struct Scan {
  std::int64_t group = 0;
  std::vector<std::array<int, 4>> subgroup;
};

Scan scan(LevelKind kind, int n) {
  Scan out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (mod_floor(a * d - b * c, n) != 1 % n) continue;
          ++out.group;
          if (in_subgroup(kind, n, a, b, c, d)) out.subgroup.push_back({a, b, c, d});
        }
  return out;
}

// Cusps of H as H-orbits on column vectors (a, c) of order n, up to sign.
std::size_t cusp_count_oracle(LevelKind kind, int n) {
  const Scan s = scan(kind, n);
  auto canon = [n](int a, int c) {
    const std::pair<int, int> p{a, c}, q{mod_floor(-a, n), mod_floor(-c, n)};
    return std::min(p, q);
  };
  std::set<std::pair<int, int>> seen;
  std::size_t orbits = 0;
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      if (std::gcd(std::gcd(a, c), n) != 1 || seen.contains(canon(a, c))) continue;
      ++orbits;
      std::vector<std::pair<int, int>> stack{canon(a, c)};
      seen.insert(stack.back());
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (const auto& h : s.subgroup) {
          const auto next = canon(mod_floor(h[0] * x + h[1] * y, n), mod_floor(h[2] * x + h[3] * y, n));
          if (seen.insert(next).second) stack.push_back(next);
        }
      }
    }
  }
  return orbits;
}

int count_roots(int n, int b, int c) {
  int count = 0;
  for (int x = 0; x < n; ++x)
    if (mod_floor(x * x + b * x + c, n) == 0) ++count;
  return count;
}

}  // namespace

TEST_CASE("membership") {
  CHECK(contains({LevelKind::Point, 4}, ModMatrix2(4, 1, 3, 0, 1)));
  CHECK_FALSE(contains({LevelKind::Point, 4}, ModMatrix2::minus_identity(4)));
  CHECK(contains({LevelKind::Cyclic, 4}, ModMatrix2::minus_identity(4)));
  CHECK_THROWS_AS(contains({LevelKind::Point, 4}, ModMatrix2::identity(8)), std::invalid_argument);
  CHECK(contains_minus_identity({LevelKind::Full, 2}));
  CHECK(contains_minus_identity({LevelKind::Point, 2}));
  CHECK_FALSE(contains_minus_identity({LevelKind::Point, 3}));
  CHECK_FALSE(contains_minus_identity({LevelKind::Full, 3}));
}

TEST_CASE("level kind names") {
  CHECK(parse_level_kind("gamma1") == LevelKind::Point);
  CHECK(parse_level_kind("full") == LevelKind::Full);
  CHECK(parse_level_kind("gamma0") == LevelKind::Cyclic);
  CHECK_FALSE(parse_level_kind("gamma2").has_value());
  CHECK(to_string(LevelKind::Cyclic) == "gamma0");
}

TEST_CASE("indices") {
  CHECK(index_psl2({LevelKind::Full, 3}) == 12);
  CHECK(index_sl2({LevelKind::Cyclic, 6}) == 12);
  CHECK(index_sl2({LevelKind::Full, 4}) / index_sl2({LevelKind::Full, 2}) == 8);
  CHECK(index_sl2({LevelKind::Point, 2}) == 3);
  CHECK_THROWS_AS(index_sl2({LevelKind::Full, 1}), std::invalid_argument);
}

TEST_CASE("index equals |SL2(Z/N)| / |H| from a direct scan") {
  for (LevelKind kind : kKinds) {
    for (int n = 2; n <= 16; ++n) {
      const Scan s = scan(kind, n);
      CAPTURE(n);
      CHECK(index_sl2({kind, n}) * static_cast<std::int64_t>(s.subgroup.size()) == s.group);
    }
  }
}

TEST_CASE("coset tables") {
  CHECK(coset_table({LevelKind::Point, 5}).size() == 24);
  CHECK(coset_table({LevelKind::Full, 2}).size() == 6);
  CHECK(coset_table({LevelKind::Cyclic, 4}).size() == 6);
  for (LevelKind kind : kKinds) {
    for (int n = 2; n <= 30; ++n) {
      const CosetTable t = coset_table({kind, n});
      CAPTURE(n);
      CHECK(static_cast<std::int64_t>(t.size()) == index_sl2({kind, n}));
      CHECK(is_transitive(t));
      // S^2 = -I acts as the -I permutation.
      for (std::size_t c = 0; c < t.size(); ++c) CHECK(t.perm_s[t.perm_s[c]] == t.perm_neg[c]);
    }
  }
  CHECK_THROWS_AS(coset_table({LevelKind::Full, 70}), EnumerationBoundExceeded);
}

TEST_CASE("cusp examples") {
  const auto full2 = cusps({LevelKind::Full, 2});
  CHECK(full2.size() == 3);
  for (const auto& c : full2) {
    CHECK(c.width == 2);
    CHECK(c.regular);
  }

  const auto g14 = cusps({LevelKind::Point, 4});
  CHECK(g14.size() == 3);
  for (const auto& c : g14) CHECK(c.regular == !(c.rep.to_string() == "1/2"));

  const auto c7 = cusps({LevelKind::Cyclic, 7});
  std::multiset<int> widths;
  for (const auto& c : c7) widths.insert(c.width);
  CHECK(widths == std::multiset<int>{1, 7});
  CHECK(c7.front().rep.to_string() == "1/0");
}

TEST_CASE("cusp counts match an orbit count on primitive vectors") {
  for (LevelKind kind : kKinds) {
    for (int n = 2; n <= 18; ++n) {
      CAPTURE(n);
      CHECK(cusps({kind, n}).size() == cusp_count_oracle(kind, n));
    }
  }
}

TEST_CASE("cusp widths sum to the PSL2 index") {
  for (LevelKind kind : kKinds) {
    for (int n = 2; n <= 30; ++n) {
      std::int64_t sum = 0;
      for (const auto& c : cusps({kind, n})) sum += c.width;
      CAPTURE(n);
      CHECK(sum == index_psl2({kind, n}));
    }
  }
}

TEST_CASE("cyclic cusp closed form") {
  for (int n = 2; n <= 30; ++n)
    CHECK(cusp_count_closed_form({LevelKind::Cyclic, n}) == static_cast<std::int64_t>(cusps({LevelKind::Cyclic, n}).size()));
  CHECK_FALSE(cusp_count_closed_form({LevelKind::Point, 5}).has_value());
}

TEST_CASE("elliptic counts") {
  CHECK(elliptic_counts({LevelKind::Cyclic, 5}) == EllipticCounts{2, 0});
  CHECK(elliptic_counts({LevelKind::Cyclic, 13}) == EllipticCounts{2, 2});
  CHECK(elliptic_counts({LevelKind::Point, 3}) == EllipticCounts{0, 1});
  for (int n = 2; n <= 30; ++n) {
    CAPTURE(n);
    // Gamma0: roots of x^2 + 1 and x^2 + x + 1 mod N.
    const EllipticCounts want{count_roots(n, 0, 1), count_roots(n, 1, 1)};
    CHECK(elliptic_counts({LevelKind::Cyclic, n}) == want);
    CHECK(elliptic_counts(coset_table({LevelKind::Cyclic, n})) == want);
    for (LevelKind kind : kKinds) CHECK(elliptic_counts({kind, n}) == elliptic_counts(coset_table({kind, n})));
    CHECK(elliptic_counts({LevelKind::Full, n}) == EllipticCounts{});
    if (n >= 4) CHECK(elliptic_counts({LevelKind::Point, n}) == EllipticCounts{});
  }
}

TEST_CASE("genus: closed form, Riemann-Hurwitz, known values") {
  for (LevelKind kind : kKinds)
    for (int n = 2; n <= 30; ++n) CHECK(genus({kind, n}) == genus(coset_table({kind, n})));

  const std::map<int, int> x0 = {{11, 1}, {14, 1}, {15, 1}, {17, 1}, {19, 1}, {20, 1}, {21, 1}, {22, 2},
                                 {23, 2}, {24, 1}, {26, 2}, {27, 1}, {28, 2}, {29, 2}, {30, 3}};
  for (int n = 2; n <= 30; ++n) {
    const auto it = x0.find(n);
    CHECK(genus({LevelKind::Cyclic, n}) == (it == x0.end() ? 0 : it->second));
  }
  const std::map<int, int> x1 = {{11, 1}, {13, 2}, {14, 1}, {15, 1}, {16, 2}, {17, 5}, {18, 2}, {19, 7}, {20, 3}};
  for (const auto& [n, g] : x1) CHECK(genus({LevelKind::Point, n}) == g);
  for (int n = 2; n <= 10; ++n) CHECK(genus({LevelKind::Point, n}) == 0);
  CHECK(genus({LevelKind::Point, 12}) == 0);
  CHECK(genus({LevelKind::Full, 5}) == 0);
  CHECK(genus({LevelKind::Full, 6}) == 1);
  CHECK(genus({LevelKind::Full, 7}) == 3);
  CHECK(genus({LevelKind::Full, 8}) == 5);
}

TEST_CASE("genus formula is an exact integer") {
  for (LevelKind kind : kKinds) {
    for (int n = 2; n <= 30; ++n) {
      const CurveInvariants inv = curve_invariants({kind, n});
      const Rational g = Rational(1) + Rational(inv.index_psl2, 12) - Rational(inv.e2, 4) - Rational(inv.e3, 3) -
                         Rational(static_cast<std::int64_t>(inv.cusp_classes.size()), 2);
      CHECK(g.is_integer());
      CHECK(g == Rational(inv.genus));
      CHECK(inv.genus >= 0);
    }
  }
}

TEST_CASE("deg lambda") {
  CHECK(deg_lambda({LevelKind::Full, 3}) == 1);
  CHECK(deg_lambda({LevelKind::Point, 5}) == 1);
  CHECK(deg_lambda({LevelKind::Point, 6}) == 1);
  CHECK(deg_lambda({LevelKind::Point, 7}) == 2);
  for (LevelKind kind : kKinds)
    for (int n = 2; n <= 30; ++n) CHECK(deg_lambda({kind, n}) == Rational(index_psl2({kind, n}), 12));
}
