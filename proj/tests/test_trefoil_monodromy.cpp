#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "levelstruct/trefoil_monodromy.hpp"

using namespace levelstruct;

namespace {

constexpr LevelKind kKinds[] = {LevelKind::Full, LevelKind::Point, LevelKind::Cyclic};

std::map<std::pair<int, int>, int> shape(const KComponentReport& r) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& c : r.components) ++out[{c.branch_order, c.core_degree}];
  return out;
}

}  // namespace

TEST_CASE("braid words") {
  CHECK(BraidWord::parse("xXyY").to_string() == "xXyY");
  CHECK(BraidWord::parse("x y").letters.size() == 2);
  CHECK_THROWS_AS(BraidWord::parse("xz"), std::invalid_argument);
}

TEST_CASE("braid images") {
  for (int n = 2; n <= 60; ++n) {
    const ModMatrix2 x3 = braid_to_sl2(BraidWord::parse("xxx"), n);
    CHECK(x3 == braid_to_sl2(BraidWord::parse("yy"), n));
    CHECK(x3 == ModMatrix2::minus_identity(n));
    CHECK(braid_to_sl2(BraidWord::parse("xxxYY"), n).is_identity());
    CHECK(meridian_image(n) == ModMatrix2(n, 1, 0, 1, 1));
    CHECK(longitude_image(n) == ModMatrix2::minus_identity(n));
  }
  CHECK_THROWS_AS(braid_to_sl2(BraidWord::parse("x"), 1), std::invalid_argument);
}

TEST_CASE("fiber set sizes") {
  CHECK(fiber_set(LevelKind::Point, 6).size() == 24);
  CHECK(fiber_set(LevelKind::Cyclic, 4).size() == 6);
  CHECK(fiber_set(LevelKind::Full, 3).size() == 24);
  for (LevelKind kind : kKinds)
    for (int n = 2; n <= 20; ++n) {
      const std::int64_t expected = kind == LevelKind::Full ? sl2_enumerate(n).size() : index_sl2({kind, n});
      CHECK(static_cast<std::int64_t>(fiber_set(kind, n).size()) == expected);
    }
}

TEST_CASE("monodromy is transitive and stabilizers are the subgroups") {
  CHECK(monodromy_orbits(fiber_set(LevelKind::Point, 5)).orbit_size == 24);
  CHECK(monodromy_orbits(fiber_set(LevelKind::Cyclic, 2)).orbit_size == 3);
  CHECK(monodromy_orbits(fiber_set(LevelKind::Full, 2)).orbit_size == 6);
  for (LevelKind kind : kKinds) {
    for (int n = 2; n <= 20; ++n) {
      const MonodromyCertificate cert = monodromy_orbits(fiber_set(kind, n));
      CAPTURE(n);
      CHECK(cert.transitive);
      CHECK(cert.stabilizer_matches);
    }
  }
}

TEST_CASE("stabilizers of moved points are conjugates (random sample)") {
  std::mt19937 rng(7);
  for (LevelKind kind : kKinds) {
    for (int n : {4, 6, 9}) {
      const FiberSet fibers = fiber_set(kind, n);
      const Sl2Group group = sl2_enumerate(n);
      std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
      for (int i = 0; i < 8; ++i) CHECK(stabilizer_is_conjugate(fibers, group, group[pick(rng)]));
    }
  }
}

TEST_CASE("cover over K: examples") {
  const auto p5 = cover_over_K(LevelKind::Point, 5);
  CHECK(p5.components.size() == 4);
  CHECK(shape(p5) == std::map<std::pair<int, int>, int>{{{1, 2}, 2}, {{5, 2}, 2}});

  const auto p4 = cover_over_K(LevelKind::Point, 4);
  CHECK(shape(p4) == std::map<std::pair<int, int>, int>{{{1, 2}, 1}, {{2, 1}, 1}, {{4, 2}, 1}});
  for (const auto& c : p4.components)
    if (c.branch_order == 2) CHECK(c.cusp.to_string() == "1/2");

  const auto c3 = cover_over_K(LevelKind::Cyclic, 3);
  CHECK(shape(c3) == std::map<std::pair<int, int>, int>{{{1, 1}, 1}, {{3, 1}, 1}});
}

TEST_CASE("cover over K: primes split half and half") {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto r = cover_over_K(LevelKind::Point, p);
    CHECK(static_cast<int>(r.components.size()) == p - 1);
    CHECK(shape(r) == std::map<std::pair<int, int>, int>{{{1, 2}, (p - 1) / 2}, {{p, 2}, (p - 1) / 2}});
  }
}

TEST_CASE("cover over K: components match cusps and exhaust the fiber") {
  for (LevelKind kind : kKinds) {
    for (int n = 2; n <= 20; ++n) {
      const auto r = cover_over_K(kind, n);
      const auto cs = cusps({kind, n});
      CAPTURE(n);
      CHECK(r.components.size() == cs.size());
      int total = 0;
      for (const auto& c : r.components) {
        total += c.size;
        CHECK(c.size == c.branch_order * c.core_degree);
        CHECK((n % c.branch_order) == 0);
        CHECK(c.cusp == cs[c.cusp_index].rep);
      }
      CHECK(total == static_cast<int>(r.fiber_size));
    }
  }
}
