#include "levelstruct/congruence_groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "levelstruct/number_theory.hpp"

namespace levelstruct {

std::string to_string(LevelKind kind) {
  switch (kind) {
    case LevelKind::Full:
      return "full";
    case LevelKind::Point:
      return "gamma1";
    case LevelKind::Cyclic:
      return "gamma0";
  }
  return "?";
}

std::optional<LevelKind> parse_level_kind(const std::string& text) {
  if (text == "full") return LevelKind::Full;
  if (text == "gamma1") return LevelKind::Point;
  if (text == "gamma0") return LevelKind::Cyclic;
  return std::nullopt;
}

std::string SubgroupSpec::name() const {
  switch (kind) {
    case LevelKind::Full:
      return "Gamma(" + std::to_string(level) + ")";
    case LevelKind::Point:
      return "Gamma1(" + std::to_string(level) + ")";
    case LevelKind::Cyclic:
      return "Gamma0(" + std::to_string(level) + ")";
  }
  return "?";
}

void check_level(const SubgroupSpec& spec) {
  if (spec.level < 2) throw std::invalid_argument("level must be >= 2, got " + std::to_string(spec.level));
}

bool contains(const SubgroupSpec& spec, const ModMatrix2& m) {
  if (m.modulus() != spec.level)
    throw std::invalid_argument("contains: matrix modulus " + std::to_string(m.modulus()) +
                                " does not match level " + std::to_string(spec.level));
  return contains_preimage(spec, m);
}

bool contains_preimage(const SubgroupSpec& spec, const ModMatrix2& m) {
  const int n = spec.level;
  if (m.modulus() % n != 0)
    throw std::invalid_argument("contains_preimage: modulus " + std::to_string(m.modulus()) +
                                " is not a multiple of " + std::to_string(n));
  const int a = m.a() % n, b = m.b() % n, c = m.c() % n, d = m.d() % n;
  const int one = 1 % n;
  switch (spec.kind) {
    case LevelKind::Full:
      return a == one && b == 0 && c == 0 && d == one;
    case LevelKind::Point:
      return a == one && c == 0 && d == one;
    case LevelKind::Cyclic:
      return c == 0;
  }
  return false;
}

bool contains_minus_identity(const SubgroupSpec& spec) {
  check_level(spec);
  return contains(spec, ModMatrix2::minus_identity(spec.level));
}

std::int64_t index_sl2(const SubgroupSpec& spec) {
  check_level(spec);
  const std::int64_t n = spec.level;
  switch (spec.kind) {
    case LevelKind::Full:
      return sl2_order(n);
    case LevelKind::Point:
      return sl2_order(n) / n;
    case LevelKind::Cyclic:
      return dedekind_psi(n);
  }
  return 0;
}

std::int64_t index_psl2(const SubgroupSpec& spec) {
  const std::int64_t idx = index_sl2(spec);
  return contains_minus_identity(spec) ? idx : idx / 2;
}

int CosetTable::coset_of(const ModMatrix2& m) const {
  auto it = coset_index_.find(m.key());
  if (it == coset_index_.end() || m.modulus() != modulus)
    throw std::out_of_range("CosetTable: " + m.to_string() + " is not in SL2(Z/" + std::to_string(modulus) + ")");
  return it->second;
}

CosetTable coset_table(const SubgroupSpec& spec, EnumerationLimit limit, int modulus) {
  check_level(spec);
  if (modulus == 0) modulus = spec.level;
  if (modulus % spec.level != 0)
    throw std::invalid_argument("coset_table: modulus must be a multiple of the level");
  check_enumeration_bound(spec.level, limit);
  check_enumeration_bound(modulus, limit);

  const Sl2Group group = sl2_enumerate(modulus, limit);
  std::vector<ModMatrix2> subgroup;
  for (const auto& g : group.elements())
    if (contains_preimage(spec, g)) subgroup.push_back(g);

  CosetTable table;
  table.spec = spec;
  table.modulus = modulus;
  table.group_order = static_cast<std::int64_t>(group.size());
  table.subgroup_order = static_cast<std::int64_t>(subgroup.size());
  table.coset_index_.reserve(group.size());
  // Elements come sorted, so the first unassigned element is the smallest
  // member of its coset H*g.
  for (const auto& g : group.elements()) {
    if (table.coset_index_.count(g.key())) continue;
    const int id = static_cast<int>(table.cosets.size());
    table.cosets.push_back(g);
    for (const auto& h : subgroup) table.coset_index_.emplace((h * g).key(), id);
  }

  const auto s = ModMatrix2::s(modulus);
  const auto t = ModMatrix2::t(modulus);
  const auto neg = ModMatrix2::minus_identity(modulus);
  const std::size_t count = table.cosets.size();
  table.perm_s.resize(count);
  table.perm_t.resize(count);
  table.perm_neg.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    table.perm_s[i] = table.coset_of(table.cosets[i] * s);
    table.perm_t[i] = table.coset_of(table.cosets[i] * t);
    table.perm_neg[i] = table.coset_of(neg * table.cosets[i]);
  }
  table.basepoint = table.coset_of(ModMatrix2::identity(modulus));
  return table;
}

bool is_transitive(const CosetTable& table) {
  const std::size_t count = table.size();
  if (count == 0) return false;
  std::vector<char> seen(count, 0);
  std::vector<int> queue{table.basepoint};
  seen[table.basepoint] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int next : {table.perm_s[queue[head]], table.perm_t[queue[head]]}) {
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return queue.size() == count;
}

std::string CuspRep::to_string() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

namespace {

/// Integer matrix [[k, b], [m, d]] of determinant 1 with first column (k, m).
IntMatrix2 complete_column(std::int64_t k, std::int64_t m) {
  // Solve k*d - b*m = 1 by the extended Euclidean algorithm.
  std::int64_t old_r = k, r = m, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  // old_s*k + old_t*m = old_r = +-1
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {k, -old_t, m, old_s};
}

int count_cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) seen[j] = 1;
  }
  return cycles;
}

/// Permutations of S, ST and T induced on the classes {c, -c}.
struct PlusMinusAction {
  std::vector<int> class_of;  // coset -> class id
  std::vector<int> s, u, t;   // on class ids
};

PlusMinusAction plus_minus_action(const CosetTable& table) {
  PlusMinusAction out;
  const std::size_t count = table.size();
  out.class_of.assign(count, -1);
  int classes = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (out.class_of[i] >= 0) continue;
    out.class_of[i] = classes;
    out.class_of[table.perm_neg[i]] = classes;
    ++classes;
  }
  out.s.assign(classes, -1);
  out.u.assign(classes, -1);
  out.t.assign(classes, -1);
  for (std::size_t i = 0; i < count; ++i) {
    const int c = out.class_of[i];
    out.s[c] = out.class_of[table.perm_s[i]];
    out.t[c] = out.class_of[table.perm_t[i]];
    out.u[c] = out.class_of[table.perm_t[table.perm_s[i]]];
  }
  return out;
}

}  // namespace

CuspPartition cusp_partition(const CosetTable& table) {
  const std::size_t count = table.size();
  const bool has_minus_identity = table.perm_neg[table.basepoint] == table.basepoint;

  // Orbits of <T, -I> acting on the right of the cosets.
  std::vector<int> orbit_of(count, -1);
  std::vector<int> orbit_size;
  std::vector<int> orbit_seed;
  for (std::size_t i = 0; i < count; ++i) {
    if (orbit_of[i] >= 0) continue;
    const int id = static_cast<int>(orbit_size.size());
    std::vector<int> stack{static_cast<int>(i)};
    orbit_of[i] = id;
    int size = 0;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      ++size;
      for (int next : {table.perm_t[c], table.perm_neg[c]}) {
        if (orbit_of[next] < 0) {
          orbit_of[next] = id;
          stack.push_back(next);
        }
      }
    }
    orbit_size.push_back(size);
    orbit_seed.push_back(static_cast<int>(i));
  }

  const std::size_t orbits = orbit_size.size();
  std::vector<std::optional<CuspClass>> found(orbits);
  std::vector<int> order;  // orbit ids in canonical order
  const std::int64_t n = table.modulus;
  auto try_rep = [&](std::int64_t k, std::int64_t m) {
    const IntMatrix2 lift = complete_column(k, m);
    const int orbit = orbit_of[table.coset_of(ModMatrix2(table.modulus, lift))];
    if (found[orbit]) return;
    CuspClass cusp{{k, m}, 0, true, lift};
    found[orbit] = cusp;
    order.push_back(orbit);
  };
  try_rep(1, 0);
  for (std::int64_t m = 1; m <= 2 * n && order.size() < orbits; ++m) {
    for (std::int64_t k = 0; k <= n * m + n && order.size() < orbits; ++k) {
      if (std::gcd(k, m) == 1) try_rep(k, m);
    }
  }
  if (order.size() != orbits) throw std::logic_error("cusps: failed to find representatives for every orbit");

  std::vector<int> rank(orbits);
  for (std::size_t i = 0; i < orbits; ++i) rank[order[i]] = static_cast<int>(i);
  CuspPartition partition;
  partition.class_of_coset.resize(count);
  for (std::size_t i = 0; i < count; ++i) partition.class_of_coset[i] = rank[orbit_of[i]];
  std::vector<CuspClass>& out = partition.classes;
  out.reserve(orbits);
  for (int orbit : order) {
    CuspClass cusp = *found[orbit];
    if (has_minus_identity) {
      cusp.width = orbit_size[orbit];
      cusp.regular = true;
    } else {
      cusp.width = orbit_size[orbit] / 2;
      // Irregular exactly when the T-cycle already contains the negated coset.
      int seed = orbit_seed[orbit];
      int cycle = 1;
      for (int c = table.perm_t[seed]; c != seed; c = table.perm_t[c]) ++cycle;
      cusp.regular = cycle * 2 == orbit_size[orbit];
    }
    out.push_back(cusp);
  }
  return partition;
}

std::vector<CuspClass> cusps(const CosetTable& table) { return cusp_partition(table).classes; }

std::vector<CuspClass> cusps(const SubgroupSpec& spec, EnumerationLimit limit) {
  return cusps(coset_table(spec, limit));
}

std::optional<std::int64_t> cusp_count_closed_form(const SubgroupSpec& spec) {
  check_level(spec);
  if (spec.kind != LevelKind::Cyclic) return std::nullopt;
  std::int64_t total = 0;
  for (std::int64_t d : divisors(spec.level)) total += euler_phi(std::gcd(d, spec.level / d));
  return total;
}

EllipticCounts elliptic_counts(const SubgroupSpec& spec) {
  check_level(spec);
  const std::int64_t n = spec.level;
  switch (spec.kind) {
    case LevelKind::Full:
      return {0, 0};
    case LevelKind::Point:
      if (n == 2) return {1, 0};
      if (n == 3) return {0, 1};
      return {0, 0};
    case LevelKind::Cyclic: {
      EllipticCounts out{1, 1};
      const auto factors = factorize(n);
      if (n % 4 == 0) out.e2 = 0;
      if (n % 9 == 0) out.e3 = 0;
      for (const auto& [p, e] : factors) {
        // (-1/p) and (-3/p) with the Kronecker values at p = 2 and p = 3.
        const int chi4 = p == 2 ? 0 : legendre(-1, p);
        const int chi3 = p == 3 ? 0 : (p == 2 ? -1 : legendre(-3, p));
        out.e2 *= 1 + chi4;
        out.e3 *= 1 + chi3;
      }
      return out;
    }
  }
  return {};
}

EllipticCounts elliptic_counts(const CosetTable& table) {
  const PlusMinusAction action = plus_minus_action(table);
  EllipticCounts out;
  for (std::size_t c = 0; c < action.s.size(); ++c) {
    if (action.s[c] == static_cast<int>(c)) ++out.e2;
    if (action.u[c] == static_cast<int>(c)) ++out.e3;
  }
  return out;
}

std::int64_t genus(const SubgroupSpec& spec) {
  check_level(spec);
  const std::int64_t n = spec.level;
  Rational g;
  switch (spec.kind) {
    case LevelKind::Full:
      if (n == 2) return 0;
      g = Rational(1) + Rational(index_psl2(spec) * (n - 6), 12 * n);
      break;
    case LevelKind::Point: {
      if (n <= 4) return 0;
      std::int64_t cusp_sum = 0;
      for (std::int64_t d : divisors(n)) cusp_sum += euler_phi(d) * euler_phi(n / d);
      g = Rational(1) + Rational(index_psl2(spec), 12) - Rational(cusp_sum, 4);
      break;
    }
    case LevelKind::Cyclic: {
      const EllipticCounts e = elliptic_counts(spec);
      g = Rational(1) + Rational(index_psl2(spec), 12) - Rational(e.e2, 4) - Rational(e.e3, 3) -
          Rational(*cusp_count_closed_form(spec), 2);
      break;
    }
  }
  return g.to_int64();
}

std::int64_t genus(const CosetTable& table) {
  const PlusMinusAction action = plus_minus_action(table);
  const std::int64_t degree = static_cast<std::int64_t>(action.s.size());
  std::int64_t ramification = 0;
  for (const auto* perm : {&action.s, &action.u, &action.t}) ramification += degree - count_cycles(*perm);
  // 2g - 2 = -2 * degree + ramification
  const std::int64_t twice = ramification - 2 * degree + 2;
  if (twice % 2 != 0 || twice < 0) throw std::logic_error("genus: Riemann-Hurwitz produced a non-integral genus");
  return twice / 2;
}

Rational deg_lambda(const SubgroupSpec& spec) { return Rational(index_psl2(spec), 12); }

CurveInvariants curve_invariants(const SubgroupSpec& spec, EnumerationLimit limit) {
  const CosetTable table = coset_table(spec, limit);
  CurveInvariants out{spec, index_sl2(spec), index_psl2(spec), cusps(table), 0, 0, genus(spec)};
  const EllipticCounts closed = elliptic_counts(spec);
  out.e2 = closed.e2;
  out.e3 = closed.e3;

  auto fail = [&](const std::string& what) {
    throw std::logic_error("curve_invariants(" + spec.name() + "): closed form and coset oracle disagree on " + what);
  };
  if (static_cast<std::int64_t>(table.size()) != out.index_sl2) fail("index");
  if (elliptic_counts(table) != closed) fail("elliptic counts");
  if (genus(table) != out.genus) fail("genus");
  std::int64_t width_sum = 0;
  for (const auto& c : out.cusp_classes) width_sum += c.width;
  if (width_sum != out.index_psl2) fail("cusp widths");
  if (auto count = cusp_count_closed_form(spec); count && *count != static_cast<std::int64_t>(out.cusp_classes.size()))
    fail("cusp count");
  return out;
}

}  // namespace levelstruct
