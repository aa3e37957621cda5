#include "levelstruct/trefoil_monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "levelstruct/number_theory.hpp"

namespace levelstruct {

BraidWord BraidWord::parse(const std::string& text) {
  BraidWord word;
  for (char ch : text) {
    switch (ch) {
      case 'x':
        word.letters.push_back(BraidLetter::X);
        break;
      case 'X':
        word.letters.push_back(BraidLetter::XInverse);
        break;
      case 'y':
        word.letters.push_back(BraidLetter::Y);
        break;
      case 'Y':
        word.letters.push_back(BraidLetter::YInverse);
        break;
      case ' ':
      case '\t':
        break;
      default:
        throw std::invalid_argument(std::string("BraidWord::parse: unexpected letter '") + ch + "'");
    }
  }
  return word;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (auto letter : letters) {
    switch (letter) {
      case BraidLetter::X:
        out += 'x';
        break;
      case BraidLetter::XInverse:
        out += 'X';
        break;
      case BraidLetter::Y:
        out += 'y';
        break;
      case BraidLetter::YInverse:
        out += 'Y';
        break;
    }
  }
  return out;
}

ModMatrix2 braid_to_sl2(const BraidWord& word, int modulus) {
  if (modulus < 2) throw std::invalid_argument("braid_to_sl2: modulus must be >= 2");
  const ModMatrix2 x(modulus, 0, -1, 1, 1);
  const ModMatrix2 y(modulus, 0, -1, 1, 0);
  ModMatrix2 out = ModMatrix2::identity(modulus);
  for (auto letter : word.letters) {
    switch (letter) {
      case BraidLetter::X:
        out = out * x;
        break;
      case BraidLetter::XInverse:
        out = out * x.inverse();
        break;
      case BraidLetter::Y:
        out = out * y;
        break;
      case BraidLetter::YInverse:
        out = out * y.inverse();
        break;
    }
  }
  return out;
}

ModMatrix2 meridian_image(int modulus) { return braid_to_sl2(BraidWord::parse("yX"), modulus); }
ModMatrix2 longitude_image(int modulus) { return braid_to_sl2(BraidWord::parse("yy"), modulus); }

namespace {

ModVector2 canonical_generator(const ModVector2& v) {
  ModVector2 best = v;
  for (int u = 1; u < v.modulus; ++u) {
    if (std::gcd(u, v.modulus) != 1) continue;
    ModVector2 w = v.scaled(u);
    if (w.key() < best.key()) best = w;
  }
  return best;
}

}  // namespace

FiberSet::FiberSet(LevelKind kind, int level, std::vector<FiberElement> elements, FiberElement basepoint)
    : kind_(kind), level_(level), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [this](const FiberElement& l, const FiberElement& r) { return key(l) < key(r); });
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(key(elements_[i]), static_cast<int>(i)).second)
      throw std::invalid_argument("FiberSet: duplicate element");
  }
  basepoint_ = index_of(basepoint);
}

std::uint64_t FiberSet::key(const FiberElement& e) const {
  const std::uint64_t n2 = static_cast<std::uint64_t>(level_) * level_;
  return kind_ == LevelKind::Full ? e.p.key() * n2 + e.q.key() : e.p.key();
}

int FiberSet::index_of(const FiberElement& e) const {
  auto it = index_.find(key(e));
  if (it == index_.end()) throw std::out_of_range("FiberSet: element not present");
  return it->second;
}

FiberElement FiberSet::act(const FiberElement& e, const ModMatrix2& g) const {
  switch (kind_) {
    case LevelKind::Full:
      return {e.p * g, e.q * g};
    case LevelKind::Point:
      return {e.p * g, e.q};
    case LevelKind::Cyclic:
      return {canonical_generator(e.p * g), e.q};
  }
  return e;
}

std::vector<int> FiberSet::permutation(const ModMatrix2& g) const {
  std::vector<int> perm(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) perm[i] = index_of(act(elements_[i], g));
  return perm;
}

FiberSet fiber_set(LevelKind kind, int level, EnumerationLimit limit) {
  if (level < 2) throw std::invalid_argument("fiber_set: level must be >= 2");
  check_enumeration_bound(level, limit);
  const int n = level;
  const ModVector2 zero{n, 0, 0};
  std::vector<FiberElement> elements;
  std::vector<ModVector2> exact_order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (ModVector2 v{n, x, y}; v.order() == n) exact_order.push_back(v);

  switch (kind) {
    case LevelKind::Point:
      for (const auto& v : exact_order) elements.push_back({v, zero});
      return FiberSet(kind, n, std::move(elements), {{n, 0, 1 % n}, zero});
    case LevelKind::Cyclic: {
      for (const auto& v : exact_order)
        if (canonical_generator(v) == v) elements.push_back({v, zero});
      return FiberSet(kind, n, std::move(elements), {canonical_generator({n, 0, 1 % n}), zero});
    }
    case LevelKind::Full:
      for (const auto& p : exact_order) {
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            if (mod_floor(static_cast<std::int64_t>(p.x) * y - static_cast<std::int64_t>(p.y) * x, n) == 1 % n)
              elements.push_back({p, {n, x, y}});
          }
        }
      }
      return FiberSet(kind, n, std::move(elements), {{n, 1 % n, 0}, {n, 0, 1 % n}});
  }
  throw std::logic_error("fiber_set: unknown kind");
}

MonodromyCertificate monodromy_orbits(const FiberSet& fibers, EnumerationLimit limit) {
  MonodromyCertificate cert;
  cert.fiber_size = fibers.size();
  const int n = fibers.level();
  const std::vector<int> px = fibers.permutation(braid_to_sl2(BraidWord::parse("x"), n));
  const std::vector<int> py = fibers.permutation(braid_to_sl2(BraidWord::parse("y"), n));
  std::vector<char> seen(fibers.size(), 0);
  std::vector<int> queue{fibers.basepoint()};
  seen[fibers.basepoint()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int next : {px[queue[head]], py[queue[head]]}) {
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  cert.orbit_size = queue.size();
  cert.transitive = cert.orbit_size == cert.fiber_size;

  const Sl2Group group = sl2_enumerate(n, limit);
  const SubgroupSpec spec = fibers.spec();
  const FiberElement& base = fibers[fibers.basepoint()];
  cert.stabilizer_matches = std::all_of(group.elements().begin(), group.elements().end(), [&](const ModMatrix2& g) {
    return (fibers.act(base, g) == base) == contains(spec, g);
  });
  return cert;
}

bool stabilizer_is_conjugate(const FiberSet& fibers, const Sl2Group& group, const ModMatrix2& g) {
  const SubgroupSpec spec = fibers.spec();
  const FiberElement moved = fibers.act(fibers[fibers.basepoint()], g);
  const ModMatrix2 g_inv = g.inverse();
  return std::all_of(group.elements().begin(), group.elements().end(), [&](const ModMatrix2& h) {
    // h fixes base*g  <=>  g h g^-1 fixes base  <=>  h in g^-1 H g
    return (fibers.act(moved, h) == moved) == contains(spec, g * h * g_inv);
  });
}

KComponentReport cover_over_K(LevelKind kind, int level, EnumerationLimit limit) {
  const FiberSet fibers = fiber_set(kind, level, limit);
  const SubgroupSpec spec{kind, level};
  const CosetTable table = coset_table(spec, limit);
  const CuspPartition cusp_data = cusp_partition(table);

  // Fiber element basepoint * rep(c) for each coset c; this is a bijection.
  std::vector<int> coset_of_fiber(fibers.size(), -1);
  const FiberElement& base = fibers[fibers.basepoint()];
  for (std::size_t c = 0; c < table.size(); ++c) {
    const int f = fibers.index_of(fibers.act(base, table.cosets[c]));
    if (coset_of_fiber[f] >= 0) throw std::logic_error("cover_over_K: cosets and fibers are not in bijection");
    coset_of_fiber[f] = static_cast<int>(c);
  }

  const std::vector<int> mu = fibers.permutation(meridian_image(level));
  const std::vector<int> lambda = fibers.permutation(longitude_image(level));

  std::vector<int> mu_orbit(fibers.size(), -1);
  std::vector<int> mu_orbit_size;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (mu_orbit[i] >= 0) continue;
    const int id = static_cast<int>(mu_orbit_size.size());
    int size = 0;
    for (int j = static_cast<int>(i); mu_orbit[j] < 0; j = mu[j]) {
      mu_orbit[j] = id;
      ++size;
    }
    mu_orbit_size.push_back(size);
  }

  KComponentReport report{spec, fibers.size(), {}};
  std::vector<char> done(fibers.size(), 0);
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> stack{static_cast<int>(i)};
    done[i] = 1;
    int size = 0;
    std::vector<int> orbits_seen;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      ++size;
      if (std::find(orbits_seen.begin(), orbits_seen.end(), mu_orbit[e]) == orbits_seen.end())
        orbits_seen.push_back(mu_orbit[e]);
      for (int next : {mu[e], lambda[e]}) {
        if (!done[next]) {
          done[next] = 1;
          stack.push_back(next);
        }
      }
    }
    const int branch = mu_orbit_size[orbits_seen.front()];
    for (int o : orbits_seen)
      if (mu_orbit_size[o] != branch) throw std::logic_error("cover_over_K: unequal meridian orbits in a component");
    const int degree = static_cast<int>(orbits_seen.size());
    if (degree < 1 || degree > 2) throw std::logic_error("cover_over_K: core degree outside {1, 2}");

    // mu = S T^-1 S^-1, so mu-orbits of Hg correspond to T-orbits of HgS.
    const int coset = coset_of_fiber[i];
    const int cusp_index = cusp_data.class_of_coset[table.perm_s[coset]];
    report.components.push_back(
        {cusp_index, cusp_data.classes[cusp_index].rep, size, branch, degree});
  }
  std::sort(report.components.begin(), report.components.end(),
            [](const KComponent& l, const KComponent& r) { return l.cusp_index < r.cusp_index; });
  for (std::size_t i = 1; i < report.components.size(); ++i) {
    if (report.components[i].cusp_index == report.components[i - 1].cusp_index)
      throw std::logic_error("cover_over_K: two components over one cusp");
  }
  return report;
}

}  // namespace levelstruct
