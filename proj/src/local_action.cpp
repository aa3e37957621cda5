#include "levelstruct/local_action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace levelstruct {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

int element_order(const std::pair<int, int>& e, int modulus) {
  const int g = std::gcd(std::gcd(e.first, e.second), modulus);
  return modulus / g;
}

}  // namespace

DiagonalAction DiagonalAction::generated_by(std::span<const CyclicActionWeights> generators) {
  DiagonalAction out;
  int modulus = 1;
  for (const auto& g : generators) {
    if (g.order < 1) throw std::invalid_argument("DiagonalAction: order must be >= 1");
    modulus = std::lcm(modulus, g.order);
  }
  std::vector<std::pair<int, int>> gens;
  for (const auto& g : generators) {
    const int scale = modulus / g.order;
    gens.emplace_back(mod(static_cast<long long>(g.wx) * scale, modulus), mod(static_cast<long long>(g.wt) * scale, modulus));
  }
  std::set<std::pair<int, int>> seen{{0, 0}};
  std::vector<std::pair<int, int>> queue{{0, 0}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      std::pair<int, int> next{(queue[head].first + g.first) % modulus, (queue[head].second + g.second) % modulus};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  // Shrink the modulus to the exponent of the group.
  int exponent = 1;
  for (const auto& e : seen) exponent = std::lcm(exponent, element_order(e, modulus));
  const int shrink = modulus / exponent;
  out.modulus_ = exponent;
  out.elements_.clear();
  for (const auto& e : seen) out.elements_.emplace_back(e.first / shrink, e.second / shrink);
  std::sort(out.elements_.begin(), out.elements_.end());
  return out;
}

bool DiagonalAction::is_cyclic() const { return static_cast<std::size_t>(modulus_) == elements_.size(); }

bool DiagonalAction::fixes_fiber() const {
  return std::all_of(elements_.begin(), elements_.end(), [](const auto& e) { return e.second == 0; });
}

std::vector<CyclicActionWeights> DiagonalAction::generators() const {
  auto as_weights = [this](const std::pair<int, int>& e) {
    const int order = element_order(e, modulus_);
    const int scale = modulus_ / order;
    return CyclicActionWeights{order, e.first / scale, e.second / scale};
  };
  if (is_trivial()) return {};
  if (is_cyclic()) {
    for (const auto& e : elements_)
      if (element_order(e, modulus_) == modulus_) return {as_weights(e)};
  }
  // Smallest pair of elements generating the whole group.
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      const CyclicActionWeights pair[] = {as_weights(elements_[i]), as_weights(elements_[j])};
      if (generated_by(pair).order() == order()) return {pair[0], pair[1]};
    }
  }
  throw std::logic_error("DiagonalAction: group needs more than two generators");
}

bool operator==(const DiagonalAction& l, const DiagonalAction& r) {
  return l.modulus_ == r.modulus_ && l.elements_ == r.elements_;
}

std::vector<Monomial> invariant_generators(const DiagonalAction& action) {
  const int m = action.modulus();
  auto invariant = [&](int i, int j) {
    return std::all_of(action.elements().begin(), action.elements().end(), [&](const auto& e) {
      return (static_cast<long long>(i) * e.first + static_cast<long long>(j) * e.second) % m == 0;
    });
  };
  // x^m and t^m are always invariant, so the Hilbert basis lies in [0, m]^2.
  std::vector<Monomial> invariants;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      if ((i || j) && invariant(i, j)) invariants.push_back({i, j});

  auto is_invariant_nonzero = [&](int i, int j) { return (i || j) && i >= 0 && j >= 0 && invariant(i, j); };
  std::vector<Monomial> minimal;
  for (const auto& mono : invariants) {
    bool decomposable = false;
    for (const auto& part : invariants) {
      if (part == mono) continue;
      if (is_invariant_nonzero(mono.x - part.x, mono.t - part.t)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) minimal.push_back(mono);
  }
  // Lexicographic with x > t: descending x-exponent.
  std::sort(minimal.begin(), minimal.end(), [](const Monomial& l, const Monomial& r) { return l.x > r.x; });
  return minimal;
}

std::vector<Monomial> invariant_generators(const CyclicActionWeights& weights) {
  return invariant_generators(DiagonalAction::generated_by(weights));
}

std::string format_monomials(const std::vector<Monomial>& monomials, const std::string& first,
                             const std::string& second) {
  auto power = [](const std::string& var, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
  };
  std::string out = "{";
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i) out += ", ";
    std::string term = power(first, monomials[i].x) + power(second, monomials[i].t);
    out += term.empty() ? "1" : term;
  }
  return out + "}";
}

QuasiReflectionSplit split_quasi_reflections(const DiagonalAction& action) {
  QuasiReflectionSplit out;
  const int m = action.modulus();
  for (const auto& e : action.elements()) {
    if (e.second == 0) ++out.fixing_t_axis;
    if (e.first == 0) ++out.fixing_x_axis;
  }
  // The identity was counted in both.
  --out.fixing_t_axis;
  --out.fixing_x_axis;
  const int group_order = static_cast<int>(action.order());
  const int residual = group_order / (out.fixing_x_axis * out.fixing_t_axis);
  if (residual == 1) return out;

  // After x' = x^a, t' = t^b (a = |elements acting on x only|,
  // b = |elements acting on t only|) the residue acts faithfully on each
  // coordinate. Pick the element whose x'-character is exp(2 pi i / residual).
  const int a = out.fixing_t_axis;
  const int b = out.fixing_x_axis;
  const int step = m / residual;
  for (const auto& e : action.elements()) {
    if (mod(static_cast<long long>(e.first) * a, m) != step) continue;
    const int t_exponent = mod(static_cast<long long>(e.second) * b, m);
    if (t_exponent % step != 0) throw std::logic_error("split_quasi_reflections: residual action is not cyclic");
    out.residual = {residual, t_exponent / step};
    return out;
  }
  throw std::logic_error("split_quasi_reflections: no generator of the residual action");
}

std::vector<int> hirzebruch_jung(int m, int q) {
  if (m < 1) throw std::invalid_argument("hirzebruch_jung: m must be >= 1");
  if (m == 1) return {};
  if (q <= 0 || q >= m || std::gcd(m, q) != 1)
    throw std::invalid_argument("hirzebruch_jung: need 0 < q < m with gcd(m, q) = 1");
  std::vector<int> chain;
  int num = m, den = q;
  while (den != 0) {
    const int a = (num + den - 1) / den;
    chain.push_back(a);
    const int next = a * den - num;
    num = den;
    den = next;
  }
  return chain;
}

}  // namespace levelstruct
