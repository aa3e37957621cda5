#include "levelstruct/mod_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "levelstruct/number_theory.hpp"

namespace levelstruct {

EnumerationBoundExceeded::EnumerationBoundExceeded(int level, int bound)
    : std::runtime_error("level " + std::to_string(level) + " exceeds the enumeration bound " +
                         std::to_string(bound)),
      level_(level),
      bound_(bound) {}

void check_enumeration_bound(int level, EnumerationLimit limit) {
  if (level > limit.max_level) throw EnumerationBoundExceeded(level, limit.max_level);
}

ModMatrix2::ModMatrix2(int modulus, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (modulus < 1) throw std::invalid_argument("ModMatrix2: modulus must be >= 1");
  n_ = modulus;
  a_ = static_cast<int>(mod_floor(a, n_));
  b_ = static_cast<int>(mod_floor(b, n_));
  c_ = static_cast<int>(mod_floor(c, n_));
  d_ = static_cast<int>(mod_floor(d, n_));
  std::int64_t det = mod_floor(static_cast<std::int64_t>(a_) * d_ - static_cast<std::int64_t>(b_) * c_, n_);
  if (det != 1 % n_)
    throw std::invalid_argument("ModMatrix2: determinant is not 1 mod " + std::to_string(n_));
}

ModMatrix2 ModMatrix2::operator*(const ModMatrix2& r) const {
  if (n_ != r.n_) throw std::invalid_argument("ModMatrix2: modulus mismatch in product");
  auto m = [this](std::int64_t v) { return static_cast<int>(v % n_); };
  return {Raw{}, n_,
          m(static_cast<std::int64_t>(a_) * r.a_ + static_cast<std::int64_t>(b_) * r.c_),
          m(static_cast<std::int64_t>(a_) * r.b_ + static_cast<std::int64_t>(b_) * r.d_),
          m(static_cast<std::int64_t>(c_) * r.a_ + static_cast<std::int64_t>(d_) * r.c_),
          m(static_cast<std::int64_t>(c_) * r.b_ + static_cast<std::int64_t>(d_) * r.d_)};
}

ModMatrix2 ModMatrix2::operator-() const {
  auto neg = [this](int v) { return v == 0 ? 0 : n_ - v; };
  return {Raw{}, n_, neg(a_), neg(b_), neg(c_), neg(d_)};
}

ModMatrix2 ModMatrix2::inverse() const {
  auto neg = [this](int v) { return v == 0 ? 0 : n_ - v; };
  return {Raw{}, n_, d_, neg(b_), neg(c_), a_};
}

ModMatrix2 ModMatrix2::pow(std::int64_t k) const {
  ModMatrix2 base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  ModMatrix2 result = identity(n_);
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

ModMatrix2 ModMatrix2::reduce(int divisor) const {
  if (divisor < 1 || n_ % divisor != 0)
    throw std::invalid_argument("ModMatrix2::reduce: " + std::to_string(divisor) + " does not divide " +
                                std::to_string(n_));
  return {divisor, a_, b_, c_, d_};
}

std::uint64_t ModMatrix2::key() const {
  std::uint64_t n = static_cast<std::uint64_t>(n_);
  return ((static_cast<std::uint64_t>(a_) * n + b_) * n + c_) * n + d_;
}

std::string ModMatrix2::to_string() const {
  std::ostringstream os;
  os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]] mod " << n_;
  return os.str();
}

ModVector2 ModVector2::operator*(const ModMatrix2& m) const {
  if (m.modulus() != modulus) throw std::invalid_argument("ModVector2: modulus mismatch");
  std::int64_t n = modulus;
  return {modulus, static_cast<int>((static_cast<std::int64_t>(x) * m.a() + static_cast<std::int64_t>(y) * m.c()) % n),
          static_cast<int>((static_cast<std::int64_t>(x) * m.b() + static_cast<std::int64_t>(y) * m.d()) % n)};
}

ModVector2 ModVector2::scaled(std::int64_t u) const {
  return {modulus, static_cast<int>(mod_floor(u * x, modulus)), static_cast<int>(mod_floor(u * y, modulus))};
}

int ModVector2::order() const {
  int g = std::gcd(std::gcd(x, y), modulus);
  return modulus / g;
}

Sl2Group::Sl2Group(int modulus, std::vector<ModMatrix2> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].modulus() != modulus_) throw std::invalid_argument("Sl2Group: modulus mismatch");
    index_.emplace(elements_[i].key(), i);
  }
}

std::size_t Sl2Group::index_of(const ModMatrix2& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) throw std::out_of_range("Sl2Group: " + m.to_string() + " not present");
  return it->second;
}

Sl2Group sl2_enumerate(int modulus, EnumerationLimit limit) {
  if (modulus < 2) throw std::invalid_argument("sl2_enumerate: modulus must be >= 2");
  check_enumeration_bound(modulus, limit);
  const ModMatrix2 gens[] = {ModMatrix2::s(modulus), ModMatrix2::t(modulus)};
  std::vector<ModMatrix2> elements{ModMatrix2::identity(modulus)};
  std::unordered_map<std::uint64_t, bool> seen{{elements.front().key(), true}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      ModMatrix2 next = elements[head] * g;
      if (seen.emplace(next.key(), true).second) elements.push_back(next);
    }
  }
  return Sl2Group(modulus, std::move(elements));
}

namespace {

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

IntMatrix2 lift_to_sl2z(const ModMatrix2& m) {
  // Lift the bottom row to a coprime pair (c, d), then solve for the top
  // row and correct it by a multiple of the bottom row.
  const std::int64_t n = m.modulus();
  std::int64_t c = m.c();
  std::int64_t d = m.d();
  if (c == 0) c = n;  // gcd(n, d) = 1 because det = 1 mod n
  while (std::gcd(c, d) != 1) d += n;
  std::int64_t x, y;
  ext_gcd(d, c, x, y);  // x*d + y*c = 1
  // a0 = x, b0 = -y satisfies a0*d - b0*c = 1.
  std::int64_t a0 = x, b0 = -y;
  // General solution: a = a0 + k*c, b = b0 + k*d. Pick k with a = m.a() mod n.
  // Then b is forced mod n because det = 1 and d or c is a unit locally.
  for (std::int64_t k = 0; k < n; ++k) {
    std::int64_t a = a0 + k * c;
    std::int64_t b = b0 + k * d;
    if (mod_floor(a, n) == m.a() && mod_floor(b, n) == m.b()) return {a, b, c, d};
  }
  throw std::logic_error("lift_to_sl2z: no lift found for " + m.to_string());
}

}  // namespace levelstruct
