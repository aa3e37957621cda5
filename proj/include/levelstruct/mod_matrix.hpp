#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace levelstruct {

/// Default largest level accepted by the brute-force routines.
inline constexpr int kDefaultEnumerationBound = 60;

/// Upper bound on the level (or modulus) of anything that is enumerated
/// element by element.
struct EnumerationLimit {
  int max_level = kDefaultEnumerationBound;
};

class EnumerationBoundExceeded : public std::runtime_error {
 public:
  EnumerationBoundExceeded(int level, int bound);
  int level() const { return level_; }
  int bound() const { return bound_; }

 private:
  int level_;
  int bound_;
};

/// Throws EnumerationBoundExceeded when level > limit.max_level.
void check_enumeration_bound(int level, EnumerationLimit limit);

/// An integer 2x2 matrix, used for lifts to SL2(Z).
struct IntMatrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// An element of SL2(Z/N): entries are residues in [0, N), ad - bc = 1 mod N.
class ModMatrix2 {
 public:
  /// Reduces the entries mod `modulus`; throws std::invalid_argument if the
  /// modulus is < 1 or the determinant is not 1 mod `modulus`.
  ModMatrix2(int modulus, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  ModMatrix2(int modulus, const IntMatrix2& m) : ModMatrix2(modulus, m.a, m.b, m.c, m.d) {}

  static ModMatrix2 identity(int modulus) { return {modulus, 1, 0, 0, 1}; }
  static ModMatrix2 minus_identity(int modulus) { return {modulus, -1, 0, 0, -1}; }
  /// S = [[0,-1],[1,0]]
  static ModMatrix2 s(int modulus) { return {modulus, 0, -1, 1, 0}; }
  /// T = [[1,1],[0,1]]
  static ModMatrix2 t(int modulus) { return {modulus, 1, 1, 0, 1}; }

  int modulus() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  int d() const { return d_; }
  int trace() const { return (a_ + d_) % n_; }

  bool is_identity() const { return a_ == 1 % n_ && b_ == 0 && c_ == 0 && d_ == 1 % n_; }

  ModMatrix2 operator*(const ModMatrix2& rhs) const;
  ModMatrix2 operator-() const;
  ModMatrix2 inverse() const;
  ModMatrix2 pow(std::int64_t k) const;

  /// Reduction to a divisor of the modulus.
  ModMatrix2 reduce(int divisor) const;

  /// Dense encoding ((a*N + b)*N + c)*N + d; orders matrices lexicographically.
  std::uint64_t key() const;

  std::string to_string() const;

  friend bool operator==(const ModMatrix2&, const ModMatrix2&) = default;
  friend auto operator<=>(const ModMatrix2& l, const ModMatrix2& r) { return l.key() <=> r.key(); }

 private:
  struct Raw {};
  ModMatrix2(Raw, int n, int a, int b, int c, int d) : n_(n), a_(a), b_(b), c_(c), d_(d) {}

  int n_;
  int a_, b_, c_, d_;
};

/// A row vector in (Z/N)^2. Matrices act on the right.
struct ModVector2 {
  int modulus;
  int x, y;

  ModVector2 operator*(const ModMatrix2& m) const;
  ModVector2 scaled(std::int64_t u) const;
  /// Additive order of the vector in (Z/N)^2.
  int order() const;
  std::uint64_t key() const { return static_cast<std::uint64_t>(x) * modulus + y; }

  friend bool operator==(const ModVector2&, const ModVector2&) = default;
};

/// SL2(Z/N) as an explicit, sorted element list with an index.
class Sl2Group {
 public:
  Sl2Group(int modulus, std::vector<ModMatrix2> elements);

  int modulus() const { return modulus_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ModMatrix2>& elements() const { return elements_; }
  const ModMatrix2& operator[](std::size_t i) const { return elements_[i]; }

  /// Position of `m` in elements(); throws std::out_of_range if absent.
  std::size_t index_of(const ModMatrix2& m) const;
  bool contains(const ModMatrix2& m) const { return index_.count(m.key()) != 0; }

 private:
  int modulus_;
  std::vector<ModMatrix2> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// All of SL2(Z/N), generated by closure from S and T.
/// Throws std::invalid_argument for N < 2 and EnumerationBoundExceeded
/// above the limit.
Sl2Group sl2_enumerate(int modulus, EnumerationLimit limit = {});

/// Some integer matrix of determinant 1 reducing to `m`.
IntMatrix2 lift_to_sl2z(const ModMatrix2& m);

}  // namespace levelstruct
