#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "levelstruct/congruence_groups.hpp"
#include "levelstruct/mod_matrix.hpp"

namespace levelstruct {

enum class BraidLetter { X, XInverse, Y, YInverse };

/// A word in the generators of B3 = <x, y | x^3 = y^2>.
struct BraidWord {
  std::vector<BraidLetter> letters;

  /// Letters 'x', 'y' and their inverses 'X', 'Y'; whitespace is skipped.
  /// "yX" is the meridian, "yy" the chosen longitude.
  static BraidWord parse(const std::string& text);
  std::string to_string() const;
};

/// x -> [[0,-1],[1,1]], y -> [[0,-1],[1,0]] reduced mod N, multiplied in word
/// order (the group acts on row vectors from the right).
ModMatrix2 braid_to_sl2(const BraidWord& word, int modulus);

/// Meridian mu = y x^-1, acting by [[1,0],[1,1]].
ModMatrix2 meridian_image(int modulus);
/// Longitude lambda = y^2, acting by -I.
ModMatrix2 longitude_image(int modulus);

/// One point of a fiber: a single vector (Point, Cyclic) or an ordered pair
/// of vectors (Full). Cyclic subgroups are stored by their canonical
/// generator, the smallest multiple of a generator by a unit.
struct FiberElement {
  ModVector2 p;
  ModVector2 q;

  friend bool operator==(const FiberElement&, const FiberElement&) = default;
};

/// Level-N structures on a fixed elliptic curve, acted on by SL2(Z/N):
///   Point:  vectors of exact order N in (Z/N)^2
///   Cyclic: cyclic subgroups of order N
///   Full:   pairs (p, q) with pairing p.x*q.y - p.y*q.x = 1 mod N
class FiberSet {
 public:
  FiberSet(LevelKind kind, int level, std::vector<FiberElement> elements, FiberElement basepoint);

  LevelKind kind() const { return kind_; }
  int level() const { return level_; }
  SubgroupSpec spec() const { return {kind_, level_}; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<FiberElement>& elements() const { return elements_; }
  const FiberElement& operator[](std::size_t i) const { return elements_[i]; }
  int basepoint() const { return basepoint_; }

  int index_of(const FiberElement& e) const;
  /// Right action e * g, canonicalized.
  FiberElement act(const FiberElement& e, const ModMatrix2& g) const;
  /// The permutation of element indices induced by g.
  std::vector<int> permutation(const ModMatrix2& g) const;

 private:
  std::uint64_t key(const FiberElement& e) const;

  LevelKind kind_;
  int level_;
  std::vector<FiberElement> elements_;
  int basepoint_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Throws EnumerationBoundExceeded above the limit.
FiberSet fiber_set(LevelKind kind, int level, EnumerationLimit limit = {});

struct MonodromyCertificate {
  std::size_t fiber_size = 0;
  /// Size of the orbit of the basepoint under the images of x and y.
  std::size_t orbit_size = 0;
  bool transitive = false;
  /// For every g in SL2(Z/N): basepoint * g == basepoint iff g lies in the
  /// congruence subgroup image.
  bool stabilizer_matches = false;
};

MonodromyCertificate monodromy_orbits(const FiberSet& fibers, EnumerationLimit limit = {});

/// Whether the stabilizer of basepoint * g is g^-1 H g, checked against every
/// element of SL2(Z/N).
bool stabilizer_is_conjugate(const FiberSet& fibers, const Sl2Group& group, const ModMatrix2& g);

struct KComponent {
  /// Index into the subgroup's cusp list and the cusp itself.
  int cusp_index;
  CuspRep cusp;
  /// Number of fiber elements in the component.
  int size;
  /// Meridian branch order: length of a mu-orbit in the component.
  int branch_order;
  /// Degree of the core circle over K: number of mu-orbits in the component.
  int core_degree;
};

/// Components of the preimage of a tubular neighbourhood of the trefoil.
struct KComponentReport {
  SubgroupSpec spec;
  std::size_t fiber_size;
  std::vector<KComponent> components;
};

/// Orbits of <mu, lambda> on the fiber set, matched with cusp classes.
KComponentReport cover_over_K(LevelKind kind, int level, EnumerationLimit limit = {});

}  // namespace levelstruct
