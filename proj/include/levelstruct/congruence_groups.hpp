#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "levelstruct/mod_matrix.hpp"
#include "levelstruct/rational.hpp"

namespace levelstruct {

/// Which level structure a subgroup selects:
///   Full   <-> Gamma(N)   (symplectic basis of N-torsion)
///   Point  <-> Gamma1(N)  (point of exact order N)
///   Cyclic <-> Gamma0(N)  (cyclic subgroup of order N)
enum class LevelKind { Full, Point, Cyclic };

/// CLI spelling: "full", "gamma1", "gamma0".
std::string to_string(LevelKind kind);
std::optional<LevelKind> parse_level_kind(const std::string& text);

struct SubgroupSpec {
  LevelKind kind;
  int level;

  /// "Gamma(N)", "Gamma1(N)" or "Gamma0(N)".
  std::string name() const;

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

/// Throws std::invalid_argument when spec.level < 2.
void check_level(const SubgroupSpec& spec);

/// Membership of m in the image of the subgroup in SL2(Z/N). The modulus of
/// m must equal spec.level.
bool contains(const SubgroupSpec& spec, const ModMatrix2& m);

/// Membership in the preimage of the subgroup image under SL2(Z/M) -> SL2(Z/N),
/// for any modulus M divisible by N.
bool contains_preimage(const SubgroupSpec& spec, const ModMatrix2& m);

/// Whether -I lies in the subgroup.
bool contains_minus_identity(const SubgroupSpec& spec);

/// [SL2(Z) : Gamma], closed form.
std::int64_t index_sl2(const SubgroupSpec& spec);
/// [PSL2(Z) : image of Gamma], closed form, halving exactly when -I is absent.
std::int64_t index_psl2(const SubgroupSpec& spec);

/// Right cosets Gamma\SL2(Z), realized inside SL2(Z/M) where M is the table
/// modulus (the level, or a multiple of it when a finer model is needed).
class CosetTable {
 public:
  SubgroupSpec spec;
  int modulus;
  /// Representative of each coset: the smallest matrix (by key) in it.
  std::vector<ModMatrix2> cosets;
  /// Coset index of rep * S, rep * T and (-I) * rep.
  std::vector<int> perm_s, perm_t, perm_neg;
  int basepoint;

  std::size_t size() const { return cosets.size(); }
  int coset_of(const ModMatrix2& m) const;

  /// Size of the subgroup image inside SL2(Z/modulus).
  std::int64_t subgroup_order = 0;
  std::int64_t group_order = 0;

 private:
  friend CosetTable coset_table(const SubgroupSpec&, EnumerationLimit, int);
  std::unordered_map<std::uint64_t, int> coset_index_;
};

/// Brute-force coset table. `modulus` defaults to spec.level; any multiple
/// of the level is accepted. Throws EnumerationBoundExceeded above the limit.
CosetTable coset_table(const SubgroupSpec& spec, EnumerationLimit limit = {}, int modulus = 0);

/// Whether permS and permT generate a transitive group.
bool is_transitive(const CosetTable& table);

/// A cusp k/m in lowest terms; infinity is 1/0.
struct CuspRep {
  std::int64_t numerator;
  std::int64_t denominator;

  bool is_infinity() const { return denominator == 0; }
  std::string to_string() const;
  friend bool operator==(const CuspRep&, const CuspRep&) = default;
};

struct CuspClass {
  CuspRep rep;
  /// Translation length of the stabilizer. For an irregular cusp this is the
  /// least h with M (-T^h) M^-1 in the subgroup.
  int width;
  bool regular;
  /// A matrix in SL2(Z) sending infinity to rep.
  IntMatrix2 lift;
};

struct CuspPartition {
  /// Ordered by canonical representative: least (denominator, numerator).
  std::vector<CuspClass> classes;
  /// Index into `classes` for every coset of the table.
  std::vector<int> class_of_coset;
};

/// Cusps as orbits of <T, -I> acting on the right of the cosets.
CuspPartition cusp_partition(const CosetTable& table);

/// Cusp classes ordered by canonical representative.
std::vector<CuspClass> cusps(const CosetTable& table);
std::vector<CuspClass> cusps(const SubgroupSpec& spec, EnumerationLimit limit = {});

/// Closed-form cusp count; only provided for Cyclic specs.
std::optional<std::int64_t> cusp_count_closed_form(const SubgroupSpec& spec);

struct EllipticCounts {
  int e2 = 0;
  int e3 = 0;
  friend bool operator==(const EllipticCounts&, const EllipticCounts&) = default;
};

/// Closed form: residue-symbol products for Cyclic, small cases for the rest.
EllipticCounts elliptic_counts(const SubgroupSpec& spec);
/// Oracle: +-cosets fixed by S (order 2) and by ST (order 3).
EllipticCounts elliptic_counts(const CosetTable& table);

/// Closed-form genus of the modular curve.
std::int64_t genus(const SubgroupSpec& spec);
/// Riemann-Hurwitz over the j-line from the cycle types of S, ST, T on
/// +-cosets.
std::int64_t genus(const CosetTable& table);

/// index_psl2 / 12.
Rational deg_lambda(const SubgroupSpec& spec);

struct CurveInvariants {
  SubgroupSpec spec;
  std::int64_t index_sl2;
  std::int64_t index_psl2;
  std::vector<CuspClass> cusp_classes;
  int e2;
  int e3;
  std::int64_t genus;
};

/// Gathers the invariants, cross-checking every closed form against the
/// coset table. Throws std::logic_error on disagreement.
CurveInvariants curve_invariants(const SubgroupSpec& spec, EnumerationLimit limit = {});

}  // namespace levelstruct
