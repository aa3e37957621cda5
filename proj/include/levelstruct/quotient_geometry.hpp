#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levelstruct/congruence_groups.hpp"
#include "levelstruct/local_action.hpp"
#include "levelstruct/rational.hpp"

namespace levelstruct {

/// Level of the line-bundle model T(M) the quotient is taken from: the level
/// itself for N >= 3, and 4 for N = 2 (T(2) is a quotient of T(4)).
int model_level(const SubgroupSpec& spec);

/// Tangent action of a stabilizer of order m at an interior point of the
/// zero section: (x, t) -> (x / lambda^2, t / lambda) with lambda a primitive
/// m-th root of unity, i.e. weights (-2, -1) mod m. Supported orders are the
/// orders of finite cyclic subgroups of SL2(Z): 1, 2, 3, 4, 6.
CyclicActionWeights interior_fixed_point_weights(int order);

/// Stabilizer of a cusp acting on the (q, s) chart, as a diagonal group.
struct CuspAction {
  DiagonalAction group;
  /// Every element fixes the whole fiber over the cusp.
  bool fixes_whole_fiber() const { return group.fixes_fiber(); }
};

/// The subgroup elements M (+-T^k) M^-1 act by (q, s) -> (zeta^k q, +-s),
/// zeta = exp(2 pi i / model level). Works in the level-4 model for N = 2.
CuspAction cusp_fixed_point_action(const SubgroupSpec& spec, const CuspClass& cusp);

enum class PointType { EllipticOrder2, EllipticOrder3, Cusp };

std::string to_string(PointType type);

struct SingularityRecord {
  PointType location = PointType::Cusp;
  /// Cusp representative for cusp points, empty otherwise.
  std::string cusp;
  /// Local stabilizer acting on the tangent plane (x along Z, t along the fiber).
  DiagonalAction local_group;
  CyclicQuotientType type;
  /// Self-intersections of the Hirzebruch-Jung chain; Z~' meets the first.
  std::vector<int> hj_chain;
  /// Contribution -q/m to the self-intersection of Z~'.
  Rational zprime_correction;
  int multiplicity = 1;

  bool smooth() const { return type.smooth(); }
};

/// Divides out quasi-reflections, normalizes to 1/m(1, q) with the zero
/// section as the first coordinate, and resolves by continued fractions.
SingularityRecord resolve_cyclic_quotient(const DiagonalAction& action);
SingularityRecord resolve_cyclic_quotient(const CyclicActionWeights& weights);

/// Z^2 = -(1/24) N^3 prod (1 - 1/p^2) on T(N). Throws for N < 3.
Rational z_self_intersection(int level);

/// Self-intersection of the image Z' of the zero section: e^2 Z^2 / deg(pi)
/// where deg(pi) is the order of the subgroup image in SL2(Z/M) and e = 2
/// exactly when -I is in it.
Rational zprime_self_intersection(const SubgroupSpec& spec);

struct GraphVertex {
  std::string name;
  Rational self_intersection;
};

struct GraphEdge {
  int u;
  int v;
  int multiplicity;
};

/// Weighted intersection graph of a configuration of curves.
class ResolutionGraph {
 public:
  int add_vertex(std::string name, Rational self_intersection);
  /// Adds to any existing multiplicity between u and v.
  void add_edge(int u, int v, int multiplicity = 1);

  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  int intersection(int u, int v) const;
  std::vector<std::vector<Rational>> intersection_matrix() const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
};

Rational determinant(std::vector<std::vector<Rational>> matrix);
/// Sylvester's criterion on the leading principal minors of -matrix.
bool is_negative_definite(const std::vector<std::vector<Rational>>& matrix);

/// The configuration Z~' plus every HJ chain, each chain hooked to Z~' at
/// its first curve.
ResolutionGraph build_resolution_graph(const Rational& zprime_sq, const std::vector<SingularityRecord>& singularities);

struct BlowDownResult {
  bool smooth = false;
  /// Names of contracted curves, in order.
  std::vector<std::string> sequence;
  /// What is left when no (-1)-curve remains; empty on success.
  ResolutionGraph remaining;
  /// |det| of the original intersection matrix.
  std::int64_t det = 0;
};

/// Contracts (-1)-curves (lexicographically first name on ties) until none
/// remain. Throws std::domain_error for non-integral self-intersections.
BlowDownResult blow_down(const ResolutionGraph& graph);

struct SmoothnessReport {
  SubgroupSpec spec;
  int model_level;
  std::int64_t genus;
  Rational z_sq;
  Rational zprime_sq;
  Rational ztilde_sq;
  /// Only the singular points, grouped by location and type.
  std::vector<SingularityRecord> singularities;
  ResolutionGraph graph;
  BlowDownResult contraction;
  bool smooth_at_Q;
  std::vector<std::string> notes;
};

/// All singular points of the quotient along Z' (elliptic points and cusps).
std::vector<SingularityRecord> quotient_singularities(const SubgroupSpec& spec, EnumerationLimit limit = {});

ResolutionGraph resolution_graph(const SubgroupSpec& spec, EnumerationLimit limit = {});

SmoothnessReport smoothness_verdict(const SubgroupSpec& spec, EnumerationLimit limit = {});
/// Same, with Z'^2 supplied by the caller instead of computed.
SmoothnessReport smoothness_verdict(const SubgroupSpec& spec, const Rational& zprime_sq, EnumerationLimit limit = {});

}  // namespace levelstruct
