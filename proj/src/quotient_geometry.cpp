#include "levelstruct/quotient_geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "levelstruct/number_theory.hpp"

namespace levelstruct {

int model_level(const SubgroupSpec& spec) {
  check_level(spec);
  return spec.level >= 3 ? spec.level : 4;
}

CyclicActionWeights interior_fixed_point_weights(int order) {
  switch (order) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 6:
      return {order, static_cast<int>(mod_floor(-2, order)), static_cast<int>(mod_floor(-1, order))};
    default:
      throw std::invalid_argument("interior_fixed_point_weights: no stabilizer of order " + std::to_string(order));
  }
}

CuspAction cusp_fixed_point_action(const SubgroupSpec& spec, const CuspClass& cusp) {
  const int n = model_level(spec);
  const ModMatrix2 m(n, cusp.lift);
  const ModMatrix2 m_inv = m.inverse();
  const ModMatrix2 t = ModMatrix2::t(n);
  std::vector<CyclicActionWeights> elements;
  for (int k = 0; k < n; ++k) {
    for (int sign : {1, -1}) {
      ModMatrix2 b = t.pow(k);
      if (sign < 0) b = -b;
      if (!contains_preimage(spec, m * b * m_inv)) continue;
      // zeta_n^k on q, +-1 on s, written over the common order 2n.
      elements.push_back({2 * n, 2 * k, sign < 0 ? n : 0});
    }
  }
  return {DiagonalAction::generated_by(elements)};
}

std::string to_string(PointType type) {
  switch (type) {
    case PointType::EllipticOrder2:
      return "elliptic-order-2";
    case PointType::EllipticOrder3:
      return "elliptic-order-3";
    case PointType::Cusp:
      return "cusp";
  }
  return "?";
}

SingularityRecord resolve_cyclic_quotient(const DiagonalAction& action) {
  SingularityRecord record;
  record.local_group = action;
  record.type = split_quasi_reflections(action).residual;
  for (int a : hirzebruch_jung(record.type.order, record.type.q)) record.hj_chain.push_back(-a);
  record.zprime_correction = record.type.smooth() ? Rational(0) : -Rational(record.type.q, record.type.order);
  return record;
}

SingularityRecord resolve_cyclic_quotient(const CyclicActionWeights& weights) {
  return resolve_cyclic_quotient(DiagonalAction::generated_by(weights));
}

Rational z_self_intersection(int level) {
  if (level < 3) throw std::invalid_argument("z_self_intersection: level must be >= 3, got " + std::to_string(level));
  return -Rational(sl2_order(level), 24);
}

Rational zprime_self_intersection(const SubgroupSpec& spec) {
  const int n = model_level(spec);
  // Order of the preimage of the subgroup image inside SL2(Z/n).
  const std::int64_t degree = sl2_order(n) / index_sl2(spec);
  const int e = contains_preimage(spec, ModMatrix2::minus_identity(n)) ? 2 : 1;
  return Rational(e * e) * z_self_intersection(n) / Rational(degree);
}

int ResolutionGraph::add_vertex(std::string name, Rational self_intersection) {
  vertices_.push_back({std::move(name), self_intersection});
  return static_cast<int>(vertices_.size()) - 1;
}

void ResolutionGraph::add_edge(int u, int v, int multiplicity) {
  if (u == v) throw std::invalid_argument("ResolutionGraph: self-loops are not allowed");
  const int n = static_cast<int>(vertices_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("ResolutionGraph: vertex out of range");
  if (u > v) std::swap(u, v);
  for (auto& e : edges_) {
    if (e.u == u && e.v == v) {
      e.multiplicity += multiplicity;
      return;
    }
  }
  edges_.push_back({u, v, multiplicity});
}

int ResolutionGraph::intersection(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) return e.multiplicity;
  return 0;
}

std::vector<std::vector<Rational>> ResolutionGraph::intersection_matrix() const {
  const std::size_t n = vertices_.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = vertices_[i].self_intersection;
  for (const auto& e : edges_) {
    m[e.u][e.v] = e.multiplicity;
    m[e.v][e.u] = e.multiplicity;
  }
  return m;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

bool is_negative_definite(const std::vector<std::vector<Rational>>& matrix) {
  const std::size_t n = matrix.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = -matrix[i][j];
    if (determinant(minor).sign() <= 0) return false;
  }
  return true;
}

ResolutionGraph build_resolution_graph(const Rational& zprime_sq, const std::vector<SingularityRecord>& singularities) {
  Rational ztilde = zprime_sq;
  for (const auto& s : singularities) ztilde += s.zprime_correction * Rational(s.multiplicity);
  ResolutionGraph graph;
  const int z = graph.add_vertex("Z~'", ztilde);
  int next = 1;
  for (const auto& s : singularities) {
    for (int copy = 0; copy < s.multiplicity; ++copy) {
      int previous = z;
      for (int self : s.hj_chain) {
        const int v = graph.add_vertex("E" + std::to_string(next++), self);
        graph.add_edge(previous, v);
        previous = v;
      }
    }
  }
  return graph;
}

BlowDownResult blow_down(const ResolutionGraph& graph) {
  BlowDownResult result;
  const std::size_t n = graph.size();
  std::vector<std::string> names;
  std::vector<std::int64_t> self;
  for (const auto& v : graph.vertices()) {
    if (!v.self_intersection.is_integer())
      throw std::domain_error("blow_down: self-intersection of " + v.name + " is not integral (" +
                              v.self_intersection.to_string() + ")");
    names.push_back(v.name);
    self.push_back(v.self_intersection.to_int64());
  }
  result.det = determinant(graph.intersection_matrix()).abs().to_int64();

  std::vector<std::vector<std::int64_t>> meet(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : graph.edges()) {
    meet[e.u][e.v] += e.multiplicity;
    meet[e.v][e.u] += e.multiplicity;
  }
  std::vector<char> alive(n, 1);
  for (;;) {
    int chosen = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (alive[i] && self[i] == -1 && (chosen < 0 || names[i] < names[chosen])) chosen = static_cast<int>(i);
    }
    if (chosen < 0) break;
    // Contracting a (-1)-curve C: each neighbour D gains (C.D)^2, and any
    // two neighbours D, D' gain (C.D)(C.D') in their intersection.
    std::vector<int> neighbours;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && static_cast<int>(i) != chosen && meet[chosen][i] > 0) neighbours.push_back(static_cast<int>(i));
    for (std::size_t a = 0; a < neighbours.size(); ++a) {
      const int u = neighbours[a];
      self[u] += meet[chosen][u] * meet[chosen][u];
      for (std::size_t b = a + 1; b < neighbours.size(); ++b) {
        const int v = neighbours[b];
        const std::int64_t extra = meet[chosen][u] * meet[chosen][v];
        meet[u][v] += extra;
        meet[v][u] += extra;
      }
    }
    alive[chosen] = 0;
    result.sequence.push_back(names[chosen]);
  }

  std::vector<int> remap(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) remap[i] = result.remaining.add_vertex(names[i], self[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (alive[i] && alive[j] && meet[i][j] > 0) result.remaining.add_edge(remap[i], remap[j], static_cast<int>(meet[i][j]));
  result.smooth = result.remaining.empty();
  return result;
}

namespace {

/// Smallest j > 0 with g^j in the subgroup preimage, for g of finite order.
int first_power_in(const SubgroupSpec& spec, const ModMatrix2& g, int order) {
  ModMatrix2 power = g;
  for (int j = 1; j <= order; ++j, power = power * g)
    if (contains_preimage(spec, power)) return j;
  throw std::logic_error("first_power_in: element order mismatch");
}

void add_grouped(std::vector<SingularityRecord>& out, SingularityRecord record) {
  if (record.location != PointType::Cusp) {
    for (auto& existing : out) {
      if (existing.location == record.location && existing.type == record.type &&
          existing.local_group == record.local_group) {
        existing.multiplicity += record.multiplicity;
        return;
      }
    }
  }
  out.push_back(std::move(record));
}

}  // namespace

std::vector<SingularityRecord> quotient_singularities(const SubgroupSpec& spec, EnumerationLimit limit) {
  const int n = model_level(spec);
  const CosetTable table = coset_table(spec, limit, n);
  const ModMatrix2 s = ModMatrix2::s(n);
  const ModMatrix2 u = s * ModMatrix2::t(n);  // [[0,-1],[1,1]], order 6
  std::vector<SingularityRecord> out;

  for (std::size_t c = 0; c < table.size(); ++c) {
    const int neg = table.perm_neg[c];
    if (neg < static_cast<int>(c)) continue;  // one representative per class {c, -c}
    const ModMatrix2& g = table.cosets[c];
    const ModMatrix2 g_inv = g.inverse();
    const int us = table.perm_t[table.perm_s[c]];
    const struct {
      bool fixed;
      PointType type;
      ModMatrix2 rotation;
      int order;
    } candidates[] = {
        {table.perm_s[c] == static_cast<int>(c) || table.perm_s[c] == neg, PointType::EllipticOrder2, g * s * g_inv, 4},
        {us == static_cast<int>(c) || us == neg, PointType::EllipticOrder3, g * u * g_inv, 6},
    };
    for (const auto& cand : candidates) {
      if (!cand.fixed) continue;
      const int stabilizer_order = cand.order / first_power_in(spec, cand.rotation, cand.order);
      SingularityRecord record = resolve_cyclic_quotient(interior_fixed_point_weights(stabilizer_order));
      record.location = cand.type;
      if (!record.smooth()) add_grouped(out, std::move(record));
    }
  }

  for (const auto& cusp : cusps(table)) {
    SingularityRecord record = resolve_cyclic_quotient(cusp_fixed_point_action(spec, cusp).group);
    record.location = PointType::Cusp;
    record.cusp = cusp.rep.to_string();
    if (!record.smooth()) add_grouped(out, std::move(record));
  }
  return out;
}

ResolutionGraph resolution_graph(const SubgroupSpec& spec, EnumerationLimit limit) {
  return build_resolution_graph(zprime_self_intersection(spec), quotient_singularities(spec, limit));
}

SmoothnessReport smoothness_verdict(const SubgroupSpec& spec, EnumerationLimit limit) {
  check_level(spec);
  return smoothness_verdict(spec, zprime_self_intersection(spec), limit);
}

SmoothnessReport smoothness_verdict(const SubgroupSpec& spec, const Rational& zprime_sq, EnumerationLimit limit) {
  check_level(spec);
  check_enumeration_bound(spec.level, limit);
  SmoothnessReport report{spec,
                          model_level(spec),
                          genus(spec),
                          z_self_intersection(model_level(spec)),
                          zprime_sq,
                          0,
                          quotient_singularities(spec, limit),
                          {},
                          {},
                          false,
                          {}};
  report.graph = build_resolution_graph(report.zprime_sq, report.singularities);
  report.ztilde_sq = report.graph.vertices().front().self_intersection;
  report.contraction = blow_down(report.graph);
  report.smooth_at_Q = report.genus == 0 && report.contraction.smooth;
  if (report.smooth_at_Q && report.contraction.det != 1)
    throw std::logic_error("smoothness_verdict: contractible configuration with |det| != 1 for " + spec.name());

  if (spec.level == 2)
    report.notes.push_back("computed on the level-4 model T(4) divided by the preimage of " + spec.name());
  if (spec.level == 2 && spec.kind == LevelKind::Point)
    report.notes.push_back("S1(2) is also smooth directly: it is the locus y = 0 on the Weierstrass family");
  if (report.genus > 0)
    report.notes.push_back("Z' has genus " + std::to_string(report.genus) + " and cannot contract to a smooth point");
  if (spec.kind == LevelKind::Cyclic && !report.singularities.empty()) {
    static constexpr int kReferenceLevels[] = {2, 3, 4, 5, 7, 10, 13, 25};
    if (std::find(std::begin(kReferenceLevels), std::end(kReferenceLevels), spec.level) == std::end(kReferenceLevels))
      report.notes.push_back("-q/m self-intersection corrections applied beyond the reference levels 3, 4, 5, 7, 10, 13, 25");
  }
  return report;
}

}  // namespace levelstruct
