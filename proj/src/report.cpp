#include "levelstruct/report.hpp"

#include <sstream>

namespace levelstruct {

Report build_report(const SubgroupSpec& spec, EnumerationLimit limit) {
  Report r{curve_invariants(spec, limit), smoothness_verdict(spec, limit), seifert_data(spec, limit), Unknown{},
           cover_over_K(spec.kind, spec.level, limit)};
  r.homeomorphism = recognize(r.seifert);
  return r;
}

std::string singularity_type_string(const CyclicQuotientType& type) {
  if (type.smooth()) return "smooth";
  return "1/" + std::to_string(type.order) + "(1," + std::to_string(type.q) + ")";
}

namespace {

Json rational_matrix(const std::vector<std::vector<Rational>>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

Json singularity_json(const SingularityRecord& s) {
  Json gens = Json::array();
  for (const auto& g : s.local_group.generators())
    gens.push_back({{"order", g.order}, {"weights", {g.wx, g.wt}}});
  const bool cusp = s.location == PointType::Cusp;
  return Json{{"location", to_string(s.location)},
              {"cusp", cusp ? Json(s.cusp) : Json(nullptr)},
              {"multiplicity", s.multiplicity},
              {"local_group", gens},
              {"invariants", format_monomials(invariant_generators(s.local_group), cusp ? "q" : "x", cusp ? "s" : "t")},
              {"type", singularity_type_string(s.type)},
              {"m", s.type.order},
              {"q", s.type.q},
              {"hj_chain", s.hj_chain},
              {"correction", s.zprime_correction.to_string()}};
}

}  // namespace

Json to_json(const KComponentReport& cover) {
  Json comps = Json::array();
  for (const auto& c : cover.components)
    comps.push_back({{"cusp", c.cusp.to_string()},
                     {"size", c.size},
                     {"branch_order", c.branch_order},
                     {"core_degree", c.core_degree}});
  return comps;
}

Json to_json(const Report& r) {
  const auto& s = r.smoothness;
  Json cusps_json = Json::array();
  for (const auto& c : r.curve.cusp_classes)
    cusps_json.push_back({{"rep", c.rep.to_string()}, {"width", c.width}, {"regular", c.regular}});
  Json sing = Json::array();
  for (const auto& x : s.singularities) sing.push_back(singularity_json(x));
  Json fibers = Json::array();
  for (const auto& f : r.seifert.fibers) fibers.push_back({{"multiplicity", f.multiplicity}, {"source", to_string(f.source)}});
  Json vertices = Json::array();
  for (const auto& v : s.graph.vertices()) vertices.push_back(v.name);

  return Json{{"level", r.curve.spec.level},
              {"structure", to_string(r.curve.spec.kind)},
              {"index_sl2", r.curve.index_sl2},
              {"index_psl2", r.curve.index_psl2},
              {"cusps", cusps_json},
              {"e2", r.curve.e2},
              {"e3", r.curve.e3},
              {"genus", r.curve.genus},
              {"model_level", s.model_level},
              {"z2", s.z_sq.to_string()},
              {"zprime2", s.zprime_sq.to_string()},
              {"ztilde2", s.ztilde_sq.to_string()},
              {"singularities", sing},
              {"graph_vertices", vertices},
              {"intersection_matrix", rational_matrix(s.graph.intersection_matrix())},
              {"det", s.contraction.det},
              {"contraction_sequence", s.contraction.sequence},
              {"smooth_at_Q", s.smooth_at_Q},
              {"seifert", {{"genus", r.seifert.base_genus}, {"fibers", fibers}, {"euler", r.seifert.euler.to_string()}}},
              {"homeomorphism", to_string(r.homeomorphism)},
              {"components_over_K", to_json(r.over_k)},
              {"notes", s.notes}};
}

std::string to_markdown(const Report& r) {
  const auto& s = r.smoothness;
  std::ostringstream out;
  out << "# " << r.curve.spec.name() << "\n\n";
  out << "- index in SL2(Z): " << r.curve.index_sl2 << ", in PSL2(Z): " << r.curve.index_psl2 << "\n";
  out << "- elliptic points: e2 = " << r.curve.e2 << ", e3 = " << r.curve.e3 << "\n";
  out << "- genus: " << r.curve.genus << "\n";
  out << "- cusps:";
  for (const auto& c : r.curve.cusp_classes)
    out << " " << c.rep.to_string() << " (width " << c.width << (c.regular ? "" : ", irregular") << ")";
  out << "\n\n## Self-intersections\n\n";
  out << "| Z^2 (level " << s.model_level << ") | Z'^2 | Z~'^2 |\n|---|---|---|\n";
  out << "| " << s.z_sq << " | " << s.zprime_sq << " | " << s.ztilde_sq << " |\n\n";
  out << "## Singular points on Z'\n\n";
  if (s.singularities.empty()) out << "none\n";
  for (const auto& x : s.singularities) {
    out << "- " << x.multiplicity << " x " << to_string(x.location);
    if (!x.cusp.empty()) out << " " << x.cusp;
    out << ": " << singularity_type_string(x.type) << ", chain [";
    for (std::size_t i = 0; i < x.hj_chain.size(); ++i) out << (i ? ", " : "") << x.hj_chain[i];
    out << "], correction " << x.zprime_correction << "\n";
  }
  out << "\n## Contraction\n\n";
  out << "- |det| = " << s.contraction.det << "\n";
  out << "- contracted:";
  if (s.contraction.sequence.empty()) out << " nothing";
  for (const auto& name : s.contraction.sequence) out << " " << name;
  out << "\n- smooth at Q: " << (s.smooth_at_Q ? "yes" : "no") << "\n";
  for (const auto& note : s.notes) out << "- note: " << note << "\n";
  out << "\n## Link of Q\n\n";
  out << "- base genus " << r.seifert.base_genus << ", euler " << r.seifert.euler << ", fibers:";
  if (r.seifert.fibers.empty()) out << " none";
  for (const auto& f : r.seifert.fibers) out << " " << f.multiplicity << " (" << to_string(f.source) << ")";
  out << "\n- homeomorphism: " << to_string(r.homeomorphism) << "\n\n";
  out << "## Components over the trefoil\n\n| cusp | size | branch order | core degree |\n|---|---|---|---|\n";
  for (const auto& c : r.over_k.components)
    out << "| " << c.cusp.to_string() << " | " << c.size << " | " << c.branch_order << " | " << c.core_degree << " |\n";
  return out.str();
}

std::string TableRow::verdict() const {
  if (smooth) return "smooth";
  return genus > 0 ? "singular (genus)" : "singular";
}

TableRow table_row(const SmoothnessReport& report) {
  TableRow row{report.spec.level, 0, 0, report.zprime_sq, report.ztilde_sq, report.genus, report.smooth_at_Q};
  for (const auto& s : report.singularities) {
    if (s.location == PointType::EllipticOrder3) row.rho += s.multiplicity;
    if (s.location == PointType::EllipticOrder2) row.i += s.multiplicity;
  }
  return row;
}

std::vector<TableRow> table_rows(LevelKind kind, int max_level, EnumerationLimit limit) {
  check_enumeration_bound(max_level, limit);
  std::vector<TableRow> rows;
  for (int n = 2; n <= max_level; ++n) rows.push_back(table_row(smoothness_verdict({kind, n}, limit)));
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "N,#rho,#i,Z'^2,Z~'^2,genus,verdict\n";
  for (const auto& r : rows)
    out << r.level << "," << r.rho << "," << r.i << "," << r.zprime_sq << "," << r.ztilde_sq << "," << r.genus << ","
        << r.verdict() << "\n";
  return out.str();
}

std::string table_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "| N | #rho | #i | Z'^2 | Z~'^2 | genus | verdict |\n|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    out << "| " << r.level << " | " << r.rho << " | " << r.i << " | " << r.zprime_sq << " | " << r.ztilde_sq << " | "
        << r.genus << " | " << r.verdict() << " |\n";
  return out.str();
}

}  // namespace levelstruct
