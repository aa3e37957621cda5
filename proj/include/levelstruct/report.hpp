#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "levelstruct/congruence_groups.hpp"
#include "levelstruct/quotient_geometry.hpp"
#include "levelstruct/seifert_topology.hpp"
#include "levelstruct/trefoil_monodromy.hpp"

namespace levelstruct {

using Json = nlohmann::ordered_json;

struct Report {
  CurveInvariants curve;
  SmoothnessReport smoothness;
  SeifertData seifert;
  HomeoLabel homeomorphism;
  KComponentReport over_k;
};

Report build_report(const SubgroupSpec& spec, EnumerationLimit limit = {});

Json to_json(const Report& report);
Json to_json(const KComponentReport& cover);
std::string to_markdown(const Report& report);

/// "1/3(1,1)", or "smooth" when the residual group is trivial.
std::string singularity_type_string(const CyclicQuotientType& type);

struct TableRow {
  int level;
  int rho;
  int i;
  Rational zprime_sq;
  Rational ztilde_sq;
  std::int64_t genus;
  bool smooth;

  /// "smooth", "singular", or "singular (genus)" when genus > 0.
  std::string verdict() const;
};

TableRow table_row(const SmoothnessReport& report);
std::vector<TableRow> table_rows(LevelKind kind, int max_level, EnumerationLimit limit = {});

std::string table_csv(const std::vector<TableRow>& rows);
std::string table_markdown(const std::vector<TableRow>& rows);

}  // namespace levelstruct
