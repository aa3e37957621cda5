#include "levelstruct/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "levelstruct/report.hpp"

namespace levelstruct {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_bound(const std::string& text, const std::string& origin) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 2)
    throw UsageError(origin + ": enumeration bound must be an integer >= 2, got '" + text + "'");
  return value;
}

SubgroupSpec make_spec(const std::string& structure, int level) {
  const auto kind = parse_level_kind(structure);
  if (!kind) throw UsageError("unknown structure '" + structure + "' (expected full, gamma1 or gamma0)");
  if (level < 2) throw UsageError("level must be >= 2, got " + std::to_string(level));
  return {*kind, level};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const VerifyOptions& verify_hooks) {
  CLI::App app{"Smoothness at Q and link topology for level-N structures on elliptic curves", "levelstruct"};
  app.require_subcommand(1);
  int bound_flag = 0;
  app.add_option("--bound", bound_flag, "Largest level that may be enumerated (overrides $" + std::string(kBoundEnvVar) + ")");

  int level = 0;
  std::string structure;
  std::string format;
  int max_level = 0;

  auto* report = app.add_subcommand("report", "Full report for one level structure");
  report->add_option("--level", level, "Level N")->required();
  report->add_option("--structure", structure, "full | gamma1 | gamma0")->required();
  report->add_option("--format", format, "json | md")->check(CLI::IsMember({"json", "md"}))->default_val("json");

  auto* table = app.add_subcommand("table", "One row per level 2..max");
  table->add_option("--structure", structure, "full | gamma1 | gamma0")->required();
  table->add_option("--max", max_level, "Largest level")->required();
  table->add_option("--format", format, "csv | md")->check(CLI::IsMember({"csv", "md"}))->default_val("csv");

  auto* cover = app.add_subcommand("cover", "Components of the cover over the trefoil");
  cover->add_option("--level", level, "Level N")->required();
  cover->add_option("--structure", structure, "full | gamma1 | gamma0")->required();

  auto* verify = app.add_subcommand("verify-paper", "Check the reference claims");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 expects the reversed form
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    EnumerationLimit limit;
    if (const char* env = std::getenv(kBoundEnvVar); env != nullptr && *env != '\0')
      limit.max_level = parse_bound(env, kBoundEnvVar);
    if (bound_flag != 0) limit.max_level = parse_bound(std::to_string(bound_flag), "--bound");

    if (*report) {
      const Report r = build_report(make_spec(structure, level), limit);
      if (format == "md")
        out << to_markdown(r);
      else
        out << to_json(r).dump(2) << "\n";
    } else if (*table) {
      const auto kind = make_spec(structure, 2).kind;
      if (max_level < 2) throw UsageError("--max must be >= 2");
      const auto rows = table_rows(kind, max_level, limit);
      out << (format == "md" ? table_markdown(rows) : table_csv(rows));
    } else if (*cover) {
      const SubgroupSpec spec = make_spec(structure, level);
      const KComponentReport r = cover_over_K(spec.kind, spec.level, limit);
      const Json j{{"level", spec.level},
                   {"structure", to_string(spec.kind)},
                   {"fiber_size", r.fiber_size},
                   {"components_over_K", to_json(r)}};
      out << j.dump(2) << "\n";
    } else if (*verify) {
      VerifyOptions options = verify_hooks;
      options.limit = limit;
      const auto results = verify_reference_claims(options);
      for (const auto& r : results) {
        out << (r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL")) << "  " << r.id << "  " << r.description << "\n";
        if (!r.detail.empty()) out << "      " << r.detail << "\n";
      }
      const bool ok = all_passed(results);
      out << (ok ? "all checks passed" : "verification failed") << "\n";
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EnumerationBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace levelstruct
