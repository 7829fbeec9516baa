#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "codebound/error.hpp"
#include "codebound/oracle.hpp"
#include "codebound/report.hpp"

namespace codebound::cli {

namespace {

using report::kSuccess;
using report::kUsage;

struct Range {
  int lo = 0;
  int hi = 0;
};

std::optional<Range> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t used = 0;
      const int v = std::stoi(text, &used);
      if (used != text.size()) return std::nullopt;
      return Range{v, v};
    }
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    Range r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

TailVariant to_variant(const std::string& name) {
  return name == "literal" ? TailVariant::literal : TailVariant::weight;
}

}  // namespace

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds on the dimension of q-ary codes"};
  app.require_subcommand(1);

  const auto variants = CLI::IsMember({"weight", "literal"});
  const auto positive = CLI::PositiveNumber;

  // eval
  int q = 2;
  int n = 0;
  int d = 0;
  std::string bounds = "all";
  std::string variant = "weight";
  auto* eval = app.add_subcommand("eval", "Evaluate selected bounds for one (q, n, d)");
  eval->add_option("--q", q, "Alphabet size")->required();
  eval->add_option("--n", n, "Code length")->required()->check(positive);
  eval->add_option("--d", d, "Minimum distance")->required()->check(positive);
  eval->add_option("--bounds", bounds, "Comma list of bounds or 'all'");
  eval->add_option("--variant-a", variant, "Bound A tail count")->check(variants);

  // table
  std::string n_range;
  std::string d_range;
  std::string format = "text";
  auto* table = app.add_subcommand("table", "Sweep (n, d) ranges");
  table->add_option("--q", q, "Alphabet size")->required();
  auto* n_flag = table->add_option("--n", n_range, "Code length");
  auto* n_range_flag = table->add_option("--n-range", n_range, "Lengths LO..HI");
  auto* d_flag = table->add_option("--d", d_range, "Minimum distance");
  auto* d_range_flag = table->add_option("--d-range", d_range, "Distances LO..HI");
  n_flag->excludes(n_range_flag);
  d_flag->excludes(d_range_flag);
  table->add_option("--bounds", bounds, "Comma list of bounds or 'all'");
  table->add_option("--variant-a", variant, "Bound A tail count")->check(variants);
  table->add_option("--format", format, "csv, text or records")
      ->check(CLI::IsMember({"csv", "text", "records"}));

  // table1
  std::string block = "all";
  bool allow_documented = false;
  std::string data = std::string(CODEBOUND_DEFAULT_DATA_DIR) + "/table1.csv";
  std::string allowances = std::string(CODEBOUND_DEFAULT_DATA_DIR) + "/table1_allowances.csv";
  auto* table1 = app.add_subcommand("table1", "Recompute the golden comparison table and diff");
  table1->add_option("--block", block, "g, h, l, e or all")
      ->check(CLI::IsMember({"g", "h", "l", "e", "all"}));
  table1->add_flag("--allow-documented", allow_documented,
                   "Accept mismatches listed in the allowances file");
  table1->add_option("--data", data, "Golden table CSV");
  table1->add_option("--allowances", allowances, "Documented allowances CSV");

  // oracle
  std::uint64_t budget = oracle::kDefaultBudget;
  int k = 0;
  int n_max = 0;
  int k_max = 0;
  int d_max = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive small-scale checks");
  oracle_cmd->require_subcommand(1);
  auto* best_d = oracle_cmd->add_subcommand("best-d", "Best minimum distance of linear (n, k) codes");
  best_d->add_option("--q", q, "Prime alphabet size")->required();
  best_d->add_option("--n", n, "Code length")->required()->check(positive);
  best_d->add_option("--k", k, "Dimension")->required()->check(positive);
  best_d->add_option("--budget", budget, "Maximum number of codes to enumerate");
  auto* refute = oracle_cmd->add_subcommand("refute-check",
                                            "Confirm every Bound A refutation by exhaustive search");
  refute->add_option("--q", q, "Prime alphabet size")->required();
  refute->add_option("--n-max", n_max, "Largest length")->required()->check(positive);
  refute->add_option("--k-max", k_max, "Largest dimension")->required()->check(positive);
  refute->add_option("--d-max", d_max, "Largest distance")->required()->check(positive);
  refute->add_option("--variant-a", variant, "Bound A tail count")->check(variants);
  refute->add_option("--budget", budget, "Maximum number of codes per triple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*eval) {
      const auto selection = report::parse_bound_list(bounds);
      if (!selection) {
        err << "eval: unknown bound in '" << bounds << "'\n";
        return kUsage;
      }
      return report::cmd_eval(BoundQuery{n, d, q, to_variant(variant)}, *selection, out);
    }
    if (*table) {
      const auto selection = report::parse_bound_list(bounds);
      const auto ns = parse_range(n_range);
      const auto ds = parse_range(d_range);
      if (!selection || !ns || !ds) {
        err << "table: need --n/--n-range, --d/--d-range (LO..HI) and valid --bounds\n";
        return kUsage;
      }
      return report::cmd_table(q, ns->lo, ns->hi, ds->lo, ds->hi, *selection, to_variant(variant),
                               *report::parse_format(format), out);
    }
    if (*table1) {
      return report::cmd_table1(data, allowances, block, allow_documented, out, err);
    }
    if (*best_d) return report::cmd_oracle_best_d(n, k, q, budget, out, err);
    if (*refute) {
      return report::cmd_oracle_refute_check(q, n_max, k_max, d_max, to_variant(variant), budget,
                                             out, err);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace codebound::cli
