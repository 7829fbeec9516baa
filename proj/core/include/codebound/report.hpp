#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codebound/bounds.hpp"

namespace codebound::report {

/// Exit-code contract shared by every command.
enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

enum class Format { csv, text, records };
std::optional<Format> parse_format(std::string_view name) noexcept;

/// Parses a comma list of bound names (long names, one-letter aliases, "all").
std::optional<std::vector<BoundId>> parse_bound_list(std::string_view list);

// Table 1 golden data -----------------------------------------------------------

/// One row of the comparison table. `block` names the competitor bound:
/// g = Griesmer, h = Hamming, l = Levenshtein, e = Elias.
struct TableRow {
  char block = 'g';
  int q = 0;
  int n = 0;
  int d = 0;
  int k_competitor = 0;
  int k_A = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline constexpr std::string_view kTable1Header = "block,q,n,d,k_competitor,k_A";

BoundId competitor_of(char block);

std::vector<TableRow> parse_table1(std::istream& in);
std::vector<TableRow> load_table1(const std::filesystem::path& path);
void write_table1(std::ostream& out, const std::vector<TableRow>& rows);

/// A known, justified disagreement between a golden cell and the computed value.
struct Allowance {
  char block = 'g';
  int q = 0;
  int n = 0;
  int d = 0;
  std::string column;  ///< "k_competitor" or "k_A"
  int golden = 0;
  int computed = 0;
  std::string reason;
};

inline constexpr std::string_view kAllowanceHeader = "block,q,n,d,column,golden,computed,reason";

std::vector<Allowance> parse_allowances(std::istream& in);
std::vector<Allowance> load_allowances(const std::filesystem::path& path);

/// Recomputes a row's (k_competitor, k_A) with the weight variant.
TableRow compute_row(char block, int q, int n, int d);

struct Mismatch {
  TableRow expected;
  std::string column;
  int computed = 0;
};

struct DiffReport {
  std::size_t rows_checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<Mismatch> documented_allowances;

  bool success() const noexcept { return mismatches.empty(); }
};

/// Diffs `rows` whose block is in `blocks` against recomputed values. With
/// `allow_documented`, a mismatch that matches an allowance exactly (same cell,
/// same golden and computed value) is moved to documented_allowances.
DiffReport diff_table1(const std::vector<TableRow>& rows, std::string_view blocks,
                       const std::vector<Allowance>& allowances, bool allow_documented);

// Sweeps ----------------------------------------------------------------------

struct SweepRow {
  int q = 0;
  int n = 0;
  int d = 0;
  std::vector<std::optional<int>> k;  ///< one entry per selected bound

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct Sweep {
  std::vector<BoundId> bounds;  ///< canonical order
  std::vector<SweepRow> rows;   ///< ascending (n, d)
};

Sweep sweep(int q, int n_lo, int n_hi, int d_lo, int d_hi, const std::vector<BoundId>& bounds,
            TailVariant variant);

void write_sweep(std::ostream& out, const Sweep& sweep, Format format);

/// Reads the CSV form of write_sweep back.
Sweep parse_sweep_csv(std::istream& in);

// Commands --------------------------------------------------------------------

int cmd_eval(const BoundQuery& query, const std::vector<BoundId>& bounds, std::ostream& out);

int cmd_table(int q, int n_lo, int n_hi, int d_lo, int d_hi, const std::vector<BoundId>& bounds,
              TailVariant variant, Format format, std::ostream& out);

int cmd_table1(const std::filesystem::path& data, const std::filesystem::path& allowances,
               std::string_view blocks, bool allow_documented, std::ostream& out,
               std::ostream& err);

int cmd_oracle_best_d(int n, int k, int q, std::uint64_t budget, std::ostream& out,
                      std::ostream& err);

int cmd_oracle_refute_check(int q, int n_max, int k_max, int d_max, TailVariant variant,
                            std::uint64_t budget, std::ostream& out, std::ostream& err);

}  // namespace codebound::report
