#pragma once

// Claim registry and bound scanners.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zl::verify {

enum class ClaimKind { identity, bound_scan, report_only };
enum class Verdict { pass, fail, report };

std::string_view to_string(ClaimKind kind);
std::string_view to_string(Verdict verdict);

/// One evaluated point. margin = rhs - lhs.
struct Row {
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  Verdict verdict = Verdict::pass;

  [[nodiscard]] double margin() const { return rhs - lhs; }
};

struct Claim {
  std::string id;
  std::string name;
  ClaimKind kind = ClaimKind::identity;
  /// What is compared, in plain words.
  std::string statement;
  std::string tolerance_rule;
};

/// Every registered claim and bound, in catalog order (C1..C15, M1..M3, B1..B4).
const std::vector<Claim>& catalog();
/// Throws std::invalid_argument for an unknown id.
const Claim& find_claim(std::string_view id);
bool is_bound(std::string_view id);

/// Outcome of a claim or a bound scan.
///
/// Identity and bound rows carry (lhs, rhs) with the row passing when
/// lhs <= rhs (identities: |residual| vs tolerance) or lhs < rhs (strict
/// bounds). The summary fields describe the worst row, the one with the
/// largest lhs / rhs. Report-only rows carry (measured, model) and never fail.
struct Result {
  std::string id;
  ClaimKind kind = ClaimKind::identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Row> rows;  ///< sorted by x; empty when rows were not kept
  std::uint64_t evaluated = 0;
  std::uint64_t failures = 0;
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  double arg_extremum = 0.0;
  /// Smallest rhs - lhs and where it occurs (bound scans).
  std::optional<double> min_margin;
  double arg_min_margin = 0.0;
  Verdict verdict = Verdict::pass;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<std::string> notes;
};
using ClaimResult = Result;
using ScanReport = Result;

struct ClaimParams {
  /// Upper end of the claim's integer or x grid; the catalog default when unset.
  std::optional<double> max;
  /// s-grid for transform claims; {1.5, 2, 3, 5, 10} when empty.
  std::vector<double> s_grid;
  unsigned threads = 1;
  bool keep_rows = true;
};

/// Runs one claim (C*, M*). Bound ids are rejected; use scan_bound.
/// Throws std::invalid_argument for an unknown id or an unsupported grid.
Result run_claim(std::string_view id, const ClaimParams& params = {});

enum class ScanMode { every_integer, log_grid, jumps };
std::string_view to_string(ScanMode mode);
ScanMode parse_scan_mode(std::string_view text);

enum class LiConvention { li, offset_li };

struct ScanOptions {
  ScanMode mode = ScanMode::every_integer;
  std::uint64_t points = 10000;  ///< log_grid only
  /// Which logarithmic integral the bound compares against. Unset means the
  /// bound's own default: offset_li (li - li(2)) for B4, li elsewhere.
  std::optional<LiConvention> li_convention;
  unsigned threads = 1;
  bool keep_rows = true;
};

/// Largest abscissa any scan accepts.
inline constexpr double scan_ceiling = 1e9;

/// Evaluates bound B1..B4 over [lo, hi].
///
/// every_integer: each integer, plus the left limit x = nextafter(n, 0) of
/// every jump n of the step function. jumps: only the two sides of each jump.
/// log_grid: `points` log-spaced abscissae with step values at floor(x).
/// Throws std::invalid_argument for an unknown id or a range outside the
/// bound's domain, std::out_of_range beyond scan_ceiling.
Result scan_bound(std::string_view id, double lo, double hi, const ScanOptions& options = {});

/// Transform pairs usable with run_laplace_pair.
const std::vector<std::string>& laplace_pair_ids();
/// Brackets of one transform pair over an s-grid. Row: x = s,
/// lhs = |closed form - bracket midpoint|, rhs = bracket half-width.
Result run_laplace_pair(std::string_view pair_id, const std::vector<double>& s_grid);

const std::vector<double>& default_s_grid();

}  // namespace zl::verify
