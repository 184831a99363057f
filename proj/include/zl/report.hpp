#pragma once

// CSV and JSON rendering of claim and scan results.

#include <string>
#include <string_view>
#include <vector>

#include "zl/verify.hpp"

namespace zl::verify {

enum class Format { csv, json };
Format parse_format(std::string_view text);

/// "%.17g".
std::string format_number(double value);

/// Summary object: id, kind, params, max_abs_residual, tolerance, verdict,
/// arg_extremum, then scan extras, meta and notes when present.
nlohmann::ordered_json to_json(const Result& result);
/// Pretty-printed JSON array with a trailing newline.
std::string render_json(const std::vector<Result>& results);
/// Header "x,lhs,rhs,margin,pass" then one LF-terminated line per row.
std::string render_csv(const Result& result);

/// Writes results to destination ("-" is standard output). CSV with more than
/// one result needs an existing directory and writes <dir>/<id>.csv.
/// Throws std::invalid_argument for an empty result list or a CSV/destination
/// mismatch, std::runtime_error when the destination cannot be written.
void emit_report(const std::vector<Result>& results, Format format, const std::string& destination);

}  // namespace zl::verify
