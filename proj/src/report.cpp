#include "zl/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace zl::verify {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + std::string(text));
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

json to_json(const Result& r) {
  json j;
  j["id"] = r.id;
  j["kind"] = to_string(r.kind);
  j["params"] = r.params;
  j["max_abs_residual"] = r.max_abs_residual;
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  j["arg_extremum"] = r.arg_extremum;
  j["evaluated"] = r.evaluated;
  j["failures"] = r.failures;
  if (r.min_margin) {
    j["min_margin"] = *r.min_margin;
    j["arg_min_margin"] = r.arg_min_margin;
  }
  if (!r.meta.empty()) j["meta"] = r.meta;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string render_json(const std::vector<Result>& results) {
  json arr = json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string render_csv(const Result& r) {
  std::string out = "x,lhs,rhs,margin,pass\n";
  out.reserve(out.size() + r.rows.size() * 80);
  for (const auto& row : r.rows) {
    out += format_number(row.x);
    out += ',';
    out += format_number(row.lhs);
    out += ',';
    out += format_number(row.rhs);
    out += ',';
    out += format_number(row.margin());
    out += ',';
    out += to_string(row.verdict);
    out += '\n';
  }
  return out;
}

namespace {

void write_text(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw std::runtime_error("failed writing to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  file.close();
  if (!file) throw std::runtime_error("failed writing " + path);
}

}  // namespace

void emit_report(const std::vector<Result>& results, Format format, const std::string& destination) {
  if (results.empty()) throw std::invalid_argument("emit_report: no results to write");
  if (format == Format::json) {
    write_text(render_json(results), destination);
    return;
  }
  if (results.size() == 1) {
    if (destination != "-" && std::filesystem::is_directory(destination)) {
      write_text(render_csv(results[0]), (std::filesystem::path(destination) / (results[0].id + ".csv")).string());
    } else {
      write_text(render_csv(results[0]), destination);
    }
    return;
  }
  if (destination == "-" || !std::filesystem::is_directory(destination)) {
    throw std::invalid_argument("CSV output of several results needs an existing directory as destination");
  }
  for (const auto& r : results) {
    write_text(render_csv(r), (std::filesystem::path(destination) / (r.id + ".csv")).string());
  }
}

}  // namespace zl::verify
