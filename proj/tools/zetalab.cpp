// zetalab: evaluate counting functions, run claims and bound scans.
//
// Exit status: 0 when everything evaluated passes, 1 on any failing claim or
// scan (or an I/O failure), 2 on usage errors.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zl/analytic.hpp"
#include "zl/arith.hpp"
#include "zl/comb.hpp"
#include "zl/parallel.hpp"
#include "zl/report.hpp"
#include "zl/verify.hpp"

namespace {

using namespace zl;
using verify::Result;

unsigned resolve_threads(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("ZL_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("ZL_THREADS must be a positive integer");
  }
  return default_threads();
}

std::string eval_function(const std::string& fn, double x) {
  if (fn == "pi") return std::to_string(pi_count(x));
  double v = 0.0;
  if (fn == "j") v = j_value(x).value;
  else if (fn == "psi") v = psi_value(x);
  else if (fn == "li") v = li_pv(x);
  else if (fn == "lie") v = lie(x);
  else if (fn == "zeta") v = zeta_real(x);
  else if (fn == "r") v = r_value(x);
  else if (fn == "rint") v = r_integral(x);
  else throw std::invalid_argument("unknown function: " + fn);
  return verify::format_number(v);
}

int finish(const std::vector<Result>& results, const std::string& format, const std::string& out) {
  verify::emit_report(results, verify::parse_format(format), out);
  bool failed = false;
  for (const auto& r : results) {
    std::fprintf(stderr, "%s: %s\n", r.id.c_str(), std::string(verify::to_string(r.verdict)).c_str());
    failed = failed || r.verdict == verify::Verdict::fail;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for prime-counting identities, transforms and explicit bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads_flag = 0;
  std::string format = "json";
  std::string out = "-";
  app.add_option("--threads", threads_flag, "Worker threads (default: ZL_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out, "Output file or directory ('-' for standard output)");

  auto* eval = app.add_subcommand("eval", "Evaluate one function at x (or s)");
  std::string fn;
  double x = 0.0;
  eval->add_option("function", fn, "pi | j | psi | li | lie | zeta | r | rint")
      ->required()
      ->check(CLI::IsMember({"pi", "j", "psi", "li", "lie", "zeta", "r", "rint"}));
  eval->add_option("x", x, "Argument")->required();

  auto* check = app.add_subcommand("check", "Run claims from the catalog");
  std::string claim_id;
  bool all = false;
  double max = 0.0;
  std::vector<double> s_grid;
  check->add_option("id", claim_id, "Claim id (C1..C15, M1..M3)");
  check->add_flag("--all", all, "Run every claim");
  auto* max_opt = check->add_option("--max", max, "Upper end of the claim's integer or x grid");
  check->add_option("--s", s_grid, "s-grid for transform claims")->delimiter(',');

  auto* scan = app.add_subcommand("scan", "Scan an explicit bound");
  std::string bound_id;
  double from = 2.0;
  double to = 1e6;
  std::string mode = "every-integer";
  std::uint64_t points = 10000;
  std::string li_conv;
  scan->add_option("id", bound_id, "Bound id (B1..B4)")->required();
  scan->add_option("--from", from, "Lower end of the range");
  scan->add_option("--to", to, "Upper end of the range");
  scan->add_option("--mode", mode, "Sampling mode")
      ->check(CLI::IsMember({"every-integer", "every_integer", "log-grid", "log_grid", "jumps"}));
  scan->add_option("--points", points, "Points for log-grid mode")->check(CLI::PositiveNumber);
  scan->add_option("--li-convention", li_conv, "li or Li (= li - li(2)); default per bound")
      ->check(CLI::IsMember({"li", "Li"}));

  auto* laplace = app.add_subcommand("laplace", "Transform brackets of one pair over an s-grid");
  std::string pair_id;
  std::vector<double> laplace_s;
  laplace->add_option("pair", pair_id, "zeta1 | mcomb | jcomb | psicomb | eta | ze2 | ze1.5 | r | lie")->required();
  laplace->add_option("--s", laplace_s, "s-grid")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const unsigned threads = resolve_threads(threads_flag);
    if (*eval) {
      std::printf("%s\n", eval_function(fn, x).c_str());
      return 0;
    }
    if (*check) {
      if (all == !claim_id.empty()) throw std::invalid_argument("check needs exactly one of <id> or --all");
      verify::ClaimParams params;
      params.threads = threads;
      params.keep_rows = format == "csv";
      params.s_grid = s_grid;
      if (*max_opt) params.max = max;
      std::vector<Result> results;
      if (all) {
        if (*max_opt) throw std::invalid_argument("--max applies to a single claim");
        for (const auto& c : verify::catalog()) {
          if (c.kind != verify::ClaimKind::bound_scan) results.push_back(verify::run_claim(c.id, params));
        }
      } else {
        results.push_back(verify::run_claim(claim_id, params));
      }
      return finish(results, format, out);
    }
    if (*scan) {
      verify::ScanOptions options;
      options.mode = verify::parse_scan_mode(mode);
      options.points = points;
      options.threads = threads;
      options.keep_rows = format == "csv";
      if (li_conv == "li") options.li_convention = verify::LiConvention::li;
      if (li_conv == "Li") options.li_convention = verify::LiConvention::offset_li;
      return finish({verify::scan_bound(bound_id, from, to, options)}, format, out);
    }
    if (*laplace) {
      return finish({verify::run_laplace_pair(pair_id, laplace_s)}, format, out);
    }
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range and domain_error: bad input.
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
