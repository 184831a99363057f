#include "zl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "zl/analytic.hpp"
#include "zl/arith.hpp"
#include "zl/comb.hpp"
#include "zl/laplace.hpp"
#include "zl/parallel.hpp"
#include "zl/summation.hpp"

namespace zl::verify {

using json = nlohmann::ordered_json;

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::identity: return "identity";
    case ClaimKind::bound_scan: return "bound_scan";
    case ClaimKind::report_only: return "report_only";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::report: return "report";
  }
  return "?";
}

std::string_view to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::every_integer: return "every_integer";
    case ScanMode::log_grid: return "log_grid";
    case ScanMode::jumps: return "jumps";
  }
  return "?";
}

ScanMode parse_scan_mode(std::string_view text) {
  if (text == "every_integer" || text == "every-integer") return ScanMode::every_integer;
  if (text == "log_grid" || text == "log-grid") return ScanMode::log_grid;
  if (text == "jumps") return ScanMode::jumps;
  throw std::invalid_argument("unknown scan mode: " + std::string(text));
}

const std::vector<double>& default_s_grid() {
  static const std::vector<double> grid = {1.5, 2.0, 3.0, 5.0, 10.0};
  return grid;
}

const std::vector<Claim>& catalog() {
  using K = ClaimKind;
  static const std::vector<Claim> claims = {
      {"C1", "stirling", K::identity, "sum of log m for m <= N against its Stirling expansion through 1/(12N)",
       "1/(100 N^3)"},
      {"C2", "r-integral", K::identity,
       "integral of r over [0, log N] minus r(log N) against the closed model with c = 0", "1/N^2"},
      {"C3", "r-offset", K::identity,
       "r(log(N + c)) = c, and the integral model with offset c", "1e-9 for the offset, 1/N^2 for the model"},
      {"C4", "harmonic", K::identity, "N H_N - N against N log N - (1 - gamma) N + 1/2 - 1/(12N)", "1/N^2"},
      {"C5", "laplace-zeta1", K::identity, "transform bracket of the integer step comb contains zeta(s)/s",
       "bracket half-width"},
      {"C6", "laplace-lie", K::identity, "quadrature bracket of lie contains -log(s - 1)/s", "bracket half-width"},
      {"C7", "laplace-r", K::identity, "quadrature bracket of r contains R(s) = 1/(s-1) - zeta(s)/s",
       "bracket half-width"},
      {"C8", "er-expansion", K::identity,
       "partial sums of -(1/s) sum u^k/k, u = (s-1)R(s), decrease to (1/s) log((s-1) zeta(s)/s), with 0 < u < 1",
       "1e-9 at K = 30"},
      {"C9", "mobius-roundtrip", K::identity, "sum mu(n)/n J(x^(1/n)) reproduces pi(x)", "1e-9"},
      {"C10", "psi-sum", K::identity, "sum over k <= x of psi(x/k) equals log(floor(x)!)", "1e-6 x"},
      {"C11", "psi-zeta-product", K::identity,
       "zeta(s) times s times the psi-comb transform bracket contains -zeta'(s)", "scaled half-width + 1e-12 rel"},
      {"C12", "series-domination", K::identity,
       "sum_{k<=40} (x/2)^k/(k k!) < 3 e^(x/2)/x and the three-term comparison at a = 3, for x > 12",
       "strict inequality"},
      {"C13", "r-integral-half", K::identity, "integral of r over [0, x] stays below x/2", "strict inequality"},
      {"C14", "li-sqrt-bracket", K::identity, "2 sqrt(x)/log x < li(sqrt(x)) < 4 sqrt(x)/log x for x >= 100",
       "strict inequality"},
      {"C15", "exact-algebra", K::identity, "zeta(s)/(s(s-1)) = 1/(s-1)^2 - R(s)/(s-1)", "1e-12"},
      {"M1", "psi-mean", K::report_only, "psi(x) against the mean model x - (1 + gamma) log x", "none"},
      {"M2", "kernel", K::report_only, "R(s) against 1/(2s) - 1/(6(s+1)) + 7/12 - gamma", "none"},
      {"M3", "ze-combs", K::report_only,
       "transforms of the combs 2, 4, 6, ... and 1.5, 2.5, 3.5, ... against their Hurwitz closed forms", "none"},
      {"B1", "j-li", K::bound_scan, "|J(x) - li(x)| < 3 sqrt(x)/log x for x > e^12", "strict inequality"},
      {"B2", "pi-li", K::bound_scan, "-5 sqrt(x)/log x < pi(x) - li(x) < 2 sqrt(x)/log x", "strict inequality"},
      {"B3", "psi-x", K::bound_scan, "|psi(x) - x| < 2 sqrt(x)", "strict inequality"},
      {"B4", "figure6", K::bound_scan, "|J(x) - Li(x)| < 0.7 sqrt(x)/log x with Li(x) = li(x) - li(2)",
       "strict inequality"},
  };
  return claims;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : catalog()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown claim id: " + std::string(id));
}

bool is_bound(std::string_view id) { return find_claim(id).kind == ClaimKind::bound_scan; }

namespace {

Verdict le(double lhs, double rhs) { return lhs <= rhs ? Verdict::pass : Verdict::fail; }
Verdict lt(double lhs, double rhs) { return lhs < rhs ? Verdict::pass : Verdict::fail; }

// Running summary of rows; merges in row order so ties resolve to the
// earliest row regardless of how work was split.
struct Aggregate {
  std::uint64_t evaluated = 0;
  std::uint64_t failures = 0;
  bool has_worst = false;
  Row worst;
  bool has_min = false;
  Row min_row;
  bool has_report = false;
  Row report_row;

  static bool worse(const Row& a, const Row& b) {
    const bool fa = a.verdict == Verdict::fail;
    const bool fb = b.verdict == Verdict::fail;
    if (fa != fb) return fa;
    if (fa) return a.margin() < b.margin();
    const auto ratio = [](const Row& r) {
      return r.rhs > 0.0 ? r.lhs / r.rhs : -std::numeric_limits<double>::infinity();
    };
    return ratio(a) > ratio(b);
  }

  void add(const Row& row) {
    ++evaluated;
    if (row.verdict == Verdict::report) {
      if (!has_report || std::abs(row.margin()) > std::abs(report_row.margin())) report_row = row;
      has_report = true;
      return;
    }
    if (row.verdict == Verdict::fail) ++failures;
    if (!has_worst || worse(row, worst)) worst = row;
    has_worst = true;
    if (!has_min || row.margin() < min_row.margin()) min_row = row;
    has_min = true;
  }

  void merge(const Aggregate& other) {
    evaluated += other.evaluated;
    failures += other.failures;
    if (other.has_report && (!has_report || std::abs(other.report_row.margin()) > std::abs(report_row.margin()))) {
      report_row = other.report_row;
      has_report = true;
    }
    if (other.has_worst && (!has_worst || worse(other.worst, worst))) {
      worst = other.worst;
      has_worst = true;
    }
    if (other.has_min && (!has_min || other.min_row.margin() < min_row.margin())) {
      min_row = other.min_row;
      has_min = true;
    }
  }
};

void apply(Result& result, const Aggregate& agg) {
  result.evaluated = agg.evaluated;
  result.failures = agg.failures;
  if (result.kind == ClaimKind::report_only) {
    result.verdict = Verdict::report;
    result.tolerance = 0.0;
    if (agg.has_report) {
      result.max_abs_residual = std::abs(agg.report_row.margin());
      result.arg_extremum = agg.report_row.x;
    }
    return;
  }
  result.verdict = agg.failures == 0 ? Verdict::pass : Verdict::fail;
  if (agg.has_worst) {
    result.max_abs_residual = agg.worst.lhs;
    result.tolerance = agg.worst.rhs;
    result.arg_extremum = agg.worst.x;
  }
  if (result.kind == ClaimKind::bound_scan && agg.has_min) {
    result.min_margin = agg.min_row.margin();
    result.arg_min_margin = agg.min_row.x;
  }
}

// Sorts rows by x (stable: rows sharing an x keep their emission order) and
// fills the summary.
void finish(Result& result, std::vector<Row> rows, bool keep_rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.x < b.x; });
  Aggregate agg;
  for (const auto& r : rows) agg.add(r);
  apply(result, agg);
  if (keep_rows) result.rows = std::move(rows);
}

Result start(std::string_view id, json params) {
  Result r;
  r.id = std::string(id);
  r.kind = find_claim(id).kind;
  r.params = std::move(params);
  return r;
}

std::uint64_t grid_max(const ClaimParams& p, std::uint64_t fallback, std::uint64_t floor_value,
                       std::uint64_t ceiling) {
  if (!p.max) return fallback;
  const double m = *p.max;
  if (!(m >= static_cast<double>(floor_value)) || m > static_cast<double>(ceiling)) {
    throw std::invalid_argument("claim grid maximum outside [" + std::to_string(floor_value) + ", " +
                                std::to_string(ceiling) + "]");
  }
  return static_cast<std::uint64_t>(std::floor(m));
}

const std::vector<double>& s_grid_of(const ClaimParams& p) {
  if (p.s_grid.empty()) return default_s_grid();
  for (double s : p.s_grid) {
    if (!(s > 1.0) || !std::isfinite(s)) throw std::invalid_argument("s-grid values must be finite and > 1");
  }
  return p.s_grid;
}

constexpr double comb_limit = 1e6;
constexpr double r_x_max = 30.0;
constexpr double lie_x_max = 40.0;

// ---------------------------------------------------------------------------
// Claims

Result claim_model_pairs(std::string_view id, const ClaimParams& p, bool stirling) {
  const std::uint64_t n_max = grid_max(p, 10000, 2, 10'000'000);
  Result r = start(id, json{{"n_from", 2}, {"n_to", n_max}});
  const auto pairs = stirling ? stirling_models(2, n_max) : harmonic_models(2, n_max);
  std::vector<Row> rows;
  rows.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& mp = pairs[i];
    rows.push_back({static_cast<double>(i + 2), std::abs(mp.residual_value()), mp.tolerance,
                    mp.within() ? Verdict::pass : Verdict::fail});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_r_integral(const ClaimParams& p) {
  const std::uint64_t n_max = grid_max(p, 10000, 2, 100'000'000);
  Result r = start("C2", json{{"n_from", 2}, {"n_to", n_max}, {"c", 0.0}});
  std::vector<Row> rows;
  rows.reserve(n_max);
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const double x = std::log(static_cast<double>(n));
    const double direct = r_integral(x) - r_value(x);
    const double lhs = std::abs(direct - r_integral_model(n, 0.0));
    const double tol = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    rows.push_back({static_cast<double>(n), lhs, tol, le(lhs, tol)});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_r_offset(const ClaimParams& p) {
  static const std::vector<double> offsets = {0.0, 0.25, 0.5, 0.75, 0.99};
  const std::uint64_t n_max = grid_max(p, 10000, 2, 10'000'000);
  Result r = start("C3", json{{"n_from", 2}, {"n_to", n_max}, {"c", offsets}, {"offset_tolerance", 1e-9}});
  r.meta["row_order"] = "two rows per (N, c) at x = N + c: offset |r - c|, then model residual";
  std::vector<Row> rows;
  rows.reserve(2 * offsets.size() * n_max);
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    const double tol = 1.0 / (nd * nd);
    for (double c : offsets) {
      const double x = std::log(nd + c);
      const double rv = r_value(x);
      const double offset = std::abs(rv - c);
      rows.push_back({nd + c, offset, 1e-9, le(offset, 1e-9)});
      const double model = std::abs(r_integral(x) - rv - r_integral_model(n, c));
      rows.push_back({nd + c, model, tol, le(model, tol)});
    }
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_er_expansion(const ClaimParams& p) {
  constexpr unsigned terms = 30;
  const auto& grid = s_grid_of(p);
  Result r = start("C8", json{{"s", grid}, {"terms", terms}, {"tolerance", 1e-9}});
  r.meta["row_order"] = "three rows per s: u = (s-1)R(s) vs 1, |partial - closed| at K = 30, "
                        "max increase of the partial sums over K (must be <= 0)";
  std::vector<Row> rows;
  for (double s : grid) {
    const double u = er_expansion_variable(s);
    rows.push_back({s, u, 1.0, (u > 0.0 && u < 1.0) ? Verdict::pass : Verdict::fail});
    if (!(u > 0.0 && u < 1.0)) continue;
    const double gap = std::abs(er_partial(s, terms) - er_closed(s));
    rows.push_back({s, gap, 1e-9, le(gap, 1e-9)});
    double rise = -std::numeric_limits<double>::infinity();
    double prev = er_partial(s, 1);
    for (unsigned k = 2; k <= terms; ++k) {
      const double next = er_partial(s, k);
      rise = std::max(rise, next - prev);
      prev = next;
    }
    rows.push_back({s, rise, 0.0, le(rise, 0.0)});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_mobius(const ClaimParams& p) {
  const std::uint64_t x_max = grid_max(p, 100000, 2, 10'000'000);
  Result r = start("C9", json{{"x_from", 2}, {"x_to", x_max}, {"tolerance", 1e-9}});
  const PrimeTable table(x_max);
  std::vector<Row> rows;
  rows.reserve(x_max);
  for (std::uint64_t x = 2; x <= x_max; ++x) {
    const double lhs = std::abs(pi_from_j(table, static_cast<double>(x)) - static_cast<double>(table.pi(x)));
    rows.push_back({static_cast<double>(x), lhs, 1e-9, le(lhs, 1e-9)});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_psi_sum(const ClaimParams& p) {
  const std::uint64_t x_max = grid_max(p, 10000, 2, 200'000);
  Result r = start("C10", json{{"x_from", 2}, {"x_to", x_max}, {"tolerance", "1e-6 x"}});
  const PrimeTable table(x_max);
  std::vector<Row> rows;
  rows.reserve(x_max);
  CompensatedSum<double> log_factorial;
  for (std::uint64_t x = 2; x <= x_max; ++x) {
    log_factorial.add(std::log(static_cast<double>(x)));
    CompensatedSum<double> lhs_sum;
    for (std::uint64_t k = 1; k <= x; ++k) lhs_sum.add(table.psi(x / k));
    const double diff = std::abs(lhs_sum.value() - log_factorial.value());
    const double tol = 1e-6 * static_cast<double>(x);
    rows.push_back({static_cast<double>(x), diff, tol, le(diff, tol)});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_psi_zeta(const ClaimParams& p) {
  const auto& grid = s_grid_of(p);
  Result r = start("C11", json{{"s", grid}, {"comb_limit", comb_limit}, {"relative_widening", 1e-12}});
  const StepComb comb = build_comb(CombSpec::of(CombKind::psi_comb), comb_limit);
  std::vector<Row> rows;
  for (double s : grid) {
    const auto b = laplace_comb(comb, s);
    const double z = zeta_real(s);
    const double target = -zeta_prime_real(s);
    const double lo = s * z * b.numeric_lo;
    const double hi = s * z * b.numeric_hi;
    const double half = 0.5 * (hi - lo) + 1e-12 * std::abs(target);
    const double gap = std::abs(target - 0.5 * (lo + hi));
    rows.push_back({s, gap, half, le(gap, half)});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

double series_lhs(double x) {
  const double y = 0.5 * x;
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 40; ++k) {
    term *= y / k;  // y^k / k!
    sum += term / k;
  }
  return sum;
}

Result claim_series(const ClaimParams& p) {
  Result r = start("C12", json{{"x_from", 12.25}, {"x_to", 40.0}, {"x_step", 0.25}, {"terms", 40}});
  r.meta["row_order"] = "two rows per x: 40-term series vs 3 e^(x/2)/x, then three-term comparison at a = 3";
  std::vector<Row> rows;
  for (int i = 1; i <= 112; ++i) {
    const double x = 12.0 + 0.25 * i;
    const double lhs = series_lhs(x);
    const double rhs = 3.0 * std::exp(0.5 * x) / x;
    rows.push_back({x, lhs, rhs, lt(lhs, rhs)});
    const double left3 = x / 2.0 + x * x / 16.0 + x * x * x / 144.0;
    const double right3 = 3.0 * x / 8.0 + x * x / 16.0 + x * x * x / 128.0;
    rows.push_back({x, left3, right3, lt(left3, right3)});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_r_half(const ClaimParams& p) {
  const std::uint64_t top = grid_max(p, 1000000, 2, 100'000'000);
  const double x_top = std::log(static_cast<double>(top));
  Result r = start("C13", json{{"x_from", x_top / 1000.0}, {"x_to", x_top}, {"points", 1000}});
  std::vector<Row> rows;
  for (int k = 0; k < 1000; ++k) {
    const double x = (k + 1) / 1000.0 * x_top;
    const double lhs = r_integral(x);
    rows.push_back({x, lhs, 0.5 * x, lt(lhs, 0.5 * x)});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

std::vector<double> log_spaced(double lo, double hi, std::uint64_t points) {
  std::vector<double> xs;
  if (points <= 1 || lo == hi) return {lo};
  xs.reserve(points);
  const double ratio = std::log(hi / lo);
  for (std::uint64_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    xs.push_back(i == 0 ? lo : (i + 1 == points ? hi : lo * std::exp(ratio * t)));
  }
  return xs;
}

Result claim_li_sqrt(const ClaimParams& p) {
  const std::uint64_t top = grid_max(p, 100'000'000, 101, 1'000'000'000'000ULL);
  Result r = start("C14", json{{"x_from", 100}, {"x_to", top}, {"points", 1000}});
  r.meta["row_order"] = "two rows per x: 2 sqrt(x)/log x vs li(sqrt x), then li(sqrt x) vs 4 sqrt(x)/log x";
  std::vector<Row> rows;
  for (double x : log_spaced(100.0, static_cast<double>(top), 1000)) {
    const double root = std::sqrt(x);
    const double li = li_pv(root);
    const double lower = 2.0 * root / std::log(x);
    rows.push_back({x, lower, li, lt(lower, li)});
    rows.push_back({x, li, 2.0 * lower, lt(li, 2.0 * lower)});
  }
  // Where the lower bound starts to hold below 100.
  double last_fail = 0.0;
  for (double x : log_spaced(1.0 + 1e-6, 100.0, 10000)) {
    const double root = std::sqrt(x);
    if (!(2.0 * root / std::log(x) < li_pv(root))) last_fail = x;
  }
  r.meta["lower_bound_last_failure_below_100"] = last_fail;
  r.notes.push_back("lower bound 2 sqrt(x)/log x < li(sqrt x) fails on a 10^4-point log grid of (1, 100] up to x = " +
                    std::to_string(last_fail));
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_exact_algebra(const ClaimParams& p) {
  const auto& grid = s_grid_of(p);
  Result r = start("C15", json{{"s", grid}, {"tolerance", 1e-12}});
  std::vector<Row> rows;
  for (double s : grid) {
    const double left = zeta_real(s) / (s * (s - 1.0));
    const double right = 1.0 / ((s - 1.0) * (s - 1.0)) - R_of_s(s) / (s - 1.0);
    const double gap = std::abs(left - right);
    rows.push_back({s, gap, 1e-12, le(gap, 1e-12)});
  }
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_psi_mean(const ClaimParams& p) {
  const std::uint64_t top = grid_max(p, 1'000'000, 11, 100'000'000);
  Result r = start("M1", json{{"x_from", 10}, {"x_to", top}, {"points", 1000}});
  RangeCounterOptions opts;
  opts.threads = p.threads;
  const RangeCounter counter(top, opts);
  const auto xs = log_spaced(10.0, static_cast<double>(top), 1000);
  std::vector<std::uint64_t> ns;
  ns.reserve(xs.size());
  for (double x : xs) ns.push_back(static_cast<std::uint64_t>(std::floor(x)));
  std::vector<Row> rows;
  rows.reserve(xs.size());
  std::size_t i = 0;
  const double a = 1.0 + euler_gamma;
  counter.sample(ns, [&](const CountSnapshot& snap) {
    const double x = xs[i++];
    rows.push_back({x, snap.psi, x - a * std::log(x), Verdict::report});
  });
  CompensatedSum<double> deviation;
  counter.visit(1, top, [&](const CountSnapshot& snap) { deviation.add(snap.psi - static_cast<double>(snap.n)); });
  const double mean = deviation.value() / static_cast<double>(top);
  r.meta["rows"] = "lhs = psi(floor x), rhs = x - (1 + gamma) log x";
  r.meta["running_mean_psi_minus_x"] = mean;
  r.meta["model_constant"] = -a;
  r.notes.push_back("mean of psi(n) - n over 1 <= n <= " + std::to_string(top) + " is " + std::to_string(mean));
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_kernel(const ClaimParams& p) {
  const auto& grid = s_grid_of(p);
  Result r = start("M2", json{{"s", grid}});
  r.meta["rows"] = "lhs = R(s), rhs = F(s) + 7/12 - gamma; margin = -(kernel residual)";
  std::vector<Row> rows;
  for (double s : grid) rows.push_back({s, R_of_s(s), ApproxKernel::value(s), Verdict::report});
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

Result claim_ze_combs(const ClaimParams& p) {
  const auto& grid = s_grid_of(p);
  Result r = start("M3", json{{"s", grid}, {"comb_limit", comb_limit}});
  r.meta["rows"] = "two rows per s: comb 2, 4, 6, ... then comb 1.5, 2.5, 3.5, ...; lhs = bracket midpoint, "
                   "rhs = stride^-s zeta(s, start/stride)/s";
  const StepComb ze2 = build_comb(CombSpec::arithmetic(2.0, 2.0), comb_limit);
  const StepComb ze15 = build_comb(CombSpec::arithmetic(1.5, 1.0), comb_limit);
  std::vector<Row> rows;
  json widths = json::array();
  for (double s : grid) {
    for (const StepComb* comb : {&ze2, &ze15}) {
      const auto b = laplace_comb(*comb, s);
      rows.push_back({s, b.midpoint(), b.closed_form, Verdict::report});
      widths.push_back(b.half_width());
    }
  }
  r.meta["half_widths"] = widths;
  finish(r, std::move(rows), p.keep_rows);
  return r;
}

// ---------------------------------------------------------------------------
// Bound scans

struct StepValues {
  std::uint64_t pi = 0;
  double j = 0.0;
  double psi = 0.0;
};

struct BoundDef {
  bool needs_psi = false;
  bool jumps_at_primes_only = false;
  double domain_lo = 2.0;
  std::function<std::pair<double, double>(double, const StepValues&)> eval;
};

BoundDef bound_def(std::string_view id, LiConvention conv) {
  const double li2 = li_pv(2.0);
  const auto li_of = [conv, li2](double x) { return conv == LiConvention::li ? li_pv(x) : li_pv(x) - li2; };
  const auto u_of = [](double x) { return std::sqrt(x) / std::log(x); };
  BoundDef d;
  if (id == "B1") {
    d.domain_lo = std::exp(12.0);
    d.eval = [=](double x, const StepValues& v) {
      return std::pair{std::abs(v.j - li_of(x)), 3.0 * u_of(x)};
    };
  } else if (id == "B2") {
    d.jumps_at_primes_only = true;
    d.eval = [=](double x, const StepValues& v) {
      const double u = u_of(x);
      return std::pair{std::abs(static_cast<double>(v.pi) - li_of(x) + 1.5 * u), 3.5 * u};
    };
  } else if (id == "B3") {
    d.needs_psi = true;
    d.domain_lo = 1.0;
    d.eval = [](double x, const StepValues& v) { return std::pair{std::abs(v.psi - x), 2.0 * std::sqrt(x)}; };
  } else if (id == "B4") {
    d.eval = [=](double x, const StepValues& v) {
      return std::pair{std::abs(v.j - li_of(x)), 0.7 * u_of(x)};
    };
  } else {
    throw std::invalid_argument("unknown bound id: " + std::string(id));
  }
  return d;
}

struct ChunkOut {
  std::vector<Row> rows;
  Aggregate agg;
};

// Scans integers in [n_lo, n_hi]. With jumps_only, only the two sides of
// each jump produce rows.
void scan_integers(const BoundDef& def, double lo, std::uint64_t n_lo, std::uint64_t n_hi, bool jumps_only,
                   const ScanOptions& options, Aggregate& total, std::vector<Row>& rows) {
  RangeCounterOptions copts;
  copts.threads = options.threads;
  copts.track_psi = def.needs_psi;
  const RangeCounter counter(n_hi, copts);
  const std::size_t first = counter.chunk_of(n_lo);
  const std::size_t last = counter.chunk_of(n_hi);
  std::vector<ChunkOut> outs(last - first + 1);
  parallel_for(outs.size(), options.threads, [&](std::size_t i) {
    const std::size_t c = first + i;
    ChunkOut& out = outs[i];
    const auto emit = [&](double x, const StepValues& v) {
      const auto [lhs, rhs] = def.eval(x, v);
      const Row row{x, lhs, rhs, lt(lhs, rhs)};
      out.agg.add(row);
      if (options.keep_rows) out.rows.push_back(row);
    };
    counter.visit(std::max(n_lo, counter.chunk_lo(c)), std::min(n_hi, counter.chunk_hi(c)),
                  [&](const CountSnapshot& s) {
                    const bool jump = def.jumps_at_primes_only ? s.prime : s.prime_power;
                    if (jump) {
                      const double left = std::nextafter(static_cast<double>(s.n), 0.0);
                      if (left >= lo) emit(left, {s.pi_before, s.j_before, s.psi_before});
                    } else if (jumps_only) {
                      return;
                    }
                    emit(static_cast<double>(s.n), {s.pi, s.j, s.psi});
                  });
  });
  for (auto& out : outs) {
    total.merge(out.agg);
    if (options.keep_rows) rows.insert(rows.end(), out.rows.begin(), out.rows.end());
  }
}

void scan_log_grid(const BoundDef& def, double lo, double hi, const ScanOptions& options, Aggregate& total,
                   std::vector<Row>& rows) {
  const auto xs = log_spaced(lo, hi, options.points);
  std::vector<std::uint64_t> ns;
  ns.reserve(xs.size());
  for (double x : xs) ns.push_back(static_cast<std::uint64_t>(std::floor(x)));
  RangeCounterOptions copts;
  copts.threads = options.threads;
  copts.track_psi = def.needs_psi;
  const RangeCounter counter(ns.back(), copts);
  std::size_t i = 0;
  counter.sample(ns, [&](const CountSnapshot& s) {
    const double x = xs[i++];
    const auto [lhs, rhs] = def.eval(x, {s.pi, s.j, s.psi});
    const Row row{x, lhs, rhs, lt(lhs, rhs)};
    total.add(row);
    if (options.keep_rows) rows.push_back(row);
  });
}

void scan_range(const BoundDef& def, double lo, double hi, const ScanOptions& options, Aggregate& total,
                std::vector<Row>& rows) {
  if (options.mode == ScanMode::log_grid) {
    scan_log_grid(def, lo, hi, options, total, rows);
    return;
  }
  const auto n_lo = static_cast<std::uint64_t>(std::ceil(lo));
  const auto n_hi = static_cast<std::uint64_t>(std::floor(hi));
  if (n_lo > n_hi) return;
  scan_integers(def, lo, n_lo, n_hi, options.mode == ScanMode::jumps, options, total, rows);
}

Result laplace_pair(std::string_view pair_id, const std::vector<double>& grid, std::string id) {
  Result r;
  r.id = std::move(id);
  r.kind = ClaimKind::identity;
  json params{{"pair", pair_id}, {"s", grid}};
  const bool comb_pair = pair_id != "r" && pair_id != "lie";
  if (comb_pair) params["comb_limit"] = comb_limit;
  if (pair_id == "r") params["x_max"] = r_x_max;
  if (pair_id == "lie") params["x_max"] = lie_x_max;
  r.params = params;

  std::optional<StepComb> comb;
  if (pair_id == "zeta1") comb = build_comb(CombSpec::of(CombKind::zeta1), comb_limit);
  else if (pair_id == "mcomb") comb = build_comb(CombSpec::of(CombKind::m_comb), comb_limit);
  else if (pair_id == "jcomb") comb = build_comb(CombSpec::of(CombKind::j_comb), comb_limit);
  else if (pair_id == "psicomb") comb = build_comb(CombSpec::of(CombKind::psi_comb), comb_limit);
  else if (pair_id == "eta") comb = build_comb(CombSpec::of(CombKind::eta), comb_limit);
  else if (pair_id == "ze2") comb = build_comb(CombSpec::arithmetic(2.0, 2.0), comb_limit);
  else if (pair_id == "ze1.5") comb = build_comb(CombSpec::arithmetic(1.5, 1.0), comb_limit);
  else if (comb_pair) throw std::invalid_argument("unknown transform pair: " + std::string(pair_id));

  std::vector<Row> rows;
  json brackets = json::array();
  for (double s : grid) {
    if (!(s > 1.0) || !std::isfinite(s)) throw std::invalid_argument("s-grid values must be finite and > 1");
    TransformBracket b;
    if (comb) b = laplace_comb(*comb, s);
    else if (pair_id == "r") b = laplace_quadrature(QuadratureTarget::remainder, s, r_x_max);
    else b = laplace_quadrature(QuadratureTarget::lie, s, lie_x_max);
    rows.push_back({s, std::abs(b.closed_form - b.midpoint()), b.half_width() + b.closed_tolerance,
                    b.contains() ? Verdict::pass : Verdict::fail});
    brackets.push_back(json{{"s", s},
                            {"lo", b.numeric_lo},
                            {"hi", b.numeric_hi},
                            {"closed_form", b.closed_form},
                            {"closed_tolerance", b.closed_tolerance}});
  }
  r.meta["brackets"] = brackets;
  finish(r, std::move(rows), true);
  return r;
}

}  // namespace

const std::vector<std::string>& laplace_pair_ids() {
  static const std::vector<std::string> ids = {"zeta1", "mcomb", "jcomb", "psicomb", "eta", "ze2", "ze1.5", "r", "lie"};
  return ids;
}

Result run_laplace_pair(std::string_view pair_id, const std::vector<double>& s_grid) {
  const auto& ids = laplace_pair_ids();
  if (std::find(ids.begin(), ids.end(), pair_id) == ids.end()) {
    throw std::invalid_argument("unknown transform pair: " + std::string(pair_id));
  }
  return laplace_pair(pair_id, s_grid.empty() ? default_s_grid() : s_grid, "laplace-" + std::string(pair_id));
}

Result run_claim(std::string_view id, const ClaimParams& params) {
  const Claim& claim = find_claim(id);
  if (claim.kind == ClaimKind::bound_scan) throw std::invalid_argument(claim.id + " is a bound; use scan_bound");
  const auto laplace_claim = [&](std::string_view pair) {
    Result r = laplace_pair(pair, s_grid_of(params), claim.id);
    if (!params.keep_rows) r.rows.clear();
    return r;
  };
  if (id == "C1") return claim_model_pairs(id, params, true);
  if (id == "C2") return claim_r_integral(params);
  if (id == "C3") return claim_r_offset(params);
  if (id == "C4") return claim_model_pairs(id, params, false);
  if (id == "C5") return laplace_claim("zeta1");
  if (id == "C6") return laplace_claim("lie");
  if (id == "C7") return laplace_claim("r");
  if (id == "C8") return claim_er_expansion(params);
  if (id == "C9") return claim_mobius(params);
  if (id == "C10") return claim_psi_sum(params);
  if (id == "C11") return claim_psi_zeta(params);
  if (id == "C12") return claim_series(params);
  if (id == "C13") return claim_r_half(params);
  if (id == "C14") return claim_li_sqrt(params);
  if (id == "C15") return claim_exact_algebra(params);
  if (id == "M1") return claim_psi_mean(params);
  if (id == "M2") return claim_kernel(params);
  return claim_ze_combs(params);
}

Result scan_bound(std::string_view id, double lo, double hi, const ScanOptions& options) {
  const Claim& claim = find_claim(id);
  if (claim.kind != ClaimKind::bound_scan) throw std::invalid_argument(claim.id + " is not a bound");
  if (!(std::isfinite(lo) && std::isfinite(hi)) || lo > hi) throw std::invalid_argument("scan range must satisfy lo <= hi");
  if (hi > scan_ceiling) throw std::out_of_range("scan range beyond the 1e9 ceiling");
  if (options.mode == ScanMode::log_grid && options.points == 0) throw std::invalid_argument("log grid needs points");
  const LiConvention conv = options.li_convention.value_or(id == "B4" ? LiConvention::offset_li : LiConvention::li);
  const BoundDef def = bound_def(id, conv);

  json params{{"from", lo}, {"to", hi}, {"mode", to_string(options.mode)}};
  if (options.mode == ScanMode::log_grid) params["points"] = options.points;
  params["li_convention"] = conv == LiConvention::li ? "li" : "li(x) - li(2)";
  Result r = start(id, params);

  double eff_lo = lo;
  if (id == "B1") {
    // Domain is x > e^12; report where the bound already holds below it.
    const double edge = def.domain_lo;
    if (hi <= edge) throw std::invalid_argument("B1 is stated for x > e^12");
    eff_lo = std::max(lo, std::nextafter(edge, std::numeric_limits<double>::infinity()));
    if (eff_lo != lo) r.notes.push_back("range clipped to the stated domain x > e^12");
    ScanOptions below = options;
    below.mode = ScanMode::every_integer;
    below.keep_rows = true;
    Aggregate ignored;
    std::vector<Row> low_rows;
    scan_range(def, 2.0, edge, below, ignored, low_rows);
    double last_fail = 0.0;
    for (const auto& row : low_rows) {
      if (row.verdict == Verdict::fail) last_fail = row.x;
    }
    r.meta["largest_failure_below_e12"] = last_fail;
    r.notes.push_back(last_fail == 0.0 ? "bound holds at every integer and jump in [2, e^12]"
                                       : "largest failing abscissa in [2, e^12]: " + std::to_string(last_fail));
  } else if (lo < def.domain_lo) {
    throw std::invalid_argument(claim.id + " scans need lo >= " + std::to_string(def.domain_lo));
  }
  if (id == "B4") {
    r.meta["li_convention"] = conv == LiConvention::li ? "li(x)" : "Li(x) = li(x) - li(2)";
    r.notes.push_back("the li(x) reading fails near x = 100 (|J - li| = 1.5928 > 1.5202); Li = li - li(2) is the default");
  }

  Aggregate agg;
  std::vector<Row> rows;
  scan_range(def, eff_lo, hi, options, agg, rows);
  apply(r, agg);
  if (options.keep_rows) r.rows = std::move(rows);
  return r;
}

}  // namespace zl::verify
