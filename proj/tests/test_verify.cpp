#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "zl/analytic.hpp"
#include "zl/arith.hpp"
#include "zl/report.hpp"
#include "zl/verify.hpp"

using namespace zl;
using namespace zl::verify;

namespace {

const Row* row_at(const Result& r, double x) {
  for (const auto& row : r.rows) {
    if (row.x == x) return &row;
  }
  return nullptr;
}

// Minimum margin of a bound over x = n + j/10, values of the step functions
// taken at floor(x).
double dense_min_margin(std::string_view id, double lo, double hi) {
  const PrimeTable table(static_cast<std::uint64_t>(hi));
  const double li2 = li_pv(2.0);
  double best = INFINITY;
  for (double n = lo; n <= hi; n += 1.0) {
    for (int j = 0; j < 10; ++j) {
      const double x = n + j / 10.0;
      if (x > hi) break;
      const auto k = static_cast<std::uint64_t>(x);
      const double u = std::sqrt(x) / std::log(x);
      double lhs = 0.0;
      double rhs = 0.0;
      if (id == "B2") {
        lhs = std::abs(static_cast<double>(table.pi(k)) - li_pv(x) + 1.5 * u);
        rhs = 3.5 * u;
      } else if (id == "B3") {
        lhs = std::abs(table.psi(k) - x);
        rhs = 2.0 * std::sqrt(x);
      } else {
        lhs = std::abs(table.j(k).value - (li_pv(x) - li2));
        rhs = 0.7 * u;
      }
      best = std::min(best, rhs - lhs);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("catalog ids are unique and all executable") {
  std::set<std::string> ids;
  for (const auto& c : catalog()) {
    CHECK(ids.insert(c.id).second);
    CHECK(!c.statement.empty());
  }
  CHECK(ids.size() == 22);
  CHECK_THROWS_AS(find_claim("C99"), std::invalid_argument);

  ClaimParams small;
  small.max = 300;
  for (const auto& c : catalog()) {
    if (c.kind == ClaimKind::bound_scan) {
      CHECK_THROWS_AS(run_claim(c.id), std::invalid_argument);
      const double lo = c.id == "B3" ? 1.0 : 2.0;
      const double hi = c.id == "B1" ? 2e5 : 300.0;
      const auto r = scan_bound(c.id, lo, hi);
      CHECK(r.evaluated > 0);
      continue;
    }
    const bool uses_max = c.id == "C1" || c.id == "C2" || c.id == "C3" || c.id == "C4" || c.id == "C9" ||
                          c.id == "C10" || c.id == "C13" || c.id == "C14" || c.id == "M1";
    const auto r = uses_max ? run_claim(c.id, small) : run_claim(c.id);
    INFO(c.id);
    CHECK(r.id == c.id);
    CHECK(r.evaluated > 0);
    if (c.kind == ClaimKind::report_only) {
      CHECK(r.verdict == Verdict::report);
    } else {
      CHECK(r.verdict == Verdict::pass);
      CHECK(r.failures == 0);
    }
    CHECK(std::is_sorted(r.rows.begin(), r.rows.end(), [](const Row& a, const Row& b) { return a.x < b.x; }));
  }
}

TEST_CASE("claim examples") {
  ClaimParams c9;
  c9.max = 1000;
  const auto r9 = run_claim("C9", c9);
  CHECK(r9.verdict == Verdict::pass);
  CHECK(r9.max_abs_residual < 1e-9);
  CHECK(r9.rows.size() == 999);

  const auto m2 = run_claim("M2");
  const Row* at2 = row_at(m2, 2.0);
  REQUIRE(at2 != nullptr);
  CHECK(at2->lhs - at2->rhs == doctest::Approx(-0.0230291463).epsilon(1e-9));
  CHECK(m2.verdict == Verdict::report);

  ClaimParams grid;
  grid.s_grid = {2.0};
  CHECK(run_claim("C5", grid).rows.size() == 1);
  grid.s_grid = {0.5};
  CHECK_THROWS_AS(run_claim("C5", grid), std::invalid_argument);
  ClaimParams huge;
  huge.max = 1e12;
  CHECK_THROWS_AS(run_claim("C9", huge), std::invalid_argument);
}

TEST_CASE("verdict follows residual versus tolerance") {
  for (const char* id : {"C1", "C4", "C15"}) {
    const auto r = run_claim(id);
    CHECK((r.verdict == Verdict::pass) == (r.max_abs_residual <= r.tolerance));
  }
}

TEST_CASE("claims are deterministic across thread counts") {
  ClaimParams a;
  a.threads = 1;
  ClaimParams b;
  b.threads = 3;
  CHECK(render_json({run_claim("M1", a)}) == render_json({run_claim("M1", b)}));
  CHECK(render_json({run_claim("C3", a)}) == render_json({run_claim("C3", a)}));
}

TEST_CASE("bound scan examples at x = 100") {
  const auto b2 = scan_bound("B2", 2, 1e4);
  CHECK(b2.failures == 0);
  CHECK(b2.verdict == Verdict::pass);
  const Row* r2 = row_at(b2, 100.0);
  REQUIRE(r2 != nullptr);
  const double u = 10.0 / std::log(100.0);
  // li(100) - pi(100) = 5.1261 inside (-2u, 5u) = (-4.343, 10.857)
  CHECK(r2->lhs == doctest::Approx(std::abs(25.0 - 30.1261415841 + 1.5 * u)).epsilon(1e-9));
  CHECK(5 * u == doctest::Approx(10.857).epsilon(1e-4));
  CHECK(2 * u == doctest::Approx(4.343).epsilon(1e-3));

  const auto b3 = scan_bound("B3", 1, 1e4);
  CHECK(b3.failures == 0);
  const Row* r3 = row_at(b3, 100.0);
  REQUIRE(r3 != nullptr);
  CHECK(r3->lhs == doctest::Approx(100.0 - 94.0453112294).epsilon(1e-9));
  CHECK(r3->rhs == 20.0);

  const auto b4 = scan_bound("B4", 2, 1e4);
  const Row* r4 = row_at(b4, 100.0);
  REQUIRE(r4 != nullptr);
  CHECK(r4->lhs == doctest::Approx(std::abs(28.5333333333 - 29.0809778)).epsilon(1e-6));
  CHECK(r4->rhs == doctest::Approx(1.5200307).epsilon(1e-6));
  CHECK(r4->verdict == Verdict::pass);
  // The bound is violated at x = 19 (|9.58333 - 8.52346| > 1.03627.
  const Row* r19 = row_at(b4, 19.0);
  REQUIRE(r19 != nullptr);
  CHECK(r19->verdict == Verdict::fail);
  CHECK(r19->lhs == doctest::Approx(1.0598712806).epsilon(1e-9));
}

TEST_CASE("B4 with plain li fails near x = 100") {
  ScanOptions plain;
  plain.li_convention = LiConvention::li;
  const auto r = scan_bound("B4", 90, 110, plain);
  const Row* at100 = row_at(r, 100.0);
  REQUIRE(at100 != nullptr);
  CHECK(at100->lhs == doctest::Approx(1.5928082507).epsilon(1e-9));
  CHECK(at100->rhs == doctest::Approx(1.5200307).epsilon(1e-6));
  CHECK(at100->verdict == Verdict::fail);
  CHECK(r.verdict == Verdict::fail);
  CHECK(r.params["li_convention"] == "li");
  CHECK(scan_bound("B4", 90, 110).params["li_convention"] == "li(x) - li(2)");
}

TEST_CASE("integers plus jump sides find the dense-grid minimum margin") {
  for (const char* id : {"B2", "B3", "B4"}) {
    const double lo = std::string_view(id) == "B3" ? 1.0 : 2.0;
    const auto r = scan_bound(id, lo, 3000);
    REQUIRE(r.min_margin.has_value());
    INFO(id);
    CHECK(*r.min_margin <= dense_min_margin(id, lo, 3000) + 1e-9);
  }
}

TEST_CASE("scan rows: sorted, margins consistent, jump sides present") {
  const auto r = scan_bound("B3", 1, 2000);
  CHECK(std::is_sorted(r.rows.begin(), r.rows.end(), [](const Row& a, const Row& b) { return a.x < b.x; }));
  double min_margin = INFINITY;
  for (const auto& row : r.rows) min_margin = std::min(min_margin, row.margin());
  CHECK(*r.min_margin == min_margin);
  // 8 = 2^3 is a jump of psi: left limit carries psi(7).
  const Row* left = row_at(r, std::nextafter(8.0, 0.0));
  REQUIRE(left != nullptr);
  CHECK(left->lhs == doctest::Approx(std::abs(psi_value(7) - 8.0)).epsilon(1e-12));
  // 6 is not a prime power: no left-limit row.
  CHECK(row_at(r, std::nextafter(6.0, 0.0)) == nullptr);

  const auto jumps = [] {
    ScanOptions o;
    o.mode = ScanMode::jumps;
    return scan_bound("B3", 1, 2000, o);
  }();
  for (const auto& row : jumps.rows) {
    const double n = std::ceil(row.x);
    CHECK(sieve::von_mangoldt(static_cast<std::uint64_t>(n)) > 0.0);
  }
}

TEST_CASE("scan modes are deterministic across thread counts") {
  ScanOptions one;
  one.threads = 1;
  ScanOptions four;
  four.threads = 4;
  const auto a = scan_bound("B2", 2, 3e6, one);
  const auto b = scan_bound("B2", 2, 3e6, four);
  CHECK(render_json({a}) == render_json({b}));
  CHECK(render_csv(a) == render_csv(b));
  one.mode = four.mode = ScanMode::log_grid;
  one.points = four.points = 500;
  CHECK(render_csv(scan_bound("B3", 1, 1e7, one)) == render_csv(scan_bound("B3", 1, 1e7, four)));
}

TEST_CASE("keep_rows off keeps the summary") {
  ScanOptions off;
  off.keep_rows = false;
  const auto with = scan_bound("B2", 2, 1e5);
  const auto without = scan_bound("B2", 2, 1e5, off);
  CHECK(without.rows.empty());
  CHECK(render_json({with}) == render_json({without}));
}

TEST_CASE("log grid") {
  ScanOptions grid;
  grid.mode = ScanMode::log_grid;
  grid.points = 101;
  const auto r = scan_bound("B2", 10, 1e6, grid);
  REQUIRE(r.rows.size() == 101);
  CHECK(r.rows.front().x == 10.0);
  CHECK(r.rows.back().x == 1e6);
  CHECK(r.rows[50].x == doctest::Approx(1e3 * std::sqrt(10.0)).epsilon(1e-12));
}

TEST_CASE("B1 domain and report of the lower range") {
  const auto r = scan_bound("B1", 2, 3e5);
  CHECK(r.rows.front().x > std::exp(12.0));
  CHECK(r.meta.contains("largest_failure_below_e12"));
  CHECK(r.verdict == Verdict::pass);
  CHECK_THROWS_AS(scan_bound("B1", 2, 1e5), std::invalid_argument);
}

TEST_CASE("scan argument errors") {
  CHECK_THROWS_AS(scan_bound("B9", 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(scan_bound("C1", 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(scan_bound("B2", 10, 2), std::invalid_argument);
  CHECK_THROWS_AS(scan_bound("B2", 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(scan_bound("B2", 2, 2e9), std::out_of_range);
  CHECK(parse_scan_mode("every-integer") == ScanMode::every_integer);
  CHECK_THROWS_AS(parse_scan_mode("dense"), std::invalid_argument);
}

TEST_CASE("laplace pairs") {
  for (const auto& id : laplace_pair_ids()) {
    const auto r = run_laplace_pair(id, {1.5, 2, 3, 5, 10});
    INFO(id);
    CHECK(r.rows.size() == 5);
    if (id != "eta") CHECK(r.verdict == Verdict::pass);
  }
  // Eta is the checkable reading (1 - 2^(1-s)) zeta(s) / s.
  CHECK(run_laplace_pair("eta", {2}).verdict == Verdict::pass);
  CHECK_THROWS_AS(run_laplace_pair("nope", {2}), std::invalid_argument);
}
