#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "zl/comb.hpp"

using namespace zl;

namespace {
std::vector<double> logs(std::initializer_list<double> ns) {
  std::vector<double> out;
  for (double n : ns) out.push_back(std::log(n));
  return out;
}
}  // namespace

TEST_CASE("build_comb examples") {
  const auto z = build_comb(CombSpec::of(CombKind::zeta1), 4);
  CHECK(std::vector<double>(z.jumps().begin(), z.jumps().end()) == logs({1, 2, 3, 4}));
  CHECK(std::vector<double>(z.weights().begin(), z.weights().end()) == std::vector<double>{1, 1, 1, 1});

  const auto j = build_comb(CombSpec::of(CombKind::j_comb), 10);
  CHECK(std::vector<double>(j.jumps().begin(), j.jumps().end()) == logs({2, 3, 4, 5, 7, 8, 9}));
  const std::vector<double> jw = {1, 1, 0.5, 1, 1, 1.0 / 3.0, 0.5};
  CHECK(std::vector<double>(j.weights().begin(), j.weights().end()) == jw);

  const auto a = build_comb(CombSpec::arithmetic(2, 2), 9);
  CHECK(std::vector<double>(a.jumps().begin(), a.jumps().end()) == logs({2, 4, 6, 8}));
  CHECK(a.size() == 4);

  CHECK_THROWS_AS(build_comb(CombSpec::of(CombKind::zeta1), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_comb(CombSpec::arithmetic(2, 0), 10), std::invalid_argument);
}

TEST_CASE("eval and integrate examples") {
  const auto z = build_comb(CombSpec::of(CombKind::zeta1), 100);
  CHECK(eval_comb(z, std::log(3.0)) == 3.0);
  CHECK(eval_comb(z, 0.5) == 1.0);
  CHECK(integrate_comb(z, std::log(2.0)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(integrate_comb(z, std::log(3.0)) == doctest::Approx(1.5040774).epsilon(1e-7));
  CHECK_THROWS_AS((void)eval_comb(z, -0.1), std::out_of_range);
  CHECK_THROWS_AS((void)eval_comb(z, std::log(101.0)), std::out_of_range);

  const auto psi = build_comb(CombSpec::of(CombKind::psi_comb), 100);
  const double expect = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
  CHECK(eval_comb(psi, std::log(10.0)) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(expect == doctest::Approx(7.8320142).epsilon(1e-7));

  const auto eta = build_comb(CombSpec::of(CombKind::eta), 100);
  CHECK(integrate_comb(eta, std::log(2.0)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("zeta1 hits n exactly at log n") {
  const auto z = build_comb(CombSpec::of(CombKind::zeta1), 100000);
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    REQUIRE(eval_comb(z, std::log(static_cast<double>(n))) == static_cast<double>(n));
    REQUIRE(z.eval_at_integer(n) == static_cast<double>(n));
  }
}

TEST_CASE("jcomb value equals direct prime-power sum") {
  const auto j = build_comb(CombSpec::of(CombKind::j_comb), 1e5);
  CHECK(j.eval_at_integer(20) == doctest::Approx(115.0 / 12.0).epsilon(1e-12));
  CHECK(j.eval_at_integer(100) == doctest::Approx(428.0 / 15.0).epsilon(1e-12));
  double direct = 0.0;
  std::size_t idx = 0;
  const auto labels = j.labels();
  const auto exps = j.exponents();
  for (std::uint64_t n = 2; n <= 100000; n += 7) {
    while (idx < labels.size() && labels[idx] <= n) direct += 1.0 / exps[idx++];
    REQUIRE(std::abs(j.eval_at_integer(n) - direct) < 1e-12 * std::max(1.0, direct));
  }
}

TEST_CASE("remainder r") {
  CHECK(r_value(std::log(2.5)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r_value(std::log(3.0)) == 0.0);
  CHECK(r_value(0.5) == doctest::Approx(std::exp(0.5) - 1.0).epsilon(1e-15));
  CHECK(r_value(0.5) == doctest::Approx(0.6487213).epsilon(1e-7));

  const auto z = build_comb(CombSpec::of(CombKind::zeta1), 1e6);
  for (int i = 0; i <= 20000; ++i) {
    const double x = i * (std::log(1e6) / 20000.0);
    const double r = r_value(x);
    REQUIRE(r >= 0.0);
    REQUIRE(r < 1.0);
    REQUIRE(std::abs(r - r_value(z, x)) < 1e-9);
  }
}

TEST_CASE("integral of r") {
  CHECK(r_integral(std::log(2.0)) == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-14));
  CHECK(r_integral(0.0) == 0.0);
  const double direct = r_integral(std::log(10.0));
  CHECK(std::abs(direct - 1.0785) < 1e-3);
  CHECK(direct == doctest::Approx(1.0785616431).epsilon(1e-10));  // mpmath
  CHECK(std::abs((direct - r_value(std::log(10.0))) - r_integral_model(10, 0.0)) < 0.01);
  CHECK(std::abs((r_integral(std::log(2.0)) - r_value(std::log(2.0))) - r_integral_model(2, 0.0)) < 0.25);

  const auto z = build_comb(CombSpec::of(CombKind::zeta1), 1e6);
  for (int i = 1; i <= 1000; ++i) {
    const double x = i * (std::log(1e6) / 1000.0);
    REQUIRE(r_integral(x) < x / 2.0);
    REQUIRE(std::abs(r_integral(x) - r_integral(z, x)) < 1e-8);
  }
}

TEST_CASE("r_integral_model") {
  const double half_log_2pi = 0.5 * std::log(2.0 * 3.14159265358979323846);
  CHECK(r_integral_model(10, 0.0) ==
        doctest::Approx(0.5 * std::log(10.0) + half_log_2pi - 1.0 + 1.0 / 120.0).epsilon(1e-15));
  // 1 - 6c + 6c^2 = -0.5 at c = 0.5
  CHECK(r_integral_model(10, 0.5) ==
        doctest::Approx(0.5 * std::log(10.5) + half_log_2pi - 1.5 - 0.5 / (12 * 10.5)).epsilon(1e-15));
  CHECK_THROWS_AS(r_integral_model(10, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(r_integral_model(10, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(r_integral_model(1, 0.0), std::invalid_argument);
}

TEST_CASE("eta comb is a unit square wave") {
  const auto eta = build_comb(CombSpec::of(CombKind::eta), 1e4);
  for (int i = 0; i <= 5000; ++i) {
    const double v = eval_comb(eta, i * (std::log(1e4) / 5000.0));
    REQUIRE((v == 0.0 || v == 1.0));
  }
}

TEST_CASE("integrals of nonnegative combs are nondecreasing") {
  for (auto kind : {CombKind::zeta1, CombKind::j_comb, CombKind::psi_comb, CombKind::m_comb}) {
    const auto c = build_comb(CombSpec::of(kind), 1e4);
    double prev = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double v = integrate_comb(c, i * (std::log(1e4) / 2000.0));
      REQUIRE(v >= prev);
      prev = v;
    }
  }
}
