#include "zl/analytic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "zl/summation.hpp"

namespace zl {

namespace {

// B_{2j} / (2j)! for j = 1..6.
constexpr std::array<double, 6> bernoulli_over_factorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
};

void require_s_above_one(double s, const char* what) {
  if (!(s > 1.0)) throw std::domain_error(std::string(what) + ": requires s > 1");
}

unsigned cutoff_for(double s, const AnalyticConfig& config) {
  return s < 1.1 ? std::max(config.em_cutoff, 100u) : config.em_cutoff;
}

struct EulerMaclaurin {
  double value;
  double derivative;
};

// sum_{n>=0} (n+q)^-s and its s-derivative: direct terms below the cutoff plus
// the Euler-Maclaurin tail at a = cutoff + q.
EulerMaclaurin hurwitz_em(double s, double q, const AnalyticConfig& config, bool want_derivative) {
  config.validate();
  const unsigned m = cutoff_for(s, config);
  CompensatedSum<double> sum;
  CompensatedSum<double> dsum;
  for (unsigned n = m; n-- > 0;) {
    const double base = static_cast<double>(n) + q;
    const double term = std::pow(base, -s);
    sum.add(term);
    if (want_derivative) dsum.add(-std::log(base) * term);
  }
  const double a = static_cast<double>(m) + q;
  const double log_a = std::log(a);
  const double a_pow = std::pow(a, -s);
  double tail = a * a_pow / (s - 1.0) + 0.5 * a_pow;
  double dtail = a * a_pow * (-log_a / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0))) - 0.5 * log_a * a_pow;
  double rising = s;  // s (s+1) ... (s+2j-2)
  double rising_log_derivative = 1.0 / s;
  double a_power = a_pow / a;  // a^(-s-2j+1)
  for (unsigned j = 1; j <= config.em_bernoulli_terms; ++j) {
    const double c = bernoulli_over_factorial[j - 1];
    tail += c * rising * a_power;
    dtail += c * a_power * (rising * rising_log_derivative - rising * log_a);
    const double k1 = s + 2.0 * j - 1.0;
    const double k2 = s + 2.0 * j;
    rising *= k1 * k2;
    rising_log_derivative += 1.0 / k1 + 1.0 / k2;
    a_power /= a * a;
  }
  sum.add(tail);
  dsum.add(dtail);
  return {sum.value(), dsum.value()};
}

double ein_series(double t, double tol) {
  // sum_{k>=1} t^k / (k k!)
  double sum = 0.0;
  double power = 1.0;
  for (int k = 1; k < 2000; ++k) {
    power *= t / k;
    const double term = power / k;
    sum += term;
    if (k > std::abs(t) && std::abs(term) <= tol * std::abs(sum)) break;
  }
  return sum;
}

extended quad_gamma() {
  static const extended value = strtoflt128("0.5772156649015328606065120900824024310422", nullptr);
  return value;
}

extended quad_half_log_2pi() {
  static const extended value = logq(2 * M_PIq) / 2;
  return value;
}

void require_n_at_least_two(std::uint64_t n, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + ": requires N >= 2");
}

ModelPair make_pair(extended exact, extended model, double tolerance) {
  return {exact, model, exact - model, tolerance};
}

ModelPair stirling_pair(std::uint64_t n, extended log_factorial) {
  const extended nn = static_cast<extended>(n);
  const extended log_n = logq(nn);
  const extended model = nn * log_n - nn + log_n / 2 + quad_half_log_2pi() + 1 / (12 * nn);
  const double nd = static_cast<double>(n);
  return make_pair(log_factorial, model, 1.0 / (100.0 * nd * nd * nd));
}

ModelPair harmonic_pair(std::uint64_t n, extended harmonic) {
  const extended nn = static_cast<extended>(n);
  const extended exact = nn * harmonic - nn;
  const extended model = nn * logq(nn) - (1 - quad_gamma()) * nn + extended(0.5) - 1 / (12 * nn);
  const double nd = static_cast<double>(n);
  return make_pair(exact, model, 1.0 / (nd * nd));
}

}  // namespace

void AnalyticConfig::validate() const {
  if (em_cutoff < 10) throw std::invalid_argument("AnalyticConfig: em_cutoff must be >= 10");
  if (!(series_tol > 0.0)) throw std::invalid_argument("AnalyticConfig: series_tol must be > 0");
  if (em_bernoulli_terms < 1 || em_bernoulli_terms > bernoulli_over_factorial.size()) {
    throw std::invalid_argument("AnalyticConfig: em_bernoulli_terms must be in [1, 6]");
  }
}

double zeta_real(double s, const AnalyticConfig& config) {
  require_s_above_one(s, "zeta_real");
  return hurwitz_em(s, 1.0, config, false).value;
}

double zeta_prime_real(double s, const AnalyticConfig& config) {
  require_s_above_one(s, "zeta_prime_real");
  return hurwitz_em(s, 1.0, config, true).derivative;
}

double hurwitz_zeta_real(double s, double q, const AnalyticConfig& config) {
  require_s_above_one(s, "hurwitz_zeta_real");
  if (!(q > 0.0)) throw std::domain_error("hurwitz_zeta_real: requires q > 0");
  return hurwitz_em(s, q, config, false).value;
}

double li_pv(double x, const AnalyticConfig& config) {
  if (!(x > 1.0)) throw std::domain_error("li_pv: requires x > 1");
  const double t = std::log(x);
  return config.euler_gamma + std::log(t) + ein_series(t, config.series_tol);
}

double lie(double x, const AnalyticConfig& config) {
  if (!(x > 0.0)) throw std::domain_error("lie: requires x > 0");
  return config.euler_gamma + std::log(x) + ein_series(x, config.series_tol);
}

double R_of_s(double s, const AnalyticConfig& config) {
  require_s_above_one(s, "R_of_s");
  return 1.0 / (s - 1.0) - zeta_real(s, config) / s;
}

bool ModelPair::within() const {
  const extended magnitude = residual < 0 ? -residual : residual;
  return magnitude <= static_cast<extended>(tolerance);
}

ModelPair stirling_model(std::uint64_t n) {
  require_n_at_least_two(n, "stirling_model");
  return stirling_models(n, n).front();
}

std::vector<ModelPair> stirling_models(std::uint64_t n_lo, std::uint64_t n_hi) {
  require_n_at_least_two(n_lo, "stirling_models");
  std::vector<ModelPair> out;
  CompensatedSum<extended> log_factorial;
  for (std::uint64_t m = 2; m <= n_hi; ++m) {
    log_factorial.add(logq(static_cast<extended>(m)));
    if (m >= n_lo) out.push_back(stirling_pair(m, log_factorial.value()));
  }
  return out;
}

ModelPair harmonic_model(std::uint64_t n) {
  require_n_at_least_two(n, "harmonic_model");
  return harmonic_models(n, n).front();
}

std::vector<ModelPair> harmonic_models(std::uint64_t n_lo, std::uint64_t n_hi) {
  require_n_at_least_two(n_lo, "harmonic_models");
  std::vector<ModelPair> out;
  CompensatedSum<extended> harmonic;
  for (std::uint64_t m = 1; m <= n_hi; ++m) {
    harmonic.add(1 / static_cast<extended>(m));
    if (m >= n_lo) out.push_back(harmonic_pair(m, harmonic.value()));
  }
  return out;
}

double psi_mean_original(double x) { return std::exp(x) - (1.0 + euler_gamma); }

double j_mean_original(double x) {
  if (!(x > 0.0)) throw std::domain_error("j_mean_original: singular at x = 0");
  return psi_mean_original(x) / x;
}

}  // namespace zl
