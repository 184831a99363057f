#pragma once

// Smooth and series-defined quantities on the real axis.

#include <quadmath.h>

#include <cstdint>
#include <vector>

namespace zl {

/// Quad precision for the two sides of asymptotic-model comparisons, whose
/// residuals fall below double rounding of the compared quantities.
using extended = __float128;

inline constexpr double euler_gamma = 0.57721566490153286;

struct AnalyticConfig {
  double euler_gamma = zl::euler_gamma;
  /// Terms summed directly before the Euler-Maclaurin tail.
  unsigned em_cutoff = 20;
  /// Bernoulli corrections B2, B4, ... used in the tail (at most 6).
  unsigned em_bernoulli_terms = 3;
  /// Relative stopping tolerance for power series.
  double series_tol = 1e-14;

  /// Throws std::invalid_argument if em_cutoff < 10, series_tol <= 0 or
  /// em_bernoulli_terms is outside [1, 6].
  void validate() const;
};

/// zeta(s) for real s > 1. Throws std::domain_error for s <= 1.
double zeta_real(double s, const AnalyticConfig& config = {});
/// zeta'(s) = -sum log(n) n^-s for real s > 1.
double zeta_prime_real(double s, const AnalyticConfig& config = {});
/// Hurwitz zeta sum_{n>=0} (n+q)^-s for s > 1, q > 0.
double hurwitz_zeta_real(double s, double q, const AnalyticConfig& config = {});

/// Principal-value logarithmic integral for x > 1, from the series
/// gamma + log log x + sum (log x)^k / (k k!). Throws std::domain_error for x <= 1.
double li_pv(double x, const AnalyticConfig& config = {});
/// li(e^x) from the same series in x directly. Throws std::domain_error for x <= 0.
double lie(double x, const AnalyticConfig& config = {});

/// Laplace transform of the remainder r: 1/(s-1) - zeta(s)/s.
double R_of_s(double s, const AnalyticConfig& config = {});

/// An exact quantity side by side with its asymptotic model.
struct ModelPair {
  extended exact = 0;
  extended model = 0;
  extended residual = 0;  ///< exact - model
  double tolerance = 0.0;

  [[nodiscard]] bool within() const;
  [[nodiscard]] double residual_value() const { return static_cast<double>(residual); }
};

/// sum_{m<=N} log m against N log N - N + log N/2 + log(2 pi)/2 + 1/(12N).
/// Tolerance 1/(100 N^3); the neglected next term is -1/(360 N^3).
ModelPair stirling_model(std::uint64_t n);
/// The same for every N in [n_lo, n_hi], sharing one running sum.
std::vector<ModelPair> stirling_models(std::uint64_t n_lo, std::uint64_t n_hi);

/// N H_N - N against N log N - (1 - gamma) N + 1/2 - 1/(12N). Tolerance 1/N^2.
ModelPair harmonic_model(std::uint64_t n);
std::vector<ModelPair> harmonic_models(std::uint64_t n_lo, std::uint64_t n_hi);

/// e^x - (1 + gamma).
double psi_mean_original(double x);
/// (e^x - (1 + gamma)) / x; throws std::domain_error for x <= 0.
double j_mean_original(double x);

}  // namespace zl
