#pragma once

// Laplace transforms on the real axis s > 1, reported as rigorous brackets.

#include <string>

#include "zl/analytic.hpp"
#include "zl/comb.hpp"

namespace zl {

/// A numerically computed transform value with an interval that accounts for
/// truncation tails and rounding, next to the closed form it should contain.
struct TransformBracket {
  double s = 0.0;
  double numeric_lo = 0.0;
  double numeric_hi = 0.0;
  double closed_form = 0.0;
  /// Accuracy budget of the closed form itself (its zeta evaluations are
  /// accurate to closed_form_rel_tol, not to the last bit).
  double closed_tolerance = 0.0;
  std::string pair_id;

  [[nodiscard]] bool contains() const {
    return numeric_lo - closed_tolerance <= closed_form && closed_form <= numeric_hi + closed_tolerance;
  }
  [[nodiscard]] double midpoint() const { return 0.5 * (numeric_lo + numeric_hi); }
  [[nodiscard]] double half_width() const { return 0.5 * (numeric_hi - numeric_lo); }
};

/// Relative accuracy assumed for zeta_real / zeta_prime_real / hurwitz_zeta_real.
inline constexpr double closed_form_rel_tol = 1e-12;

/// F(s) = 1/(2s) - 1/(6(s+1)) plus the constant offset 7/12 - gamma.
struct ApproxKernel {
  static double form(double s) { return 1.0 / (2.0 * s) - 1.0 / (6.0 * (s + 1.0)); }
  static double offset() { return 7.0 / 12.0 - euler_gamma; }
  static double value(double s) { return form(s) + offset(); }
};

struct CombTransformOptions {
  /// Largest acceptable width of the truncation-tail interval (before the 1/s
  /// factor). Zero disables the check.
  double max_tail = 0.0;
  AnalyticConfig analytic{};
};

/// (1/s) sum_{a_n <= limit} w_n a_n^-s plus an analytic bound on the omitted
/// terms. Throws std::domain_error for s <= 1 and std::invalid_argument when
/// the tail is wider than options.max_tail.
TransformBracket laplace_comb(const StepComb& comb, double s, const CombTransformOptions& options = {});

/// Closed form of the transform of a comb kind (for arithmetic combs the
/// Hurwitz form stride^-s zeta(s, start/stride) / s).
double comb_closed_form(const CombSpec& spec, double s, const AnalyticConfig& config = {});
/// Absolute accuracy budget of comb_closed_form at s.
double comb_closed_tolerance(const CombSpec& spec, double s, const AnalyticConfig& config = {});

enum class QuadratureTarget { remainder, lie };

struct QuadratureOptions {
  /// Required bound on the neglected part of the integral beyond x_max.
  double tail_tol = 1e-8;
  /// For the remainder: the panel sweep stops once the rest of the integral is
  /// below this (0 <= r < 1 bounds it).
  double sweep_tol = 1e-9;
  double abs_tol = 1e-13;
  AnalyticConfig analytic{};
};

/// Integral over [0, x_max] of f(x) e^(-s x) with f = r or lie, bracketed by
/// the quadrature error estimate and the analytic tail bound. Throws
/// std::domain_error for s <= 1, std::invalid_argument when the tail beyond
/// x_max exceeds options.tail_tol.
TransformBracket laplace_quadrature(QuadratureTarget target, double s, double x_max,
                                    const QuadratureOptions& options = {});

/// (1/s) log((s-1) zeta(s) / s).
double er_closed(double s, const AnalyticConfig& config = {});
/// -(1/s) sum_{k=1}^{K} u^k / k with u = (s-1) R(s). Throws std::domain_error
/// unless 0 < u < 1.
double er_partial(double s, unsigned terms, const AnalyticConfig& config = {});
/// u = (s-1) R(s), the expansion variable of er_partial.
double er_expansion_variable(double s, const AnalyticConfig& config = {});

/// R(s) - (F(s) + 7/12 - gamma).
double kernel_residual(double s, const AnalyticConfig& config = {});

}  // namespace zl
