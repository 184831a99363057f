#pragma once

#include <cstddef>
#include <functional>

namespace zl {

struct QuadResult {
  double value = 0.0;
  /// Estimated absolute error (|K15 - G7| per panel, summed).
  double abs_error = 0.0;
  /// Integral of |f|, used for rounding allowances.
  double abs_value = 0.0;
  std::size_t evaluations = 0;
};

/// One Gauss-Kronrod 7/15 panel on [a, b].
QuadResult gauss_kronrod15(const std::function<double(double)>& f, double a, double b);

struct AdaptiveOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  std::size_t max_panels = 4000;
};

/// Globally adaptive bisection of [a, b] driven by the largest panel error.
/// Stops at the tolerance or when max_panels is reached; the returned error
/// estimate is honest either way.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const AdaptiveOptions& options = {});

}  // namespace zl
