#include "zl/laplace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "zl/quadrature.hpp"
#include "zl/summation.hpp"

namespace zl {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

void require_s(double s, const char* what) {
  if (!(s > 1.0)) throw std::domain_error(std::string(what) + ": requires s > 1");
}

struct Interval {
  double lo;
  double hi;
};

// Integral of t^-s over [a, inf).
double power_tail(double a, double s) { return std::pow(a, 1.0 - s) / (s - 1.0); }

// Integral of log(t) t^-s over [a, inf).
double log_power_tail(double a, double s) {
  return std::pow(a, 1.0 - s) * (std::log(a) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
}

// Bounds on the omitted terms of sum w_n a_n^-s beyond the materialized comb.
// Prime-power combs are majorized by the all-integer comb with the same
// weight profile.
Interval comb_tail(const StepComb& comb, double s) {
  const auto last = static_cast<double>(static_cast<std::uint64_t>(std::floor(comb.limit())));
  switch (comb.kind()) {
    case CombKind::zeta1:
      return {power_tail(last + 1.0, s), power_tail(last, s)};
    case CombKind::j_comb:
      return {0.0, power_tail(last, s)};
    case CombKind::m_comb:
    case CombKind::psi_comb: {
      // log(t) t^-s decreases for t > e^(1/s), in particular for t >= 3.
      const bool lower_ok = comb.kind() == CombKind::m_comb && last >= 3.0;
      const double lo = lower_ok ? log_power_tail(last + 1.0, s) : 0.0;
      if (last >= 3.0) return {lo, log_power_tail(last, s)};
      const auto f = [s](double t) { return std::log(t) * std::pow(t, -s); };
      return {lo, f(last + 1.0) + f(last + 2.0) + log_power_tail(last + 2.0, s)};
    }
    case CombKind::eta: {
      // Alternating with decreasing magnitude: the tail lies between 0 and
      // its first term.
      const double n = last + 1.0;
      const double first = (static_cast<std::uint64_t>(n) % 2 == 1 ? 1.0 : -1.0) * std::pow(n, -s);
      return {std::min(0.0, first), std::max(0.0, first)};
    }
    case CombKind::arithmetic: {
      const auto& spec = comb.spec();
      const double a0 = spec.start + static_cast<double>(comb.size()) * spec.stride;
      const double integral = std::pow(a0, 1.0 - s) / (spec.stride * (s - 1.0));
      return {integral, std::pow(a0, -s) + integral};
    }
  }
  return {0.0, 0.0};
}

double jump_base(const StepComb& comb, std::size_t i) {
  if (comb.kind() == CombKind::arithmetic) {
    return comb.spec().start + static_cast<double>(comb.labels()[i]) * comb.spec().stride;
  }
  return static_cast<double>(comb.labels()[i]);
}

TransformBracket make_bracket(double s, double value, double spread, Interval tail, double closed,
                              double closed_tol, std::string id) {
  TransformBracket b;
  b.s = s;
  b.numeric_lo = std::nextafter(value - spread + tail.lo, -std::numeric_limits<double>::infinity());
  b.numeric_hi = std::nextafter(value + spread + tail.hi, std::numeric_limits<double>::infinity());
  b.closed_form = closed;
  b.closed_tolerance = closed_tol;
  b.pair_id = std::move(id);
  return b;
}

}  // namespace

double comb_closed_form(const CombSpec& spec, double s, const AnalyticConfig& config) {
  require_s(s, "comb_closed_form");
  switch (spec.kind) {
    case CombKind::zeta1: return zeta_real(s, config) / s;
    case CombKind::m_comb: return -zeta_prime_real(s, config) / s;
    case CombKind::j_comb: return std::log(zeta_real(s, config)) / s;
    case CombKind::psi_comb: return -zeta_prime_real(s, config) / (s * zeta_real(s, config));
    case CombKind::eta: return -std::expm1((1.0 - s) * std::log(2.0)) * zeta_real(s, config) / s;
    case CombKind::arithmetic:
      return std::pow(spec.stride, -s) * hurwitz_zeta_real(s, spec.start / spec.stride, config) / s;
  }
  return 0.0;
}

double comb_closed_tolerance(const CombSpec& spec, double s, const AnalyticConfig& config) {
  const double closed = std::abs(comb_closed_form(spec, s, config));
  switch (spec.kind) {
    case CombKind::j_comb: return closed_form_rel_tol / s + 4.0 * eps * closed;
    case CombKind::psi_comb: return 2.0 * closed_form_rel_tol * closed;
    default: return closed_form_rel_tol * closed;
  }
}

TransformBracket laplace_comb(const StepComb& comb, double s, const CombTransformOptions& options) {
  require_s(s, "laplace_comb");
  const Interval tail = comb_tail(comb, s);
  if (options.max_tail > 0.0 && tail.hi - tail.lo > options.max_tail) {
    throw std::invalid_argument("laplace_comb: comb limit too small for the requested tail tolerance");
  }
  CompensatedSum<double> sum;
  const auto weights = comb.weights();
  for (std::size_t i = comb.size(); i-- > 0;) {
    sum.add(weights[i] * std::pow(jump_base(comb, i), -s));
  }
  const double n = static_cast<double>(comb.size());
  const double rounding = (8.0 * eps + n * eps * eps) * sum.magnitude();
  const double closed = comb_closed_form(comb.spec(), s, options.analytic);
  return make_bracket(s, sum.value() / s, rounding / s, {tail.lo / s, tail.hi / s}, closed,
                      comb_closed_tolerance(comb.spec(), s, options.analytic), std::string(to_string(comb.kind())));
}

TransformBracket laplace_quadrature(QuadratureTarget target, double s, double x_max,
                                    const QuadratureOptions& options) {
  require_s(s, "laplace_quadrature");
  if (!(x_max > 1.0)) throw std::invalid_argument("laplace_quadrature: x_max must exceed 1");

  if (target == QuadratureTarget::remainder) {
    const double beyond = std::exp(-s * x_max) / s;
    if (beyond > options.tail_tol) {
      throw std::invalid_argument("laplace_quadrature: tail beyond x_max exceeds tolerance");
    }
    // 0 <= r < 1, so everything past log(n_cut) contributes at most n_cut^-s / s.
    const double n_cut = std::ceil(std::pow(1.0 / (s * options.sweep_tol), 1.0 / s));
    const double x_cut = std::min(x_max, std::log(n_cut));
    CompensatedSum<double> value;
    double error = 0.0;
    double magnitude = 0.0;
    for (std::uint64_t n = 1;; ++n) {
      const double nd = static_cast<double>(n);
      const double a = std::log(nd);
      if (a >= x_cut) break;
      const double b = std::min(std::log(nd + 1.0), x_cut);
      const auto panel = gauss_kronrod15(
          [nd, a, s](double x) { return nd * std::expm1(x - a) * std::exp(-s * x); }, a, b);
      value.add(panel.value);
      error += panel.abs_error;
      magnitude += panel.abs_value;
    }
    const double rest = std::exp(-s * x_cut) / s;
    const double spread = error + 16.0 * eps * magnitude;
    const double zeta_part = zeta_real(s, options.analytic) / s;
    const double closed_tol = closed_form_rel_tol * zeta_part + 4.0 * eps / (s - 1.0);
    return make_bracket(s, value.value(), spread, {0.0, rest}, R_of_s(s, options.analytic), closed_tol, "r");
  }

  // lie(x) <= lie(X) + (e^x / x) / (1 - 1/X) for x >= X, and lie > 0 there.
  const double lie_at_max = lie(x_max, options.analytic);
  const double beyond = lie_at_max * std::exp(-s * x_max) / s +
                        std::exp((1.0 - s) * x_max) / (x_max * (s - 1.0) * (1.0 - 1.0 / x_max));
  if (beyond > options.tail_tol) {
    throw std::invalid_argument("laplace_quadrature: tail beyond x_max exceeds tolerance");
  }
  const auto integrand = [&](double x) { return lie(x, options.analytic) * std::exp(-s * x); };
  AdaptiveOptions adaptive;
  adaptive.abs_tol = options.abs_tol;
  adaptive.rel_tol = 0.0;
  const auto head = integrate_adaptive(integrand, 0.0, 1.0, adaptive);
  const auto body = integrate_adaptive(integrand, 1.0, x_max, adaptive);
  const double spread = head.abs_error + body.abs_error + 64.0 * eps * (head.abs_value + body.abs_value);
  const double closed = -std::log(s - 1.0) / s;
  return make_bracket(s, head.value + body.value, spread, {0.0, beyond}, closed, 4.0 * eps * std::abs(closed), "lie");
}

double er_closed(double s, const AnalyticConfig& config) {
  require_s(s, "er_closed");
  return std::log((s - 1.0) * zeta_real(s, config) / s) / s;
}

double er_expansion_variable(double s, const AnalyticConfig& config) {
  require_s(s, "er_expansion_variable");
  return (s - 1.0) * R_of_s(s, config);
}

double er_partial(double s, unsigned terms, const AnalyticConfig& config) {
  if (terms == 0) throw std::invalid_argument("er_partial: needs at least one term");
  const double u = er_expansion_variable(s, config);
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("er_partial: expansion invalid, (s-1)R(s) outside (0, 1)");
  }
  double sum = 0.0;
  double power = 1.0;
  for (unsigned k = 1; k <= terms; ++k) {
    power *= u;
    sum += power / k;
  }
  return -sum / s;
}

double kernel_residual(double s, const AnalyticConfig& config) {
  return R_of_s(s, config) - ApproxKernel::value(s);
}

}  // namespace zl
