#include "zl/comb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zl/summation.hpp"

namespace zl {

std::string_view to_string(CombKind kind) {
  switch (kind) {
    case CombKind::zeta1: return "zeta1";
    case CombKind::j_comb: return "jcomb";
    case CombKind::psi_comb: return "psicomb";
    case CombKind::m_comb: return "mcomb";
    case CombKind::eta: return "eta";
    case CombKind::arithmetic: return "arithmetic";
  }
  return "unknown";
}

namespace {

bool is_prime_power_kind(CombKind kind) { return kind == CombKind::j_comb || kind == CombKind::psi_comb; }

// Largest n >= 0 with log(n) <= x, using the same std::log rounding as the
// stored jump positions (n = 0 when x < 0).
std::uint64_t zeta1_count(double x) {
  if (x < 0.0) return 0;
  auto n = static_cast<std::uint64_t>(std::floor(std::exp(x)));
  while (n > 1 && std::log(static_cast<double>(n)) > x) --n;
  while (std::log(static_cast<double>(n + 1)) <= x) ++n;
  return std::max<std::uint64_t>(n, 1);
}

}  // namespace

void StepComb::check_position(double x) const {
  if (!(x >= 0.0) || x > max_position_) {
    throw std::out_of_range("comb evaluated outside its materialized range [0, log(limit)]");
  }
}

std::size_t StepComb::count_le(double x) const {
  return static_cast<std::size_t>(std::upper_bound(jumps_.begin(), jumps_.end(), x) - jumps_.begin());
}

double StepComb::eval(double x) const {
  check_position(x);
  if (spec_.kind == CombKind::j_comb) {
    double value = 0.0;
    for (std::size_t k = 1; k < positions_by_k_.size(); ++k) {
      const auto& pos = positions_by_k_[k];
      const auto count = std::upper_bound(pos.begin(), pos.end(), x) - pos.begin();
      value += static_cast<double>(count) / static_cast<double>(k);
    }
    return value;
  }
  return prefix_weight_[count_le(x)];
}

double StepComb::eval_at_integer(std::uint64_t n) const {
  if (spec_.kind == CombKind::arithmetic) {
    throw std::invalid_argument("integer-indexed evaluation is not defined for arithmetic combs");
  }
  if (n == 0 || static_cast<double>(n) > limit_) throw std::out_of_range("integer outside comb range");
  if (spec_.kind == CombKind::j_comb) {
    double value = 0.0;
    for (std::size_t k = 1; k < labels_by_k_.size(); ++k) {
      const auto& lab = labels_by_k_[k];
      const auto count = std::upper_bound(lab.begin(), lab.end(), n) - lab.begin();
      value += static_cast<double>(count) / static_cast<double>(k);
    }
    return value;
  }
  const auto idx = std::upper_bound(labels_.begin(), labels_.end(), n) - labels_.begin();
  return prefix_weight_[static_cast<std::size_t>(idx)];
}

double StepComb::integrate(double x) const {
  check_position(x);
  const std::size_t idx = count_le(x);
  return prefix_weight_[idx] * x - prefix_moment_[idx];
}

void StepComb::finalize() {
  prefix_weight_.assign(jumps_.size() + 1, 0.0);
  prefix_moment_.assign(jumps_.size() + 1, 0.0);
  CompensatedSum<double> w;
  CompensatedSum<double> m;
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    w.add(weights_[i]);
    m.add(weights_[i] * jumps_[i]);
    prefix_weight_[i + 1] = w.value();
    prefix_moment_[i + 1] = m.value();
  }
  if (spec_.kind == CombKind::j_comb) {
    unsigned max_k = 1;
    for (unsigned k : exponents_) max_k = std::max(max_k, k);
    positions_by_k_.assign(max_k + 1, {});
    labels_by_k_.assign(max_k + 1, {});
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
      positions_by_k_[exponents_[i]].push_back(jumps_[i]);
      labels_by_k_[exponents_[i]].push_back(labels_[i]);
    }
  }
}

StepComb build_comb(const CombSpec& spec, double limit, const sieve::SieveOptions& options) {
  if (!(limit >= 1.0)) throw std::invalid_argument("build_comb: limit must be >= 1");
  StepComb comb;
  comb.spec_ = spec;
  comb.limit_ = limit;
  comb.max_position_ = std::log(limit);

  if (is_prime_power_kind(spec.kind)) {
    for (const auto& pp : sieve::prime_powers_up_to(limit, options)) {
      comb.jumps_.push_back(std::log(static_cast<double>(pp.value)));
      comb.labels_.push_back(pp.value);
      comb.exponents_.push_back(pp.k);
      comb.bases_.push_back(pp.p);
      comb.weights_.push_back(spec.kind == CombKind::j_comb ? 1.0 / pp.k
                                                            : std::log(static_cast<double>(pp.p)));
    }
  } else if (spec.kind == CombKind::arithmetic) {
    if (!(spec.start >= 1.0) || !(spec.stride > 0.0)) {
      throw std::invalid_argument("arithmetic comb needs start >= 1 and stride > 0");
    }
    for (std::uint64_t m = 0;; ++m) {
      const double a = spec.start + static_cast<double>(m) * spec.stride;
      if (a > limit) break;
      comb.jumps_.push_back(std::log(a));
      comb.labels_.push_back(m);
      comb.exponents_.push_back(1);
      comb.bases_.push_back(0);
      comb.weights_.push_back(1.0);
    }
  } else {
    const auto top = static_cast<std::uint64_t>(std::floor(limit));
    if (top > options.ceiling) throw std::out_of_range("build_comb: limit exceeds ceiling");
    comb.jumps_.reserve(top);
    for (std::uint64_t n = 1; n <= top; ++n) {
      const double log_n = std::log(static_cast<double>(n));
      comb.jumps_.push_back(log_n);
      comb.labels_.push_back(n);
      comb.exponents_.push_back(1);
      comb.bases_.push_back(0);
      switch (spec.kind) {
        case CombKind::zeta1: comb.weights_.push_back(1.0); break;
        case CombKind::m_comb: comb.weights_.push_back(log_n); break;
        case CombKind::eta: comb.weights_.push_back(n % 2 == 1 ? 1.0 : -1.0); break;
        default: break;
      }
    }
  }
  comb.finalize();
  return comb;
}

// ---------------------------------------------------------------------------

double r_value(double x) {
  if (!(x >= 0.0)) throw std::out_of_range("r_value: x must be >= 0");
  const std::uint64_t n = zeta1_count(x);
  const double nd = static_cast<double>(n);
  // e^x - n written as n*(e^(x - log n) - 1): zero at the jump, never negative.
  return nd * std::expm1(x - std::log(nd));
}

double r_value(const StepComb& zeta1, double x) {
  if (zeta1.kind() != CombKind::zeta1) throw std::invalid_argument("r_value needs a zeta1 comb");
  const double count = zeta1.eval(x);
  const std::size_t idx = zeta1.count_le(x);
  return count * std::expm1(x - zeta1.jumps()[idx - 1]);
}

double r_integral(double x) {
  if (!(x >= 0.0)) throw std::out_of_range("r_integral: x must be >= 0");
  const std::uint64_t n = zeta1_count(x);
  const double nd = static_cast<double>(n);
  // sum_{m <= n} (x - log m) = n x - log n!
  return std::expm1(x) - (nd * x - std::lgamma(nd + 1.0));
}

double r_integral(const StepComb& zeta1, double x) {
  if (zeta1.kind() != CombKind::zeta1) throw std::invalid_argument("r_integral needs a zeta1 comb");
  return std::expm1(x) - zeta1.integrate(x);
}

double r_integral_model(std::uint64_t n, double c) {
  if (n < 2) throw std::invalid_argument("r_integral_model: N must be >= 2");
  if (!(c >= 0.0 && c < 1.0)) throw std::invalid_argument("r_integral_model: c must lie in [0, 1)");
  const double nc = static_cast<double>(n) + c;
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return 0.5 * std::log(nc) + half_log_2pi - 1.0 - c + (1.0 - 6.0 * c + 6.0 * c * c) / (12.0 * nc);
}

}  // namespace zl
