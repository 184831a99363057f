#pragma once

// Step combs on the logarithmic abscissa: sum_n w_n u(x - log a_n).
//
// The unit step follows u(0) = 1, so a jump at x0 is part of the value at
// every x >= x0. This is what makes r(log N) = 0 at every integer N.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "zl/sieve.hpp"

namespace zl {

enum class CombKind {
  zeta1,       ///< jumps at log n, weight 1
  j_comb,      ///< jumps at log p^k, weight 1/k
  psi_comb,    ///< jumps at log p^k, weight log p
  m_comb,      ///< jumps at log n, weight log n
  eta,         ///< jumps at log n, weight (-1)^(n+1)
  arithmetic,  ///< jumps at log(start + m*stride), weight 1
};

struct CombSpec {
  CombKind kind = CombKind::zeta1;
  double start = 0.0;   ///< arithmetic only
  double stride = 0.0;  ///< arithmetic only

  static CombSpec of(CombKind kind) { return {kind, 0.0, 0.0}; }
  static CombSpec arithmetic(double start, double stride) { return {CombKind::arithmetic, start, stride}; }
};

std::string_view to_string(CombKind kind);

class StepComb {
 public:
  [[nodiscard]] const CombSpec& spec() const { return spec_; }
  [[nodiscard]] CombKind kind() const { return spec_.kind; }
  [[nodiscard]] double limit() const { return limit_; }
  /// log(limit): the right end of the evaluable range.
  [[nodiscard]] double max_position() const { return max_position_; }

  [[nodiscard]] std::span<const double> jumps() const { return jumps_; }
  [[nodiscard]] std::span<const double> weights() const { return weights_; }
  /// Integer identity of each jump: n for the integer kinds, p^k for the
  /// prime-power kinds, m for arithmetic combs.
  [[nodiscard]] std::span<const std::uint64_t> labels() const { return labels_; }
  /// Exponent k of each jump (prime-power kinds; 1 otherwise).
  [[nodiscard]] std::span<const unsigned> exponents() const { return exponents_; }
  /// Base prime of each jump (prime-power kinds; 0 otherwise).
  [[nodiscard]] std::span<const std::uint64_t> bases() const { return bases_; }
  [[nodiscard]] std::size_t size() const { return jumps_.size(); }

  /// Number of jumps at positions <= x.
  [[nodiscard]] std::size_t count_le(double x) const;

  /// Sum of weights over jumps <= x. Throws std::out_of_range outside [0, max_position].
  [[nodiscard]] double eval(double x) const;
  /// Value at x = log n decided on the integer labels, independent of how log n rounds.
  /// Not available for arithmetic combs.
  [[nodiscard]] double eval_at_integer(std::uint64_t n) const;
  /// sum_i w_i * max(0, x - jump_i).
  [[nodiscard]] double integrate(double x) const;

 private:
  friend StepComb build_comb(const CombSpec&, double, const sieve::SieveOptions&);
  void check_position(double x) const;
  void finalize();

  CombSpec spec_;
  double limit_ = 1.0;
  double max_position_ = 0.0;
  std::vector<double> jumps_;
  std::vector<double> weights_;
  std::vector<std::uint64_t> labels_;
  std::vector<unsigned> exponents_;
  std::vector<std::uint64_t> bases_;
  // prefix_weight_[i] = sum of the first i weights; prefix_moment_[i] = sum of w*jump.
  std::vector<double> prefix_weight_;
  std::vector<double> prefix_moment_;
  // Per-exponent jump positions and labels for the 1/k-weighted comb, so that
  // values are assembled as sum_k count_k / k from integer counts.
  std::vector<std::vector<double>> positions_by_k_;
  std::vector<std::vector<std::uint64_t>> labels_by_k_;
};

/// Materializes every jump with a_n <= limit. Throws std::invalid_argument for
/// limit < 1 or a malformed arithmetic spec; sieve ceiling errors propagate.
StepComb build_comb(const CombSpec& spec, double limit, const sieve::SieveOptions& options = {});

inline double eval_comb(const StepComb& comb, double x) { return comb.eval(x); }
inline double integrate_comb(const StepComb& comb, double x) { return comb.integrate(x); }

// ---------------------------------------------------------------------------
// The remainder r(x) = e^x - zeta1(x)

/// r(x) for x >= 0, using the integer-step comb without materializing it.
double r_value(double x);
/// r(x) evaluated against a prebuilt zeta1 comb.
double r_value(const StepComb& zeta1, double x);

/// Integral of r over [0, x] in closed piecewise form.
double r_integral(double x);
double r_integral(const StepComb& zeta1, double x);

/// Closed-form model of (integral of r over [0, log(N+c)]) - r(log(N+c)):
///   log(N+c)/2 + log(2 pi)/2 - 1 - c + (1 - 6c + 6c^2) / (12 (N+c)).
/// Throws std::invalid_argument for N < 2 or c outside [0, 1).
double r_integral_model(std::uint64_t n, double c);

}  // namespace zl
