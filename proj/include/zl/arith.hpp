#pragma once

// Exact counting functions on the ordinary abscissa: pi, J, psi.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "zl/sieve.hpp"
#include "zl/summation.hpp"

namespace zl {

/// J(x) = sum_k pi(floor(x^(1/k))) / k, kept as integer counts.
struct JValue {
  double x = 0.0;
  /// counts_per_k[k-1] = pi(floor(x^(1/k))), for k up to log2(x).
  std::vector<std::uint64_t> counts_per_k;
  double value = 0.0;
};

/// Combines per-exponent prime counts into sum count_k / k.
double combine_j_counts(const std::vector<std::uint64_t>& counts_per_k);

/// Prefix tables of pi and psi for every integer up to a limit.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit, const sieve::SieveOptions& options = {});

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] std::uint64_t pi(std::uint64_t n) const;
  [[nodiscard]] double psi(std::uint64_t n) const;
  [[nodiscard]] JValue j(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> pi_;
  std::vector<double> psi_;
};

/// Number of primes <= floor(x). Throws std::out_of_range past the sieve ceiling.
std::uint64_t pi_count(double x, const sieve::SieveOptions& options = {});
/// J at x through exact integer roots of floor(x).
JValue j_value(double x, const sieve::SieveOptions& options = {});
JValue j_value(const PrimeTable& table, double x);
/// pi(x) recovered as sum_n mu(n)/n J(x^(1/n)) over n with x^(1/n) >= 2.
double pi_from_j(double x, const sieve::SieveOptions& options = {});
double pi_from_j(const PrimeTable& table, double x);
/// psi(x) = sum_{n <= x} Lambda(n), compensated.
double psi_value(double x, const sieve::SieveOptions& options = {});

/// Counting functions at one integer.
struct CountSnapshot {
  std::uint64_t n = 0;
  std::uint64_t pi = 0;
  double j = 0.0;
  double psi = 0.0;
  bool prime = false;
  /// n = p^k for some k >= 1.
  bool prime_power = false;
  /// Lambda(n).
  double lambda = 0.0;
  /// Values at n - 1; filled only when prime_power is set.
  std::uint64_t pi_before = 0;
  double j_before = 0.0;
  double psi_before = 0.0;
};

struct RangeCounterOptions {
  std::uint64_t chunk_size = std::uint64_t{1} << 20;
  /// Worker threads for the prefix pass (0 = hardware concurrency).
  unsigned threads = 1;
  /// Accumulate theta = sum log p (needed for psi).
  bool track_psi = true;
  sieve::SieveOptions sieve{};
};

/// Streams pi, J and psi over [0, hi] in fixed-size chunks. The prefix pass
/// runs in parallel; chunk boundaries depend only on chunk_size, so results
/// never depend on the thread count.
class RangeCounter {
 public:
  RangeCounter(std::uint64_t hi, const RangeCounterOptions& options = {});

  [[nodiscard]] std::uint64_t hi() const { return hi_; }
  [[nodiscard]] std::size_t chunk_count() const { return chunk_primes_.size(); }
  [[nodiscard]] std::uint64_t chunk_lo(std::size_t c) const { return c * chunk_size_; }
  [[nodiscard]] std::uint64_t chunk_hi(std::size_t c) const;
  [[nodiscard]] std::size_t chunk_of(std::uint64_t n) const { return static_cast<std::size_t>(n / chunk_size_); }

  /// Calls fn for every integer of [from, to] in ascending order.
  void visit(std::uint64_t from, std::uint64_t to, const std::function<void(const CountSnapshot&)>& fn) const;

  /// Calls fn once per entry of ns (ascending, repeats allowed), sieving each
  /// touched chunk once.
  void sample(std::span<const std::uint64_t> ns, const std::function<void(const CountSnapshot&)>& fn) const;

  /// Snapshot at a single integer (sieves its chunk).
  [[nodiscard]] CountSnapshot at(std::uint64_t n) const;

 private:
  std::uint64_t hi_;
  std::uint64_t chunk_size_;
  bool track_psi_;
  std::vector<std::uint32_t> base_;
  std::vector<sieve::PrimePower> higher_;
  // After the first i higher powers: sum_k count_k / k, and sum of log p.
  std::vector<double> higher_j_prefix_;
  std::vector<CompensatedSum<double>> higher_psi_prefix_;
  std::vector<std::uint64_t> chunk_primes_;        // primes inside chunk c
  std::vector<std::uint64_t> prefix_primes_;       // primes below chunk c
  std::vector<CompensatedSum<double>> prefix_theta_;  // theta below chunk c
  std::vector<CompensatedSum<double>> chunk_theta_;

  [[nodiscard]] std::size_t higher_index(std::uint64_t n) const;
  [[nodiscard]] CountSnapshot snapshot(std::uint64_t n, bool prime, std::uint64_t pi, const CompensatedSum<double>& theta,
                                       std::uint64_t pi_before, const CompensatedSum<double>& theta_before) const;
};

}  // namespace zl
