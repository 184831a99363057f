#pragma once

// Primes, Moebius mu and von Mangoldt Lambda over integer ranges.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace zl::sieve {

inline constexpr std::uint64_t default_ceiling = std::uint64_t{1} << 40;
inline constexpr std::uint64_t default_segment_size = std::uint64_t{1} << 20;

struct SieveOptions {
  /// Integers processed per segment.
  std::uint64_t segment_size = default_segment_size;
  /// Largest admissible upper end of a range.
  std::uint64_t ceiling = default_ceiling;
};

/// Primality, mu and Lambda for every integer of [lo, hi]. Immutable once built.
class SieveSegment {
 public:
  [[nodiscard]] std::uint64_t lo() const { return lo_; }
  [[nodiscard]] std::uint64_t hi() const { return hi_; }
  [[nodiscard]] std::size_t size() const { return is_prime_.size(); }

  [[nodiscard]] bool is_prime(std::uint64_t n) const { return is_prime_[index(n)] != 0; }
  [[nodiscard]] int mu(std::uint64_t n) const { return mu_[index(n)]; }
  [[nodiscard]] double lambda(std::uint64_t n) const { return lambda_[index(n)]; }

  [[nodiscard]] std::vector<std::uint64_t> primes() const;

 private:
  friend SieveSegment sieve_segment(std::uint64_t, std::uint64_t, const SieveOptions&);
  [[nodiscard]] std::size_t index(std::uint64_t n) const;

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::vector<std::uint8_t> is_prime_;
  std::vector<std::int8_t> mu_;
  std::vector<double> lambda_;
};

/// Throws std::invalid_argument if lo > hi, std::out_of_range if hi exceeds the ceiling.
SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options = {});

/// mu(n) by trial division. Throws std::invalid_argument for n = 0.
int mobius(std::uint64_t n);

/// Lambda(n) = log p if n = p^k, else 0. Throws std::invalid_argument for n = 0.
double von_mangoldt(std::uint64_t n);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t value = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// All p^k <= floor(x) in ascending order of value. Membership is decided in
/// integer arithmetic.
std::vector<PrimePower> prime_powers_up_to(double x, const SieveOptions& options = {});

/// Prime powers p^k with k >= 2 and p^k <= n, ascending by value.
std::vector<PrimePower> higher_prime_powers_up_to(std::uint64_t n);

/// Largest r with r^k <= n. Throws std::invalid_argument for k = 0.
std::uint64_t integer_kth_root(std::uint64_t n, unsigned k);

/// Stores r^k in `out` and returns true when r^k <= limit; returns false
/// (leaving `out` unspecified) on overflow or when the power exceeds limit.
bool checked_power_le(std::uint64_t r, unsigned k, std::uint64_t limit, std::uint64_t& out);

/// Primes <= n by a plain sieve of Eratosthenes (for base primes and small tables).
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Odd-only sieve of one block [lo, hi]. Primes above sqrt(hi) are found from
/// the supplied base primes, which must cover sqrt(hi).
class PrimeBlock {
 public:
  PrimeBlock() = default;
  PrimeBlock(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base_primes);

  [[nodiscard]] std::uint64_t lo() const { return lo_; }
  [[nodiscard]] std::uint64_t hi() const { return hi_; }
  [[nodiscard]] bool is_prime(std::uint64_t n) const;
  [[nodiscard]] std::uint64_t count() const;

  template <typename Fn>
  void for_each_prime(Fn&& fn) const {
    if (lo_ <= 2 && 2 <= hi_) fn(std::uint64_t{2});
    for (std::size_t i = 0; i < odd_flags_.size(); ++i) {
      if (odd_flags_[i]) fn(first_odd_ + 2 * static_cast<std::uint64_t>(i));
    }
  }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::uint64_t first_odd_ = 1;
  std::vector<std::uint8_t> odd_flags_;
};

/// Base primes sufficient to sieve any block ending at or below hi.
std::vector<std::uint32_t> base_primes_for(std::uint64_t hi);

/// pi(hi) by segmented odd-only sieving. Segments are distributed over
/// `threads` workers (0 = hardware concurrency).
std::uint64_t count_primes(std::uint64_t hi, const SieveOptions& options = {}, unsigned threads = 1);

/// Calls fn(p) for each prime in [lo, hi] in ascending order.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& fn,
                    const SieveOptions& options = {});

}  // namespace zl::sieve
