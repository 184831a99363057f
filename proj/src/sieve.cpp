#include "zl/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zl/parallel.hpp"

namespace zl::sieve {

namespace {

void check_range(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options) {
  if (lo > hi) throw std::invalid_argument("sieve range inverted: lo > hi");
  if (hi > options.ceiling) {
    throw std::out_of_range("sieve range exceeds ceiling " + std::to_string(options.ceiling));
  }
  if (options.segment_size == 0) throw std::invalid_argument("segment size must be positive");
}

std::uint64_t isqrt(std::uint64_t n) { return integer_kth_root(n, 2); }

}  // namespace

bool checked_power_le(std::uint64_t r, unsigned k, std::uint64_t limit, std::uint64_t& out) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r != 0 && acc > limit / r) return false;
    acc *= r;
  }
  out = acc;
  return acc <= limit;
}

std::uint64_t integer_kth_root(std::uint64_t n, unsigned k) {
  if (k == 0) throw std::invalid_argument("integer_kth_root: k must be >= 1");
  if (k == 1 || n < 2) return n;
  if (k >= 64) return 1;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  std::uint64_t power = 0;
  while (r > 0 && !checked_power_le(r, k, n, power)) --r;
  while (checked_power_le(r + 1, k, n, power)) ++r;
  return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<std::uint8_t> composite(n + 1, 0);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
  }
  return primes;
}

std::vector<std::uint32_t> base_primes_for(std::uint64_t hi) {
  return primes_up_to(static_cast<std::uint32_t>(isqrt(hi)));
}

// ---------------------------------------------------------------------------
// Dense segment with mu and Lambda

std::size_t SieveSegment::index(std::uint64_t n) const {
  if (n < lo_ || n > hi_) throw std::out_of_range("integer outside sieve segment");
  return static_cast<std::size_t>(n - lo_);
}

std::vector<std::uint64_t> SieveSegment::primes() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < is_prime_.size(); ++i) {
    if (is_prime_[i]) out.push_back(lo_ + i);
  }
  return out;
}

SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options) {
  check_range(lo, hi, options);
  SieveSegment seg;
  seg.lo_ = lo;
  seg.hi_ = hi;
  const std::size_t total = static_cast<std::size_t>(hi - lo + 1);
  seg.is_prime_.assign(total, 0);
  seg.mu_.assign(total, 1);
  seg.lambda_.assign(total, 0.0);

  const auto base = base_primes_for(hi);
  std::vector<std::uint64_t> rem;

  for (std::uint64_t a = lo;; a += options.segment_size) {
    const std::uint64_t b = (hi - a < options.segment_size - 1) ? hi : a + options.segment_size - 1;
    const std::size_t len = static_cast<std::size_t>(b - a + 1);
    const std::size_t off = static_cast<std::size_t>(a - lo);
    rem.resize(len);
    for (std::size_t i = 0; i < len; ++i) rem[i] = a + i;

    for (std::uint32_t p32 : base) {
      const std::uint64_t p = p32;
      const std::uint64_t first = (a + p - 1) / p * p;
      for (std::uint64_t m = (first == 0 ? p : first); m <= b; m += p) {
        const std::size_t i = static_cast<std::size_t>(m - a);
        seg.mu_[off + i] = static_cast<std::int8_t>(-seg.mu_[off + i]);
        do {
          rem[i] /= p;
        } while (rem[i] % p == 0);
      }
      const std::uint64_t p2 = p * p;
      const std::uint64_t first2 = (a + p2 - 1) / p2 * p2;
      for (std::uint64_t m = (first2 == 0 ? p2 : first2); m <= b; m += p2) {
        seg.mu_[off + static_cast<std::size_t>(m - a)] = 0;
      }
      const double log_p = std::log(static_cast<double>(p));
      std::uint64_t power = p;
      for (;;) {
        if (power >= a && power <= b) seg.lambda_[off + static_cast<std::size_t>(power - a)] = log_p;
        if (power > b / p) break;
        power *= p;
      }
      if (p >= a && p <= b) seg.is_prime_[off + static_cast<std::size_t>(p - a)] = 1;
    }

    for (std::size_t i = 0; i < len; ++i) {
      const std::uint64_t n = a + i;
      if (n == 0) {
        seg.mu_[off + i] = 0;
        continue;
      }
      if (rem[i] > 1) {
        // One prime factor above sqrt(hi) remains.
        seg.mu_[off + i] = static_cast<std::int8_t>(-seg.mu_[off + i]);
        if (rem[i] == n) {
          seg.is_prime_[off + i] = 1;
          seg.lambda_[off + i] = std::log(static_cast<double>(n));
        }
      }
    }
    if (b == hi) break;
  }
  return seg;
}

// ---------------------------------------------------------------------------
// Single-integer functions

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be >= 1");
  int result = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

double von_mangoldt(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("von_mangoldt: n must be >= 1");
  if (n == 1) return 0.0;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));
}

std::vector<PrimePower> prime_powers_up_to(double x, const SieveOptions& options) {
  std::vector<PrimePower> out;
  if (!(x >= 2.0)) return out;
  const double capped = std::min(x, static_cast<double>(options.ceiling));
  const auto n = static_cast<std::uint64_t>(std::floor(capped));
  if (n > options.ceiling) throw std::out_of_range("prime_powers_up_to: beyond ceiling");
  for_each_prime(2, n, [&](std::uint64_t p) {
    std::uint64_t value = p;
    unsigned k = 1;
    for (;;) {
      out.push_back({p, k, value});
      std::uint64_t next = 0;
      if (!checked_power_le(p, k + 1, n, next)) break;
      value = next;
      ++k;
    }
  }, options);
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.value < b.value; });
  return out;
}

std::vector<PrimePower> higher_prime_powers_up_to(std::uint64_t n) {
  std::vector<PrimePower> out;
  const std::uint64_t root = isqrt(n);
  for (std::uint32_t p32 : primes_up_to(static_cast<std::uint32_t>(root))) {
    const std::uint64_t p = p32;
    std::uint64_t value = p * p;
    for (unsigned k = 2;; ++k) {
      out.push_back({p, k, value});
      if (value > n / p) break;
      value *= p;
      if (value > n) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.value < b.value; });
  return out;
}

// ---------------------------------------------------------------------------
// Odd-only blocks

PrimeBlock::PrimeBlock(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base_primes)
    : lo_(lo), hi_(hi) {
  if (lo > hi) throw std::invalid_argument("prime block range inverted");
  first_odd_ = std::max<std::uint64_t>(3, lo | 1);
  if (first_odd_ > hi) return;
  const std::size_t count = static_cast<std::size_t>((hi - first_odd_) / 2 + 1);
  odd_flags_.assign(count, 1);
  for (std::uint32_t p32 : base_primes) {
    const std::uint64_t p = p32;
    if (p == 2) continue;
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (first_odd_ + p - 1) / p * p);
    if ((start & 1) == 0) start += p;
    for (std::uint64_t m = start; m <= hi; m += 2 * p) {
      odd_flags_[static_cast<std::size_t>((m - first_odd_) / 2)] = 0;
    }
  }
}

bool PrimeBlock::is_prime(std::uint64_t n) const {
  if (n < lo_ || n > hi_) throw std::out_of_range("integer outside prime block");
  if (n == 2) return true;
  if (n < 3 || (n & 1) == 0) return false;
  return odd_flags_[static_cast<std::size_t>((n - first_odd_) / 2)] != 0;
}

std::uint64_t PrimeBlock::count() const {
  std::uint64_t c = (lo_ <= 2 && 2 <= hi_) ? 1 : 0;
  for (std::uint8_t f : odd_flags_) c += f;
  return c;
}

std::uint64_t count_primes(std::uint64_t hi, const SieveOptions& options, unsigned threads) {
  check_range(0, hi, options);
  const auto base = base_primes_for(hi);
  const std::uint64_t seg = options.segment_size;
  const std::size_t segments = static_cast<std::size_t>(hi / seg + 1);
  std::vector<std::uint64_t> counts(segments, 0);
  parallel_for(segments, threads, [&](std::size_t s) {
    const std::uint64_t a = s * seg;
    const std::uint64_t b = std::min(hi, a + seg - 1);
    counts[s] = PrimeBlock(a, b, base).count();
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& fn,
                    const SieveOptions& options) {
  check_range(lo, hi, options);
  const auto base = base_primes_for(hi);
  for (std::uint64_t a = lo;; a += options.segment_size) {
    const std::uint64_t b = (hi - a < options.segment_size - 1) ? hi : a + options.segment_size - 1;
    PrimeBlock(a, b, base).for_each_prime(fn);
    if (b == hi) break;
  }
}

}  // namespace zl::sieve
