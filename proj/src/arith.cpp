#include "zl/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zl/parallel.hpp"

namespace zl {

namespace {

std::uint64_t floor_checked(double x, const sieve::SieveOptions& options) {
  if (!(x >= 0.0)) throw std::invalid_argument("counting functions need x >= 0");
  if (x >= static_cast<double>(options.ceiling) + 1.0) {
    throw std::out_of_range("x beyond the sieve ceiling");
  }
  return static_cast<std::uint64_t>(std::floor(x));
}

}  // namespace

double combine_j_counts(const std::vector<std::uint64_t>& counts_per_k) {
  if (counts_per_k.empty()) return 0.0;
  double rest = 0.0;
  for (std::size_t k = 2; k <= counts_per_k.size(); ++k) {
    rest += static_cast<double>(counts_per_k[k - 1]) / static_cast<double>(k);
  }
  return static_cast<double>(counts_per_k[0]) + rest;
}

// ---------------------------------------------------------------------------

PrimeTable::PrimeTable(std::uint64_t limit, const sieve::SieveOptions& options) : limit_(limit) {
  if (limit > options.ceiling) throw std::out_of_range("PrimeTable: limit beyond ceiling");
  pi_.assign(limit + 1, 0);
  psi_.assign(limit + 1, 0.0);
  const auto base = sieve::base_primes_for(limit);
  const auto higher = sieve::higher_prime_powers_up_to(limit);
  std::size_t next_higher = 0;
  std::uint32_t pi = 0;
  CompensatedSum<double> psi;
  for (std::uint64_t a = 0; a <= limit; a += options.segment_size) {
    const std::uint64_t b = std::min(limit, a + options.segment_size - 1);
    const sieve::PrimeBlock block(a, b, base);
    for (std::uint64_t n = a; n <= b; ++n) {
      if (block.is_prime(n)) {
        ++pi;
        psi.add(std::log(static_cast<double>(n)));
      }
      while (next_higher < higher.size() && higher[next_higher].value == n) {
        psi.add(std::log(static_cast<double>(higher[next_higher].p)));
        ++next_higher;
      }
      pi_[n] = pi;
      psi_[n] = psi.value();
    }
  }
}

std::uint64_t PrimeTable::pi(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeTable::pi beyond table limit");
  return pi_[n];
}

double PrimeTable::psi(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeTable::psi beyond table limit");
  return psi_[n];
}

JValue PrimeTable::j(std::uint64_t n) const {
  JValue out;
  out.x = static_cast<double>(n);
  for (unsigned k = 1;; ++k) {
    const std::uint64_t root = sieve::integer_kth_root(n, k);
    if (root < 2) break;
    out.counts_per_k.push_back(pi(root));
  }
  out.value = combine_j_counts(out.counts_per_k);
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t pi_count(double x, const sieve::SieveOptions& options) {
  const std::uint64_t n = floor_checked(x, options);
  if (n < 2) return 0;
  return sieve::count_primes(n, options);
}

JValue j_value(double x, const sieve::SieveOptions& options) {
  const std::uint64_t n = floor_checked(x, options);
  JValue out;
  out.x = x;
  for (unsigned k = 1;; ++k) {
    const std::uint64_t root = sieve::integer_kth_root(n, k);
    if (root < 2) break;
    out.counts_per_k.push_back(sieve::count_primes(root, options));
  }
  out.value = combine_j_counts(out.counts_per_k);
  return out;
}

JValue j_value(const PrimeTable& table, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("j_value needs x >= 0");
  JValue out = table.j(static_cast<std::uint64_t>(std::floor(x)));
  out.x = x;
  return out;
}

namespace {

template <typename JAt>
double mobius_inversion(std::uint64_t n, JAt&& j_at) {
  CompensatedSum<double> sum;
  for (unsigned m = 1;; ++m) {
    const std::uint64_t root = sieve::integer_kth_root(n, m);
    if (root < 2) break;
    const int mu = sieve::mobius(m);
    if (mu == 0) continue;
    sum.add(static_cast<double>(mu) / static_cast<double>(m) * j_at(root));
  }
  return sum.value();
}

}  // namespace

double pi_from_j(double x, const sieve::SieveOptions& options) {
  const std::uint64_t n = floor_checked(x, options);
  return mobius_inversion(n, [&](std::uint64_t r) { return j_value(static_cast<double>(r), options).value; });
}

double pi_from_j(const PrimeTable& table, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("pi_from_j needs x >= 0");
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  return mobius_inversion(n, [&](std::uint64_t r) { return table.j(r).value; });
}

double psi_value(double x, const sieve::SieveOptions& options) {
  const std::uint64_t n = floor_checked(x, options);
  if (n < 2) return 0.0;
  CompensatedSum<double> sum;
  sieve::for_each_prime(2, n, [&](std::uint64_t p) { sum.add(std::log(static_cast<double>(p))); }, options);
  for (const auto& pp : sieve::higher_prime_powers_up_to(n)) sum.add(std::log(static_cast<double>(pp.p)));
  return sum.value();
}

// ---------------------------------------------------------------------------
// RangeCounter

RangeCounter::RangeCounter(std::uint64_t hi, const RangeCounterOptions& options)
    : hi_(hi), chunk_size_(options.chunk_size), track_psi_(options.track_psi) {
  if (chunk_size_ == 0) throw std::invalid_argument("RangeCounter: chunk size must be positive");
  if (hi > options.sieve.ceiling) throw std::out_of_range("RangeCounter: range beyond sieve ceiling");
  base_ = sieve::base_primes_for(hi);
  higher_ = sieve::higher_prime_powers_up_to(hi);

  std::vector<std::uint64_t> counts;
  CompensatedSum<double> logs;
  higher_j_prefix_.assign(1, 0.0);
  higher_psi_prefix_.assign(1, logs);
  for (const auto& pp : higher_) {
    if (counts.size() < pp.k) counts.resize(pp.k, 0);
    ++counts[pp.k - 1];
    double j = 0.0;
    for (std::size_t k = 2; k <= counts.size(); ++k) j += static_cast<double>(counts[k - 1]) / static_cast<double>(k);
    logs.add(std::log(static_cast<double>(pp.p)));
    higher_j_prefix_.push_back(j);
    higher_psi_prefix_.push_back(logs);
  }

  const std::size_t chunks = static_cast<std::size_t>(hi / chunk_size_ + 1);
  chunk_primes_.assign(chunks, 0);
  chunk_theta_.assign(chunks, {});
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    const sieve::PrimeBlock block(chunk_lo(c), chunk_hi(c), base_);
    if (track_psi_) {
      CompensatedSum<double> theta;
      std::uint64_t count = 0;
      block.for_each_prime([&](std::uint64_t p) {
        theta.add(std::log(static_cast<double>(p)));
        ++count;
      });
      chunk_theta_[c] = theta;
      chunk_primes_[c] = count;
    } else {
      chunk_primes_[c] = block.count();
    }
  });
  prefix_primes_.assign(chunks, 0);
  prefix_theta_.assign(chunks, {});
  for (std::size_t c = 1; c < chunks; ++c) {
    prefix_primes_[c] = prefix_primes_[c - 1] + chunk_primes_[c - 1];
    prefix_theta_[c] = prefix_theta_[c - 1];
    prefix_theta_[c].merge(chunk_theta_[c - 1]);
  }
}

std::uint64_t RangeCounter::chunk_hi(std::size_t c) const {
  const std::uint64_t lo = chunk_lo(c);
  return (hi_ - lo < chunk_size_ - 1) ? hi_ : lo + chunk_size_ - 1;
}

std::size_t RangeCounter::higher_index(std::uint64_t n) const {
  const auto it = std::upper_bound(higher_.begin(), higher_.end(), n,
                                   [](std::uint64_t v, const sieve::PrimePower& pp) { return v < pp.value; });
  return static_cast<std::size_t>(it - higher_.begin());
}

// pi and theta count the primes <= n; the *_before pair counts those <= n - 1.
CountSnapshot RangeCounter::snapshot(std::uint64_t n, bool prime, std::uint64_t pi, const CompensatedSum<double>& theta,
                                     std::uint64_t pi_before, const CompensatedSum<double>& theta_before) const {
  const std::size_t h = higher_index(n);
  const std::size_t h_before = n == 0 ? 0 : higher_index(n - 1);
  CountSnapshot snap;
  snap.n = n;
  snap.pi = pi;
  snap.prime = prime;
  snap.prime_power = prime || h != h_before;
  if (prime) {
    snap.lambda = std::log(static_cast<double>(n));
  } else if (h != h_before) {
    snap.lambda = std::log(static_cast<double>(higher_[h_before].p));
  }
  snap.j = static_cast<double>(pi) + higher_j_prefix_[h];
  if (track_psi_) {
    CompensatedSum<double> psi = theta;
    psi.merge(higher_psi_prefix_[h]);
    snap.psi = psi.value();
  }
  if (snap.prime_power) {
    snap.pi_before = pi_before;
    snap.j_before = static_cast<double>(pi_before) + higher_j_prefix_[h_before];
    if (track_psi_) {
      CompensatedSum<double> psi = theta_before;
      psi.merge(higher_psi_prefix_[h_before]);
      snap.psi_before = psi.value();
    }
  }
  return snap;
}

void RangeCounter::visit(std::uint64_t from, std::uint64_t to,
                         const std::function<void(const CountSnapshot&)>& fn) const {
  if (from > to) return;
  if (to > hi_) throw std::out_of_range("RangeCounter::visit beyond counter range");
  for (std::size_t c = chunk_of(from); c <= chunk_of(to); ++c) {
    const std::uint64_t lo = chunk_lo(c);
    const std::uint64_t end = std::min(to, chunk_hi(c));
    const sieve::PrimeBlock block(lo, end, base_);
    std::uint64_t pi = prefix_primes_[c];
    CompensatedSum<double> theta = prefix_theta_[c];
    for (std::uint64_t n = lo; n <= end; ++n) {
      const bool prime = block.is_prime(n);
      if (!prime) {
        if (n >= from) fn(snapshot(n, false, pi, theta, pi, theta));
        continue;
      }
      const std::uint64_t pi_before = pi;
      const CompensatedSum<double> theta_before = theta;
      ++pi;
      if (track_psi_) theta.add(std::log(static_cast<double>(n)));
      if (n >= from) fn(snapshot(n, true, pi, theta, pi_before, theta_before));
    }
  }
}

void RangeCounter::sample(std::span<const std::uint64_t> ns,
                          const std::function<void(const CountSnapshot&)>& fn) const {
  if (ns.empty()) return;
  if (!std::is_sorted(ns.begin(), ns.end())) throw std::invalid_argument("RangeCounter::sample needs ascending input");
  if (ns.back() > hi_) throw std::out_of_range("RangeCounter::sample beyond counter range");
  std::size_t i = 0;
  while (i < ns.size()) {
    const std::size_t c = chunk_of(ns[i]);
    std::size_t j = i;
    while (j < ns.size() && chunk_of(ns[j]) == c) ++j;
    const sieve::PrimeBlock block(chunk_lo(c), ns[j - 1], base_);
    std::uint64_t pi = prefix_primes_[c];
    CompensatedSum<double> theta = prefix_theta_[c];
    block.for_each_prime([&](std::uint64_t p) {
      while (i < j && ns[i] < p) {
        fn(snapshot(ns[i], false, pi, theta, pi, theta));
        ++i;
      }
      const std::uint64_t pi_before = pi;
      const CompensatedSum<double> theta_before = theta;
      ++pi;
      if (track_psi_) theta.add(std::log(static_cast<double>(p)));
      while (i < j && ns[i] == p) {
        fn(snapshot(p, true, pi, theta, pi_before, theta_before));
        ++i;
      }
    });
    for (; i < j; ++i) fn(snapshot(ns[i], false, pi, theta, pi, theta));
  }
}

CountSnapshot RangeCounter::at(std::uint64_t n) const {
  CountSnapshot out;
  const std::uint64_t one[] = {n};
  sample(one, [&](const CountSnapshot& s) { out = s; });
  return out;
}

}  // namespace zl
