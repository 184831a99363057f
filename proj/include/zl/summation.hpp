#pragma once

#include <cmath>

namespace zl {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
/// accurate when an addend is larger in magnitude than the running sum.
///
/// Also tracks the sum of magnitudes, which callers use to bound the
/// rounding error of the result.
template <typename T>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(T initial) : sum_(initial), magnitude_(initial < T{0} ? -initial : initial) {}

  void add(T value) {
    const T t = sum_ + value;
    const T abs_sum = sum_ < T{0} ? -sum_ : sum_;
    const T abs_value = value < T{0} ? -value : value;
    if (abs_sum >= abs_value) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    magnitude_ += abs_value;
  }

  CompensatedSum& operator+=(T value) {
    add(value);
    return *this;
  }

  /// Merges another accumulator (used to chain per-chunk partial sums).
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.compensation_);
    magnitude_ += other.magnitude_ - (other.sum_ < T{0} ? -other.sum_ : other.sum_) -
                  (other.compensation_ < T{0} ? -other.compensation_ : other.compensation_);
  }

  [[nodiscard]] T value() const { return sum_ + compensation_; }
  [[nodiscard]] T magnitude() const { return magnitude_; }

 private:
  T sum_{0};
  T compensation_{0};
  T magnitude_{0};
};

}  // namespace zl
