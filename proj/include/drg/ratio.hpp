#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace drg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with a positive denominator.
class ExactRatio {
public:
  ExactRatio() = default;
  ExactRatio(std::int64_t n) : value_(n) {} // NOLINT(implicit)
  ExactRatio(const BigInt& num, const BigInt& den);
  static ExactRatio from_string(const std::string& text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  /// "num/den", also for integers ("3/1").
  std::string to_string() const;
  double to_double() const;

  bool is_zero() const { return value_ == 0; }

  ExactRatio operator+(const ExactRatio& o) const { return ExactRatio(value_ + o.value_); }
  ExactRatio operator-(const ExactRatio& o) const { return ExactRatio(value_ - o.value_); }
  ExactRatio operator*(const ExactRatio& o) const { return ExactRatio(value_ * o.value_); }
  ExactRatio operator/(const ExactRatio& o) const;
  ExactRatio operator-() const { return ExactRatio(-value_); }
  ExactRatio& operator+=(const ExactRatio& o) { value_ += o.value_; return *this; }
  ExactRatio& operator*=(const ExactRatio& o) { value_ *= o.value_; return *this; }

  bool operator==(const ExactRatio& o) const { return value_ == o.value_; }
  std::strong_ordering operator<=>(const ExactRatio& o) const {
    if (value_ < o.value_) return std::strong_ordering::less;
    if (value_ > o.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  ExactRatio abs() const { return value_ < 0 ? -*this : *this; }

private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit ExactRatio(Rep v) : value_(std::move(v)) {}
  Rep value_{0};
};

inline ExactRatio ratio(std::uint64_t num, std::uint64_t den) {
  return ExactRatio(BigInt(num), BigInt(den));
}

} // namespace drg
