#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "mayan/errors.hpp"

namespace mayan {

/// Exact ratio of two integers, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or "p" when the value is integral.
  std::string str() const {
    return is_integer() ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Fixed-point rendering, truncated toward zero: 130/9 -> "14.44444".
  std::string decimal(int digits = 5) const;

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::string Rational::decimal(int digits) const {
  if (is_integer()) return std::to_string(num_);
  const bool negative = num_ < 0;
  std::uint64_t n = negative ? static_cast<std::uint64_t>(-num_) : static_cast<std::uint64_t>(num_);
  const auto d = static_cast<std::uint64_t>(den_);
  std::string out = (negative ? "-" : "") + std::to_string(n / d) + ".";
  n %= d;
  for (int i = 0; i < digits; ++i) {
    n *= 10;
    out += static_cast<char>('0' + n / d);
    n %= d;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mayan
