#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fpgarepair {

/// Exact fraction over int64. The structurization criteria compare sums of
/// small fractions; rounding them first would make close calls depend on
/// print precision.
class Ratio {
public:
  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr friend Ratio operator+(Ratio a, Ratio b) {
    return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  constexpr friend bool operator==(Ratio a, Ratio b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  constexpr friend bool operator<(Ratio a, Ratio b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  constexpr friend bool operator>=(Ratio a, Ratio b) { return !(a < b); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace fpgarepair
