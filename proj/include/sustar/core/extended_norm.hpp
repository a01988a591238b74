#pragma once

#include <cmath>
#include <limits>
#include <ostream>

namespace sustar {

/// A value in [0, inf]. Infinity is a legitimate result of the uniform seminorm,
/// not an error.
class ExtendedNorm {
 public:
  constexpr ExtendedNorm() = default;
  constexpr explicit ExtendedNorm(double value) : value_(value) {}

  static constexpr ExtendedNorm infinity() {
    ExtendedNorm n;
    n.infinite_ = true;
    n.value_ = std::numeric_limits<double>::infinity();
    return n;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr double value() const { return value_; }

  friend constexpr bool operator==(const ExtendedNorm&, const ExtendedNorm&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExtendedNorm& n) {
    if (n.infinite_) return os << "inf";
    return os << n.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace sustar
