#pragma once

#include <cmath>
#include <numbers>

namespace cannpi {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wraps to (-pi, pi].
inline double wrap_to_pi(double x) {
  double r = std::fmod(x + std::numbers::pi, kTwoPi);
  if (r <= 0.0) r += kTwoPi;
  return r - std::numbers::pi;
}

// Wraps to [0, 2*pi).
inline double wrap_to_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

// Circular distance between two ring values, in [0, pi].
inline double circ_dist(double a, double b) { return std::abs(wrap_to_pi(a - b)); }

}  // namespace cannpi
