#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "harmonia/numerics.hpp"

namespace harmonia {

enum class Smoothness {
  Smooth,        // C-infinity on [0, inf)
  Piecewise,     // bounded with jump discontinuities (e.g. indicators)
  LogSingular,   // at most log(1/t) growth at the origin, smooth for t > 0
};

// The A+ restriction t -> f(a_t) of a type-(n,n) function; even extension implied.
struct RadialProfile {
  ScalarFn value;
  double support = std::numeric_limits<double>::infinity();  // f(t) = 0 for t >= support
  double decay_rate = 0.0;  // for infinite support: |f(t)| <~ exp(-decay_rate t)
  Smoothness smoothness = Smoothness::Smooth;
  std::vector<double> breakpoints;  // interior points where f is not smooth
  ScalarFn derivative;              // optional
  ScalarFn second_derivative;       // optional
  std::string label;

  cplx operator()(double t) const;
  bool compact() const noexcept { return support < std::numeric_limits<double>::infinity(); }
  double sup_estimate(int samples = 2001) const;
};

// Smooth compactly supported bump on [center - half_width, center + half_width]:
//   f(u) = I0(beta sqrt(1 - u^2)) / I0(beta) * exp(taper - taper / (1 - u^2)),  u = (t - center)/half_width.
// times exp(-tilt (t - center)).  Value 1 at the centre.  beta = 0, taper = 1, tilt = 0 is the
// classical exp(1 - 1/(1 - u^2)).
struct BumpShape {
  double center = 1.0;
  double half_width = 0.5;
  double taper = 0.2;
  double beta = 12.0;
  double tilt = 0.0;
  double amplitude = 1.0;
};
RadialProfile bump_profile(const BumpShape& shape = {});

// Bump on [0.5, 1.5] used for contour reconstruction of type-(n,n) profiles: the tilt
// e^{-(|n|+1) t} offsets the growth of phi_z Delta along Re z = |n| + 2, keeping the
// transform concentrated on the truncated line.
BumpShape contour_bump_shape(int n);

// The textbook C-infinity bump exp(-1/(1 - u^2)) on the same interval.
RadialProfile classic_bump_profile(double center = 1.0, double half_width = 0.5);

RadialProfile zero_profile();
// 1 on [0, r), 0 afterwards.
RadialProfile step_profile(double r);
// Constant bounded profile.
RadialProfile constant_profile(cplx v);

}  // namespace harmonia
