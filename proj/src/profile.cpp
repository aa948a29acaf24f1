#include "harmonia/profile.hpp"

#include <algorithm>
#include <cmath>

namespace harmonia {

cplx RadialProfile::operator()(double t) const {
  t = std::abs(t);
  if (t >= support) return 0.0;
  return value(t);
}

double RadialProfile::sup_estimate(int samples) const {
  const double hi = compact() ? support : 40.0;
  double m = 0.0;
  for (int j = 0; j < samples; ++j) m = std::max(m, std::abs((*this)(hi * j / (samples - 1))));
  return m;
}

RadialProfile bump_profile(const BumpShape& s) {
  if (!(s.half_width > 0.0) || s.center - s.half_width < 0.0 || s.taper < 0.0 || s.beta < 0.0 ||
      (s.taper == 0.0 && s.beta == 0.0))
    throw Error(ErrorKind::InvalidArgument, "bump needs half_width > 0, support in [0, inf) and a positive taper");
  const double norm = std::cyl_bessel_i(0.0, s.beta);
  RadialProfile p;
  p.value = [s, norm](double t) -> cplx {
    const double u = (t - s.center) / s.half_width;
    const double v = 1.0 - u * u;
    if (v <= 0.0) return 0.0;
    const double window = std::cyl_bessel_i(0.0, s.beta * std::sqrt(v)) / norm;
    return s.amplitude * window * std::exp(s.taper - s.taper / v - s.tilt * (t - s.center));
  };
  p.support = s.center + s.half_width;
  p.smoothness = Smoothness::Smooth;
  p.breakpoints = {std::max(0.0, s.center - s.half_width)};
  char buf[128];
  std::snprintf(buf, sizeof buf, "bump(center=%g, half_width=%g, taper=%g, beta=%g, tilt=%g)", s.center,
                s.half_width, s.taper, s.beta, s.tilt);
  p.label = buf;
  return p;
}

BumpShape contour_bump_shape(int n) {
  BumpShape s;
  s.beta = 14.0;
  s.taper = 0.2;
  s.tilt = std::abs(n) + 1.0;
  return s;
}

RadialProfile classic_bump_profile(double center, double half_width) {
  if (!(half_width > 0.0) || center - half_width < 0.0)
    throw Error(ErrorKind::InvalidArgument, "bump needs half_width > 0 and support in [0, inf)");
  RadialProfile p;
  p.value = [center, half_width](double t) -> cplx {
    const double u = (t - center) / half_width;
    const double v = 1.0 - u * u;
    if (v <= 0.0) return 0.0;
    return std::exp(-1.0 / v);
  };
  p.support = center + half_width;
  p.breakpoints = {center - half_width};
  p.label = "classic_bump";
  return p;
}

RadialProfile zero_profile() {
  RadialProfile p;
  p.value = [](double) -> cplx { return 0.0; };
  p.support = 0.0;
  p.derivative = p.value;
  p.second_derivative = p.value;
  p.label = "zero";
  return p;
}

RadialProfile step_profile(double r) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "step radius must be positive");
  RadialProfile p;
  p.value = [](double) -> cplx { return 1.0; };
  p.support = r;
  p.smoothness = Smoothness::Piecewise;
  p.label = "step";
  return p;
}

RadialProfile constant_profile(cplx v) {
  RadialProfile p;
  p.value = [v](double) -> cplx { return v; };
  p.derivative = [](double) -> cplx { return 0.0; };
  p.second_derivative = p.derivative;
  p.label = "constant";
  return p;
}

}  // namespace harmonia
