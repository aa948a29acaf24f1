#pragma once

#include <complex>
#include <functional>

#include "harmonia/error.hpp"

namespace harmonia {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Distance below which a parameter is treated as sitting on a Gamma pole.
inline constexpr double kPoleTolerance = 1e-12;

// True when z lies within kPoleTolerance of {0, -1, -2, ...}.
bool is_nonpositive_integer(cplx z, double tol = kPoleTolerance) noexcept;
// Nearest integer to Re z when z is within tol of an integer, otherwise false.
bool near_integer(cplx z, long& m, double tol = kPoleTolerance) noexcept;

// Finite-value guard: throws InvalidArgument if either component is NaN/inf.
void require_finite(cplx z, const char* what);

// ---------------------------------------------------------------------------
// Gamma family (complex).  lgamma is a branch of log Gamma suitable for
// exponentiation; rgamma(z) = 1/Gamma(z) is entire and returns 0 at poles.
cplx gamma(cplx z);
cplx lgamma(cplx z);
cplx rgamma(cplx z);
cplx digamma(cplx z);

// ---------------------------------------------------------------------------
// Gauss hypergeometric 2F1(a, b; c; z) for real z < 1.
//
// The overload with `one_minus_z` accepts an independently computed 1 - z so
// callers whose argument is close to 1 (e.g. z = 1/cosh^2 t with
// 1 - z = tanh^2 t) do not lose digits to cancellation.
cplx hyp2f1(cplx a, cplx b, cplx c, double z);
cplx hyp2f1(cplx a, cplx b, cplx c, double z, double one_minus_z);

// The plain Gauss power series, |z| < 1, no transformations.
cplx hyp2f1_series(cplx a, cplx b, cplx c, double z);

struct QuadratureSpec;
// Independent evaluation path: contiguous relations raise c until the Euler
// integral  Gamma(c)/(Gamma(b)Gamma(c-b)) * int_0^1 s^{b-1}(1-s)^{c-b-1}(1-sz)^{-a} ds
// is valid with bounded endpoint weights, then adaptive quadrature.
cplx hyp2f1_integral(cplx a, cplx b, cplx c, double z, const QuadratureSpec& spec);

// ---------------------------------------------------------------------------
// Quadrature.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
  double tail_cutoff = 200.0;  // largest truncation point for semi-infinite integrals

  // Throws InvalidArgument unless tolerances and cutoff are positive.
  void validate() const;
};

struct QuadResult {
  cplx value;
  double error = 0.0;  // estimated absolute error
  int evaluations = 0;
  int subdivisions = 0;
};

using ScalarFn = std::function<cplx(double)>;

// Globally adaptive Gauss-Kronrod (10/21) on [lo, hi].  Interval estimates are
// summed in position order, so the result does not depend on refinement order.
QuadResult integrate_segment(const ScalarFn& f, double lo, double hi, const QuadratureSpec& spec);

// Integral over [lo, infinity) for integrands decaying at least like
// exp(-decay_rate * t).  The truncation point is grown from the hint until a
// sampled envelope bound on the tail falls below the absolute tolerance.
QuadResult integrate_halfline(const ScalarFn& f, double decay_rate, const QuadratureSpec& spec,
                              double lo = 0.0);

// Periodic trapezoid rule on [0, 2pi), returning the mean value (1/2pi) * integral.
// The node count doubles until successive estimates agree to tolerance.
QuadResult mean_over_circle(const ScalarFn& f, const QuadratureSpec& spec);

}  // namespace harmonia
