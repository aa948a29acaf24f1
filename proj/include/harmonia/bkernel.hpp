#pragma once

#include "harmonia/numerics.hpp"
#include "harmonia/profile.hpp"

namespace harmonia {

// b_lambda(a_t) = Phi_lambda(a_t) / (2 lambda c(-lambda)),  Re lambda > 0, lambda not in B, t > 0.
cplx b_kernel(int n, cplx lambda, double t);
cplx b_kernel_derivative(int n, cplx lambda, double t);
RadialProfile b_profile(int n, cplx lambda);

// Throws NonpositiveRealPart / SpectralParamInB when b_lambda is undefined.
void check_b_domain(int n, cplx lambda);

struct EstimateConstants {
  double c_small = 0.0;  // sup_{0 < t <= 1/2} |b(t)| / log(1/t)
  double c_large = 0.0;  // sup_{1/2 <= t <= 10} |b(t)| e^{(Re lambda + 1) t}
};
// Empirical constants of the two-sided estimate; lambda must lie outside B1.
EstimateConstants b_estimate_check(int n, cplx lambda);

// ||b_lambda||_1 = int_0^inf |b(a_t)| Delta(t) dt,  Re lambda > 1, lambda outside B1.
double l1_norm_b(int n, cplx lambda, const QuadratureSpec& spec);

// int_0^inf cosh^{|n|} t  b_lambda(a_t) Delta(t) dt,  Re lambda > |n| + 1.
cplx weighted_moment_b(int n, cplx lambda, const QuadratureSpec& spec);

// (f * b_lambda)(a_t) = b(t) int_0^t f phi Delta + phi(t) int_t^inf f b Delta.
cplx convolve_with_b(const RadialProfile& f, int n, cplx lambda, double t, const QuadratureSpec& spec);

// | int_K b(a_s k a_t) e_n(k^{-1}) dk - b(a_max) phi(a_min) |, K-integral by periodic quadrature
// over the Cartan coordinates of a_s k_theta a_t.
double product_formula_residual(int n, cplx lambda, double s, double t, const QuadratureSpec& spec);

// T_lambda f(a_t) = b(t) int_t^inf f phi Delta - phi(t) int_t^inf f b Delta,  0 < Re lambda < 1.
cplx t_transform(const RadialProfile& f, int n, cplx lambda, double t, const QuadratureSpec& spec);
RadialProfile t_transform_profile(const RadialProfile& f, int n, cplx lambda, const QuadratureSpec& spec);
double l1_norm_t_transform(const RadialProfile& f, int n, cplx lambda, const QuadratureSpec& spec);

// L1 norm of a profile against Delta.
double l1_norm(const RadialProfile& f, const QuadratureSpec& spec);

// d(lambda, boundary of S1) = 1 - |Re lambda| inside the strip.
double distance_to_strip_boundary(cplx lambda);

// Integral of g over [lo, hi] split at the given breakpoints (hi may be +inf, in
// which case decay_rate bounds the tail).  Integrands with a log singularity at 0
// are handled with the substitution t = e^{-u} on (0, 1/2].
enum class OriginBehaviour { Regular, LogSingular };
QuadResult integrate_radial(const ScalarFn& g, double lo, double hi, const std::vector<double>& breakpoints,
                            double decay_rate, OriginBehaviour origin, const QuadratureSpec& spec);

}  // namespace harmonia
