#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "harmonia/numerics.hpp"
#include "harmonia/profile.hpp"

namespace harmonia {

using ComplexFn = std::function<cplx(cplx)>;

// f_H(lambda) = int_0^inf f(a_s) phi_lambda(a_s) Delta(s) ds.
cplx principal_transform(const RadialProfile& f, int n, cplx lambda, const QuadratureSpec& spec);

// f_B(k) = int_0^inf f(a_s) psi_k(a_s) Delta(s) ds,  k in Gamma_n.
cplx discrete_transform(const RadialProfile& f, int n, int k, const QuadratureSpec& spec);

// The defining form f_H(lambda) b_lambda(a_t) - (f * b_lambda)(a_t) of T_lambda f; the
// tail-integral form in bkernel is the production path, this one is the cross-check.
cplx t_transform_by_definition(const RadialProfile& f, int n, cplx lambda, double t, const QuadratureSpec& spec);

struct HatCheck {
  cplx transform;    // transform of T_lambda f computed by quadrature
  cplx closed_form;  // (f_H(lambda) - f_H(i xi)) / (lambda^2 + xi^2)  or  (f_H(lambda) - f_B(k)) / (lambda^2 - k^2)
  double residual = 0.0;
};
HatCheck t_transform_hat_check(const RadialProfile& f, int n, cplx lambda, double xi, const QuadratureSpec& spec);
HatCheck t_transform_hat_check_discrete(const RadialProfile& f, int n, cplx lambda, int k, const QuadratureSpec& spec);

// Window estimator of delta_inf^{+-}(F) = -limsup e^{-pi t/2} log|F(+-it)|:
// the negated maximum of e^{-pi t/2} log|F(+-it)| over t in [T - window, T].
double delta_infinity(const ComplexFn& F, int sign, double height, double window, int samples = 257);
// Same estimator from samples (t_j, F(+-i t_j)); T is the largest t_j.
double delta_infinity(const std::vector<double>& heights, const std::vector<cplx>& values, double window);

// Paired principal samples on a spectral grid and discrete values on Gamma_n.
struct TransformRecord {
  int n = 0;
  std::vector<std::pair<cplx, cplx>> principal;  // (lambda, f_H(lambda))
  std::vector<std::pair<int, cplx>> discrete;    // (k, f_B(k))
};

std::vector<cplx> imaginary_axis_grid(double xi_max = 40.0, double step = 0.25);
std::vector<cplx> strip_grid(double xi_max = 40.0, double step = 0.25);

TransformRecord make_transform_record(const RadialProfile& f, int n, const std::vector<cplx>& grid,
                                      const QuadratureSpec& spec);

}  // namespace harmonia
