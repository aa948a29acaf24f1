#include "harmonia/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harmonia/bkernel.hpp"
#include "harmonia/eigenfn.hpp"

namespace harmonia {

namespace {

OriginBehaviour origin_of(const RadialProfile& f) {
  return f.smoothness == Smoothness::LogSingular ? OriginBehaviour::LogSingular : OriginBehaviour::Regular;
}

cplx transform_against(const RadialProfile& f, const ScalarFn& kernel, double kernel_growth,
                       const QuadratureSpec& spec) {
  const auto g = [&](double s) -> cplx { return f(s) * kernel(s) * delta_density(s); };
  if (f.compact()) {
    if (f.support <= 0.0) return 0.0;
    return integrate_radial(g, 0.0, f.support, f.breakpoints, 0.0, origin_of(f), spec).value;
  }
  // |kernel| grows at most like e^{kernel_growth t} and Delta like e^{2t}.
  const double rate = f.decay_rate - 2.0 - kernel_growth;
  if (!(rate > 0.0)) throw Error(ErrorKind::DivergentIntegral, "profile decay does not dominate kernel growth");
  return integrate_radial(g, 0.0, std::numeric_limits<double>::infinity(), f.breakpoints, rate, origin_of(f), spec)
      .value;
}

}  // namespace

cplx principal_transform(const RadialProfile& f, int n, cplx lambda, const QuadratureSpec& spec) {
  require_finite(lambda, "lambda");
  const auto kernel = [n, lambda](double s) { return phi(n, lambda, s); };
  return transform_against(f, kernel, std::abs(lambda.real()) - 1.0, spec);
}

cplx discrete_transform(const RadialProfile& f, int n, int k, const QuadratureSpec& spec) {
  if (!in_gamma(n, k)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "k=%d is not in Gamma_%d", k, n);
    throw Error(ErrorKind::IndexNotInGamma, buf);
  }
  const auto kernel = [n, k](double s) { return psi(n, k, s); };
  return transform_against(f, kernel, -static_cast<double>(std::abs(k)) - 1.0, spec);
}

cplx t_transform_by_definition(const RadialProfile& f, int n, cplx lambda, double t, const QuadratureSpec& spec) {
  if (!(lambda.real() > 0.0 && lambda.real() < 1.0))
    throw Error(ErrorKind::StripViolation, "T_lambda is defined for 0 < Re lambda < 1");
  return principal_transform(f, n, lambda, spec) * b_kernel(n, lambda, t) - convolve_with_b(f, n, lambda, t, spec);
}

HatCheck t_transform_hat_check(const RadialProfile& f, int n, cplx lambda, double xi, const QuadratureSpec& spec) {
  const RadialProfile tf = t_transform_profile(f, n, lambda, spec);
  const cplx z(0.0, xi);
  HatCheck h;
  h.transform = principal_transform(tf, n, z, spec);
  h.closed_form = (principal_transform(f, n, lambda, spec) - principal_transform(f, n, z, spec)) /
                  (lambda * lambda + xi * xi);
  h.residual = std::abs(h.transform - h.closed_form);
  return h;
}

HatCheck t_transform_hat_check_discrete(const RadialProfile& f, int n, cplx lambda, int k,
                                        const QuadratureSpec& spec) {
  const RadialProfile tf = t_transform_profile(f, n, lambda, spec);
  const double kk = static_cast<double>(k);
  HatCheck h;
  h.transform = discrete_transform(tf, n, k, spec);
  h.closed_form = (principal_transform(f, n, lambda, spec) - discrete_transform(f, n, k, spec)) /
                  (lambda * lambda - kk * kk);
  h.residual = std::abs(h.transform - h.closed_form);
  return h;
}

double delta_infinity(const std::vector<double>& heights, const std::vector<cplx>& values, double window) {
  if (heights.size() != values.size())
    throw Error(ErrorKind::InvalidArgument, "heights and values differ in length");
  if (heights.empty() || !(window > 0.0)) throw Error(ErrorKind::EmptyWindow, "no samples or non-positive window");
  const double top = *std::max_element(heights.begin(), heights.end());
  if (top < window) throw Error(ErrorKind::EmptyWindow, "samples do not reach the window height");
  double best = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t j = 0; j < heights.size(); ++j) {
    if (heights[j] < top - window) continue;
    any = true;
    best = std::max(best, std::exp(-0.5 * kPi * heights[j]) * std::log(std::abs(values[j])));
  }
  if (!any) throw Error(ErrorKind::EmptyWindow, "no samples inside the window");
  return -best;
}

double delta_infinity(const ComplexFn& F, int sign, double height, double window, int samples) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  if (!(window > 0.0) || !(height >= window) || samples < 1)
    throw Error(ErrorKind::EmptyWindow, "window must be positive and no larger than the height");
  std::vector<double> h;
  std::vector<cplx> v;
  for (int j = 0; j < samples; ++j) {
    const double t = samples == 1 ? height : height - window + window * j / (samples - 1);
    h.push_back(t);
    v.push_back(F(cplx(0.0, sign * t)));
  }
  return delta_infinity(h, v, window);
}

std::vector<cplx> imaginary_axis_grid(double xi_max, double step) {
  if (!(step > 0.0) || !(xi_max >= 0.0)) throw Error(ErrorKind::InvalidArgument, "grid needs step > 0");
  std::vector<cplx> g;
  const long count = std::lround(std::floor(xi_max / step + 1e-9));
  for (long j = 0; j <= count; ++j) g.emplace_back(0.0, step * j);
  return g;
}

std::vector<cplx> strip_grid(double xi_max, double step) {
  std::vector<cplx> g;
  for (double re : {-1.0, -0.5, 0.0, 0.5, 1.0})
    for (cplx z : imaginary_axis_grid(xi_max, step)) g.emplace_back(re, z.imag());
  return g;
}

TransformRecord make_transform_record(const RadialProfile& f, int n, const std::vector<cplx>& grid,
                                      const QuadratureSpec& spec) {
  TransformRecord r;
  r.n = n;
  for (cplx z : grid) r.principal.emplace_back(z, principal_transform(f, n, z, spec));
  for (int k : index_sets(n).gamma) r.discrete.emplace_back(k, discrete_transform(f, n, k, spec));
  return r;
}

}  // namespace harmonia
