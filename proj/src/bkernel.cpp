#include "harmonia/bkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harmonia/eigenfn.hpp"
#include "harmonia/sl2.hpp"

namespace harmonia {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Truncation point for int_t^inf against b_lambda: the kernel decays like
// e^{-(Re lambda + 1) t}, so 40 / (Re lambda + 1) leaves a tail mass near e^{-40}.
double b_tail_end(double t, cplx lambda) { return std::max(t, 1.0) + 40.0 / (lambda.real() + 1.0); }

std::vector<double> interior_points(const RadialProfile& f, double lo, double hi) {
  std::vector<double> pts;
  for (double p : f.breakpoints)
    if (p > lo && p < hi) pts.push_back(p);
  return pts;
}

}  // namespace

void check_b_domain(int n, cplx lambda) {
  require_finite(lambda, "lambda");
  if (!(lambda.real() > 0.0)) throw Error(ErrorKind::NonpositiveRealPart, "b_lambda needs Re lambda > 0");
  if (in_B(n, lambda)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda=%.17g is a zero of c(-lambda) for n=%d", lambda.real(), n);
    throw Error(ErrorKind::SpectralParamInB, buf);
  }
}

cplx b_kernel(int n, cplx lambda, double t) {
  check_b_domain(n, lambda);
  return phi_cap(n, lambda, t) / (2.0 * lambda * c_fn(n, -lambda));
}

cplx b_kernel_derivative(int n, cplx lambda, double t) {
  check_b_domain(n, lambda);
  return phi_cap_derivative(n, lambda, t) / (2.0 * lambda * c_fn(n, -lambda));
}

RadialProfile b_profile(int n, cplx lambda) {
  check_b_domain(n, lambda);
  const cplx scale = 1.0 / (2.0 * lambda * c_fn(n, -lambda));
  RadialProfile p;
  p.value = [n, lambda, scale](double t) { return scale * phi_cap(n, lambda, t); };
  p.derivative = [n, lambda, scale](double t) { return scale * phi_cap_derivative(n, lambda, t); };
  p.decay_rate = lambda.real() + 1.0;
  p.smoothness = Smoothness::LogSingular;
  p.label = "b";
  return p;
}

QuadResult integrate_radial(const ScalarFn& g, double lo, double hi, const std::vector<double>& breakpoints,
                            double decay_rate, OriginBehaviour origin, const QuadratureSpec& spec) {
  QuadResult out;
  if (!(hi > lo)) return out;
  std::vector<double> pts{lo};
  for (double p : breakpoints)
    if (p > lo && p < hi) pts.push_back(p);
  const bool singular = origin == OriginBehaviour::LogSingular && lo == 0.0;
  if (singular && hi > 0.5) pts.push_back(0.5);
  const bool infinite = std::isinf(hi);
  if (!infinite) pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto accumulate = [&](const QuadResult& r) {
    out.value += r.value;
    out.error += r.error;
    out.evaluations += r.evaluations;
    out.subdivisions += r.subdivisions;
  };

  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    if (singular && a == 0.0) {
      // t = e^{-u}: the log singularity becomes linear growth against e^{-u}.
      const auto h = [&g](double u) -> cplx {
        const double t = std::exp(-u);
        return t == 0.0 ? cplx(0.0) : g(t) * t;
      };
      accumulate(integrate_halfline(h, 0.9, spec, -std::log(b)));
    } else {
      accumulate(integrate_segment(g, a, b, spec));
    }
  }
  if (infinite) {
    if (!(decay_rate > 0.0))
      throw Error(ErrorKind::DivergentIntegral, "integrand over [t, inf) has no exponential decay");
    try {
      accumulate(integrate_halfline(g, decay_rate, spec, pts.back()));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TailNotDecaying) throw Error(ErrorKind::DivergentIntegral, e.what());
      throw;
    }
  }
  return out;
}

EstimateConstants b_estimate_check(int n, cplx lambda) {
  check_b_domain(n, lambda);
  if (in_B1(n, lambda)) throw Error(ErrorKind::ExcludedRegion, "lambda lies in the excluded balls B1");
  const cplx scale = 1.0 / (2.0 * lambda * c_fn(n, -lambda));
  EstimateConstants c;
  // Geometric grid from 1/2 down to 1e-8.
  constexpr int kSmall = 65;
  for (int j = 0; j < kSmall; ++j) {
    const double t = 0.5 * std::pow(2e-8, static_cast<double>(j) / (kSmall - 1));
    c.c_small = std::max(c.c_small, std::abs(scale * phi_cap(n, lambda, t)) / std::log(1.0 / t));
  }
  constexpr int kLarge = 96;
  for (int j = 0; j < kLarge; ++j) {
    const double t = 0.5 + 9.5 * j / (kLarge - 1);
    c.c_large = std::max(c.c_large, std::abs(scale * phi_cap(n, lambda, t)) * std::exp((lambda.real() + 1.0) * t));
  }
  return c;
}

double l1_norm_b(int n, cplx lambda, const QuadratureSpec& spec) {
  check_b_domain(n, lambda);
  if (!(lambda.real() > 1.0)) throw Error(ErrorKind::NotIntegrableRegion, "b_lambda is integrable only for Re lambda > 1");
  if (in_B1(n, lambda)) throw Error(ErrorKind::ExcludedRegion, "lambda lies in the excluded balls B1");
  const RadialProfile b = b_profile(n, lambda);
  const auto g = [&b](double t) -> cplx { return std::abs(b.value(t)) * delta_density(t); };
  return integrate_radial(g, 0.0, kInf, {}, lambda.real() - 1.0, OriginBehaviour::LogSingular, spec).value.real();
}

cplx weighted_moment_b(int n, cplx lambda, const QuadratureSpec& spec) {
  check_b_domain(n, lambda);
  const double an = std::abs(static_cast<double>(n));
  if (!(lambda.real() > an + 1.0))
    throw Error(ErrorKind::DivergentIntegral, "weighted moment needs Re lambda > |n| + 1");
  const RadialProfile b = b_profile(n, lambda);
  const auto g = [&b, an](double t) -> cplx { return std::pow(std::cosh(t), an) * b.value(t) * delta_density(t); };
  return integrate_radial(g, 0.0, kInf, {}, lambda.real() - an - 1.0, OriginBehaviour::LogSingular, spec).value;
}

cplx convolve_with_b(const RadialProfile& f, int n, cplx lambda, double t, const QuadratureSpec& spec) {
  check_b_domain(n, lambda);
  if (!(t > 0.0)) throw Error(ErrorKind::SingularAtOrigin, "convolution against b_lambda is evaluated for t > 0");
  const RadialProfile b = b_profile(n, lambda);

  const double inner_end = std::min(t, f.support);
  cplx inner = 0.0;
  if (inner_end > 0.0) {
    const auto g = [&](double s) -> cplx { return f(s) * phi(n, lambda, s) * delta_density(s); };
    inner = integrate_radial(g, 0.0, inner_end, interior_points(f, 0.0, inner_end), 0.0, OriginBehaviour::Regular, spec)
                .value;
  }
  cplx outer = 0.0;
  if (t < f.support) {
    const double end = std::min(f.support, b_tail_end(t, lambda));
    const auto g = [&](double s) -> cplx { return f(s) * b.value(s) * delta_density(s); };
    outer = integrate_radial(g, t, end, interior_points(f, t, end), 0.0, OriginBehaviour::Regular, spec).value;
  }
  return b.value(t) * inner + phi(n, lambda, t) * outer;
}

double product_formula_residual(int n, cplx lambda, double s, double t, const QuadratureSpec& spec) {
  check_b_domain(n, lambda);
  if (!(s >= 0.0) || !(t >= 0.0) || (s == 0.0 && t == 0.0))
    throw Error(ErrorKind::InvalidArgument, "product formula needs s, t >= 0, not both zero");
  if (std::abs(s - t) < 1e-12) throw Error(ErrorKind::CoincidentRadii, "s = t: a_s k a_t meets K");
  const GroupElement as = a_t(s), at = a_t(t);
  const auto integrand = [&](double theta) -> cplx {
    const CartanCoords c = cartan(as * k_theta(theta) * at);
    return e_n(n, c.theta1 + c.theta2 - theta) * b_kernel(n, lambda, c.t);
  };
  const cplx k_integral = mean_over_circle(integrand, spec).value;
  const double hi = std::max(s, t), lo = std::min(s, t);
  const cplx expected = b_kernel(n, lambda, hi) * phi(n, lambda, lo);
  return std::abs(k_integral - expected);
}

cplx t_transform(const RadialProfile& f, int n, cplx lambda, double t, const QuadratureSpec& spec) {
  if (!(lambda.real() > 0.0 && lambda.real() < 1.0))
    throw Error(ErrorKind::StripViolation, "T_lambda is defined for 0 < Re lambda < 1");
  check_b_domain(n, lambda);
  if (!(t > 0.0)) throw Error(ErrorKind::SingularAtOrigin, "T_lambda f is evaluated for t > 0");
  if (t >= f.support) return 0.0;
  const RadialProfile b = b_profile(n, lambda);
  const double end = f.support;
  const double rate = f.decay_rate - 1.0 - lambda.real();
  const auto gphi = [&](double s) -> cplx { return f(s) * phi(n, lambda, s) * delta_density(s); };
  const auto gb = [&](double s) -> cplx { return f(s) * b.value(s) * delta_density(s); };
  const std::vector<double> pts = interior_points(f, t, end);
  const cplx i_phi = integrate_radial(gphi, t, end, pts, rate, OriginBehaviour::Regular, spec).value;
  const cplx i_b = integrate_radial(gb, t, end, pts, rate, OriginBehaviour::Regular, spec).value;
  return b.value(t) * i_phi - phi(n, lambda, t) * i_b;
}

RadialProfile t_transform_profile(const RadialProfile& f, int n, cplx lambda, const QuadratureSpec& spec) {
  if (!(lambda.real() > 0.0 && lambda.real() < 1.0))
    throw Error(ErrorKind::StripViolation, "T_lambda is defined for 0 < Re lambda < 1");
  check_b_domain(n, lambda);
  RadialProfile p;
  p.value = [f, n, lambda, spec](double t) { return t_transform(f, n, lambda, t, spec); };
  p.support = f.support;
  p.decay_rate = f.decay_rate;
  p.breakpoints = f.breakpoints;
  p.smoothness = Smoothness::LogSingular;
  p.label = "T_lambda f";
  return p;
}

double l1_norm(const RadialProfile& f, const QuadratureSpec& spec) {
  const auto g = [&f](double t) -> cplx { return std::abs(f(t)) * delta_density(t); };
  const OriginBehaviour origin =
      f.smoothness == Smoothness::LogSingular ? OriginBehaviour::LogSingular : OriginBehaviour::Regular;
  return integrate_radial(g, 0.0, f.support, f.breakpoints, f.decay_rate - 2.0, origin, spec).value.real();
}

double l1_norm_t_transform(const RadialProfile& f, int n, cplx lambda, const QuadratureSpec& spec) {
  return l1_norm(t_transform_profile(f, n, lambda, spec), spec);
}

double distance_to_strip_boundary(cplx lambda) { return std::max(0.0, 1.0 - std::abs(lambda.real())); }

}  // namespace harmonia
