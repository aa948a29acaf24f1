#include "harmonia/eigenfn.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace harmonia {

namespace {

// log cosh t without overflow.
double log_cosh(double t) {
  t = std::abs(t);
  return t + std::log1p(std::exp(-2.0 * t)) - std::log(2.0);
}

// Closed forms switch from the printed argument -sinh^2 t to its Pfaff image tanh^2 t
// beyond this radius, where cosh^n t would otherwise overflow before cancelling.
constexpr double kDirectRadius = 1.0;

}  // namespace

IndexSets index_sets(int n) {
  IndexSets s;
  s.n = n;
  const int an = std::abs(n);
  // Gamma_n: k of parity opposite to n, strictly between 0 and n.
  if (n > 0) {
    for (int k = 1; k < n; ++k)
      if ((k + n) % 2 != 0) s.gamma.push_back(k);
  } else if (n < 0) {
    for (int k = n + 1; k < 0; ++k)
      if ((k + n) % 2 != 0) s.gamma.push_back(k);
  }
  for (int k = an - 1; k > 0; k -= 2) s.B.push_back(k);
  s.k0 = an / 2 + 1;
  for (int i = 0; i < s.k0; ++i) s.B1.push_back({an - 2 * i - 1, 1.0});
  return s;
}

bool in_gamma(int n, int k) {
  if (n > 0) return k > 0 && k < n && (k + n) % 2 != 0;
  if (n < 0) return k < 0 && k > n && (k + n) % 2 != 0;
  return false;
}

bool in_B(int n, cplx lambda) {
  long m = 0;
  if (!near_integer(lambda, m)) return false;
  const long an = std::abs(n);
  return m > 0 && m < an && (m + an) % 2 != 0;
}

bool in_B1(int n, cplx lambda) {
  for (const Ball& b : index_sets(n).B1)
    if (std::abs(lambda - static_cast<double>(b.center)) <= b.radius + kPoleTolerance) return true;
  return false;
}

SpectralClass classify(int n, cplx lambda) {
  SpectralClass c;
  long m = 0;
  c.in_strip = std::abs(lambda.real()) <= 1.0;
  c.right_half = lambda.real() > 0.0;
  c.integer = near_integer(lambda, m);
  c.in_B = in_B(n, lambda);
  c.in_B1 = in_B1(n, lambda);
  return c;
}

bool IntegerSet::contains(long m) const noexcept {
  // Z^sigma with k in Z^{-sigma}: m must have parity opposite to k.
  if ((m + k) % 2 == 0) return false;
  return k >= 1 ? m >= k + 1 : m <= k - 1;
}

std::vector<long> IntegerSet::first(std::size_t count) const {
  std::vector<long> out;
  out.reserve(count);
  const long step = k >= 1 ? 2 : -2;
  long m = k >= 1 ? k + 1 : k - 1;
  for (std::size_t i = 0; i < count; ++i, m += step) out.push_back(m);
  return out;
}

IntegerSet z_of_k(int k) {
  if (k == 0) throw Error(ErrorKind::ZeroIndex, "Z(k) is defined for nonzero k only");
  return IntegerSet{k};
}

double delta_density(double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "Haar density needs t >= 0");
  return 2.0 * std::sinh(2.0 * t);
}

namespace {

// sech^2 t below the normal range leaves no information about 1 - tanh^2 t.
void require_representable(double sech2, double t) {
  if (!(sech2 >= std::numeric_limits<double>::min())) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "t=%.17g is beyond the double-precision range of phi (sech^2 t underflows)", t);
    throw Error(ErrorKind::InvalidArgument, buf);
  }
}

}  // namespace

cplx phi(int n, cplx lambda, double t) {
  require_finite(lambda, "lambda");
  t = std::abs(t);
  if (t == 0.0) return 1.0;
  const double dn = static_cast<double>(n);
  if (t <= kDirectRadius) {
    const double sh = std::sinh(t), ch = std::cosh(t);
    const cplx a = (dn + 1.0 + lambda) / 2.0, b = (dn + 1.0 - lambda) / 2.0;
    return std::pow(ch, dn) * hyp2f1(a, b, 1.0, -sh * sh, ch * ch);
  }
  const double lc = log_cosh(t);
  const double th = std::tanh(t);
  const double wc = std::exp(-2.0 * lc);
  require_representable(wc, t);
  const cplx A = (1.0 + lambda + dn) / 2.0, B = (1.0 + lambda - dn) / 2.0;
  return std::exp(-(1.0 + lambda) * lc) * hyp2f1(A, B, 1.0, th * th, wc);
}

cplx phi_derivative(int n, cplx lambda, double t) {
  require_finite(lambda, "lambda");
  const double sign = t < 0.0 ? -1.0 : 1.0;
  t = std::abs(t);
  if (t == 0.0) return 0.0;
  const double dn = static_cast<double>(n);
  if (t <= kDirectRadius) {
    const double sh = std::sinh(t), ch = std::cosh(t);
    const double z = -sh * sh, zc = ch * ch;
    const cplx a = (dn + 1.0 + lambda) / 2.0, b = (dn + 1.0 - lambda) / 2.0;
    const cplx f0 = hyp2f1(a, b, 1.0, z, zc);
    const cplx f1 = a * b * hyp2f1(a + 1.0, b + 1.0, 2.0, z, zc);
    return sign * (dn * std::pow(ch, dn - 1.0) * sh * f0 - 2.0 * sh * std::pow(ch, dn + 1.0) * f1);
  }
  const double lc = log_cosh(t);
  const double th = std::tanh(t);
  const double w = th * th, wc = std::exp(-2.0 * lc);
  require_representable(wc, t);
  const cplx A = (1.0 + lambda + dn) / 2.0, B = (1.0 + lambda - dn) / 2.0;
  const cplx pref = std::exp(-(1.0 + lambda) * lc);
  const cplx f0 = hyp2f1(A, B, 1.0, w, wc);
  const cplx f1 = A * B * hyp2f1(A + 1.0, B + 1.0, 2.0, w, wc);
  return sign * pref * (-(1.0 + lambda) * th * f0 + 2.0 * th * wc * f1);
}

cplx phi_cap(int n, cplx lambda, double t) {
  require_finite(lambda, "lambda");
  if (!(t > 0.0)) throw Error(ErrorKind::SingularAtOrigin, "Phi is singular at t = 0 (2F1 argument 1)");
  const double an = std::abs(static_cast<double>(n));
  const cplx A = (1.0 + lambda + an) / 2.0, B = (1.0 + lambda - an) / 2.0, C = 1.0 + lambda;
  const double lc = log_cosh(t);
  const double th = std::tanh(t);
  const double x = std::exp(-2.0 * lc), xc = th * th;
  return std::exp(-(1.0 + lambda) * (std::log(2.0) + lc)) * hyp2f1(A, B, C, x, xc);
}

cplx phi_cap_derivative(int n, cplx lambda, double t) {
  require_finite(lambda, "lambda");
  if (!(t > 0.0)) throw Error(ErrorKind::SingularAtOrigin, "Phi is singular at t = 0 (2F1 argument 1)");
  const double an = std::abs(static_cast<double>(n));
  const cplx A = (1.0 + lambda + an) / 2.0, B = (1.0 + lambda - an) / 2.0, C = 1.0 + lambda;
  const double lc = log_cosh(t);
  const double th = std::tanh(t);
  const double x = std::exp(-2.0 * lc), xc = th * th;
  const cplx pref = std::exp(-(1.0 + lambda) * (std::log(2.0) + lc));
  const cplx f0 = hyp2f1(A, B, C, x, xc);
  if (is_nonpositive_integer(C + 1.0))
    throw Error(ErrorKind::CLowerParameterPole, "derivative of Phi hits a lower-parameter pole");
  const cplx f1 = (A * B / C) * hyp2f1(A + 1.0, B + 1.0, C + 1.0, x, xc);
  return pref * (-(1.0 + lambda) * th * f0 - 2.0 * x * th * f1);
}

cplx c_fn(int n, cplx lambda) {
  require_finite(lambda, "lambda");
  const double an = std::abs(static_cast<double>(n));
  const cplx u = -lambda;
  const cplx v1 = (1.0 - lambda - an) / 2.0;
  const cplx v2 = (1.0 - lambda + an) / 2.0;
  const bool pu = is_nonpositive_integer(u);
  const bool p1 = is_nonpositive_integer(v1);
  const bool p2 = is_nonpositive_integer(v2);
  const int num_order = pu ? 1 : 0;
  const int den_order = (p1 ? 1 : 0) + (p2 ? 1 : 0);
  if (den_order > num_order) return 0.0;
  if (num_order > den_order) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "Gamma(-lambda) pole at lambda=%.17g is not cancelled (n=%d)", lambda.real(), n);
    throw Error(ErrorKind::IndeterminatePoint, buf);
  }
  if (num_order == 0) return std::exp((1.0 + lambda) * std::log(2.0) + lgamma(u) - lgamma(v1) - lgamma(v2));

  // One pole above and one below, both simple.  With lambda = lambda0 + eps,
  // Gamma(-m - eps) ~ (-1)^m / (m! (-eps)) and Gamma(-j - eps/2) ~ (-1)^j / (j! (-eps/2)),
  // so the ratio tends to (-1)^{m-j} j! / (2 m!).
  const long m = std::lround(-u.real());
  const cplx vp = p1 ? v1 : v2;
  const long j = std::lround(-vp.real());
  const double lam0 = static_cast<double>(m);
  const double log_ratio = std::lgamma(static_cast<double>(j) + 1.0) - std::lgamma(static_cast<double>(m) + 1.0);
  const double sgn = ((m - j) % 2 == 0) ? 1.0 : -1.0;
  const cplx other0 = p1 ? cplx((1.0 - lam0 + an) / 2.0) : cplx((1.0 - lam0 - an) / 2.0);
  return sgn * 0.5 * std::exp(log_ratio + (1.0 + lam0) * std::log(2.0)) * rgamma(other0);
}

cplx psi(int n, int k, double t) {
  if (!in_gamma(n, k)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "k=%d is not in Gamma_%d", k, n);
    throw Error(ErrorKind::IndexNotInGamma, buf);
  }
  return phi(n, static_cast<double>(std::abs(k)), t);
}

double CasimirTerms::scale() const noexcept { return std::abs(second) + std::abs(first) + std::abs(potential); }

CasimirTerms casimir_terms(int n, const RadialProfile& f, double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::DerivativeUnavailable, "Casimir operator needs t > 0");
  cplx d1, d2;
  const cplx f0 = f(t);
  if (f.derivative && f.second_derivative) {
    d1 = f.derivative(t);
    d2 = f.second_derivative(t);
  } else {
    const double h = 1e-4 * std::max(1.0, t);
    if (t - 2.0 * h <= 0.0)
      throw Error(ErrorKind::DerivativeUnavailable, "finite-difference stencil reaches t <= 0");
    const cplx fp1 = f(t + h), fm1 = f(t - h), fp2 = f(t + 2.0 * h), fm2 = f(t - 2.0 * h);
    d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  }
  const double ch = std::cosh(t);
  CasimirTerms out;
  out.second = d2;
  out.first = 2.0 / std::tanh(2.0 * t) * d1;
  out.potential = (static_cast<double>(n) * n) / (ch * ch) * f0;
  out.value = out.second + out.first + out.potential;
  return out;
}

cplx casimir_radial(int n, const RadialProfile& f, double t) { return casimir_terms(n, f, t).value; }

cplx wronskian_bracket(cplx f, cplx df, cplx g, cplx dg, double t) {
  return delta_density(t) * (df * g - f * dg);
}

cplx wronskian_bracket(const ScalarFn& f, const ScalarFn& df, const ScalarFn& g, const ScalarFn& dg, double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidArgument, "Wronskian bracket needs t > 0");
  return wronskian_bracket(f(t), df(t), g(t), dg(t), t);
}

double connection_residual(int n, cplx lambda, double t) {
  long m = 0;
  if (near_integer(lambda, m)) throw Error(ErrorKind::IntegerSpectralParam, "connection formula needs lambda not in Z");
  const cplx p = phi(n, lambda, t);
  const cplx rhs = c_fn(n, lambda) * phi_cap(n, lambda, t) + c_fn(n, -lambda) * phi_cap(n, -lambda, t);
  return std::abs(p - rhs) / (1.0 + std::abs(p));
}

RadialProfile phi_profile(int n, cplx lambda) {
  RadialProfile p;
  p.value = [n, lambda](double t) { return phi(n, lambda, t); };
  p.derivative = [n, lambda](double t) { return phi_derivative(n, lambda, t); };
  p.label = "phi";
  return p;
}

RadialProfile phi_cap_profile(int n, cplx lambda) {
  RadialProfile p;
  p.value = [n, lambda](double t) { return phi_cap(n, lambda, t); };
  p.derivative = [n, lambda](double t) { return phi_cap_derivative(n, lambda, t); };
  p.smoothness = Smoothness::LogSingular;
  p.label = "Phi";
  return p;
}

}  // namespace harmonia
