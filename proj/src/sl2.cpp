#include "harmonia/sl2.hpp"

#include <algorithm>
#include <cmath>

namespace harmonia {

namespace {

double wrap_angle(double x) {
  double r = std::fmod(x, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

}  // namespace

double GroupElement::max_abs() const noexcept {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

void validate(const GroupElement& g) {
  const double m = g.max_abs();
  if (!std::isfinite(m)) throw Error(ErrorKind::DeterminantViolation, "matrix entries are not finite");
  const double scale = std::max(1.0, m * m);
  const double det = g.det();
  if (std::abs(det - 1.0) > 1e-12 * scale) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "determinant %.17g differs from 1", det);
    throw Error(ErrorKind::DeterminantViolation, buf);
  }
}

GroupElement k_theta(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c, -s, s, c};
}

GroupElement a_t(double t) { return {std::exp(t), 0.0, 0.0, std::exp(-t)}; }

GroupElement n_xi(double xi) { return {1.0, xi, 0.0, 1.0}; }

cplx e_n(int n, double theta) { return std::polar(1.0, n * theta); }

IwasawaCoords iwasawa(const GroupElement& g) {
  validate(g);
  // First column of k_theta a_t n_xi is e^t (cos theta, sin theta).
  const double r = std::hypot(g.a, g.c);
  const double theta = std::atan2(g.c, g.a);
  const double cs = g.a / r, sn = g.c / r;
  // (k^{-1} g)_{12} = e^t xi
  const double top_right = cs * g.b + sn * g.d;
  return {wrap_angle(theta), std::log(r), top_right / r};
}

GroupElement compose(const IwasawaCoords& c) { return k_theta(c.theta) * a_t(c.t) * n_xi(c.xi); }

CartanCoords cartan(const GroupElement& g) {
  validate(g);
  // Closed-form 2x2 SVD: g = R(phi) diag(q + r, q - r) R(theta).
  const double e = 0.5 * (g.a + g.d), f = 0.5 * (g.a - g.d);
  const double gg = 0.5 * (g.c + g.b), h = 0.5 * (g.c - g.b);
  const double q = std::hypot(e, h), r = std::hypot(f, gg);
  const double a1 = std::atan2(gg, f), a2 = std::atan2(h, e);
  double theta2 = 0.5 * (a2 - a1);
  double theta1 = 0.5 * (a2 + a1);
  // R(pi) = -I, so (theta1 + pi, theta2 + pi) is the same decomposition.
  if (std::cos(theta1) < 0.0) {
    theta1 += kPi;
    theta2 += kPi;
  }
  return {wrap_angle(theta1), std::log(q + r), wrap_angle(theta2)};
}

GroupElement compose(const CartanCoords& c) { return k_theta(c.theta1) * a_t(c.t) * k_theta(c.theta2); }

cplx k_integral_phi(int n, cplx lambda, const GroupElement& x, const QuadratureSpec& spec) {
  validate(x);
  require_finite(lambda, "lambda");
  const auto integrand = [&](double theta) -> cplx {
    const IwasawaCoords ic = iwasawa(x * k_theta(theta));
    return std::exp((lambda - 1.0) * ic.t) * e_n(n, ic.theta - theta);
  };
  return mean_over_circle(integrand, spec).value;
}

}  // namespace harmonia
