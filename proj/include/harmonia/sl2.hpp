#pragma once

#include "harmonia/numerics.hpp"

namespace harmonia {

// Real 2x2 matrix [[a, b], [c, d]] with determinant 1.
struct GroupElement {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  double det() const noexcept { return a * d - b * c; }
  GroupElement operator*(const GroupElement& o) const noexcept {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  GroupElement inverse() const noexcept { return {d, -b, -c, a}; }
  double max_abs() const noexcept;
};

// Throws DeterminantViolation unless |ad - bc - 1| <= 1e-12 * max(1, max|entry|^2).
void validate(const GroupElement& g);

// Matrix conventions.
GroupElement k_theta(double theta);  // [[cos, -sin], [sin, cos]]
GroupElement a_t(double t);          // diag(e^t, e^-t)
GroupElement n_xi(double xi);        // [[1, xi], [0, 1]]

// e_n(k_theta) = e^{i n theta}
cplx e_n(int n, double theta);

// g = k_theta a_t n_xi
struct IwasawaCoords {
  double theta = 0.0;  // in [0, 2pi)
  double t = 0.0;
  double xi = 0.0;
};
IwasawaCoords iwasawa(const GroupElement& g);
GroupElement compose(const IwasawaCoords& c);

// g = k_theta1 a_t k_theta2, t >= 0
struct CartanCoords {
  double theta1 = 0.0;  // in [0, 2pi), branch with cos(theta1) >= 0 preferred
  double t = 0.0;
  double theta2 = 0.0;  // in [0, 2pi)
};
CartanCoords cartan(const GroupElement& g);
GroupElement compose(const CartanCoords& c);

// phi_lambda(x) as the K-average of e^{(lambda-1) H(x k)} e_n(k^{-1}) conj(e_n(K(x k)^{-1})),
// computed by the periodic trapezoid rule (an oracle independent of 2F1).
cplx k_integral_phi(int n, cplx lambda, const GroupElement& x, const QuadratureSpec& spec);

}  // namespace harmonia
