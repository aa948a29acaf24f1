#include <cmath>

#include "harmonia/eigenfn.hpp"
#include "harmonia/sl2.hpp"
#include "support.hpp"

using namespace harmonia;

namespace {

double distance(const GroupElement& x, const GroupElement& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

}  // namespace

TEST_SUITE("sl2") {
  TEST_CASE("matrix conventions") {
    const GroupElement k = k_theta(M_PI / 2.0);
    CHECK(k.a == doctest::Approx(0.0));
    CHECK(k.b == doctest::Approx(-1.0));
    CHECK(k.c == doctest::Approx(1.0));
    const GroupElement a = a_t(0.5);
    CHECK(a.a == doctest::Approx(std::exp(0.5)));
    CHECK(a.d == doctest::Approx(std::exp(-0.5)));
    CHECK(n_xi(2.0).b == 2.0);
    CHECK(std::abs(e_n(3, 0.4) - std::polar(1.0, 1.2)) < 1e-15);
  }

  TEST_CASE("Iwasawa round trip") {
    const GroupElement g = k_theta(2.1) * a_t(-0.7) * n_xi(1.3);
    const IwasawaCoords c = iwasawa(g);
    CHECK(c.theta == doctest::Approx(2.1));
    CHECK(c.t == doctest::Approx(-0.7));
    CHECK(c.xi == doctest::Approx(1.3));
    CHECK(distance(compose(c), g) < 1e-13);
  }

  TEST_CASE("Cartan round trip") {
    for (double t : {0.0, 0.3, 2.5}) {
      const GroupElement g = k_theta(0.4) * a_t(t) * k_theta(5.0);
      const CartanCoords c = cartan(g);
      CHECK(c.t == doctest::Approx(t).epsilon(1e-12));
      CHECK(distance(compose(c), g) < 1e-12);
    }
  }

  TEST_CASE("determinant check") {
    CHECK_KIND(validate(GroupElement{2.0, 0.0, 0.0, 1.0}), ErrorKind::DeterminantViolation);
    CHECK_KIND(iwasawa(GroupElement{1.0, 1.0, 1.0, 1.0}), ErrorKind::DeterminantViolation);
    CHECK_NOTHROW(validate(k_theta(0.3) * a_t(4.0)));
  }

  TEST_CASE("K-integral reproduces the spherical function") {
    QuadratureSpec spec;
    for (int n : {0, 1, 2}) {
      const cplx lambda(0.6, 1.1);
      for (double t : {0.3, 1.2}) CHECK_REL(k_integral_phi(n, lambda, a_t(t), spec), phi(n, lambda, t), 1e-9);
    }
  }
}
