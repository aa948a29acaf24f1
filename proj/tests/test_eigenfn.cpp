#include <cmath>
#include <vector>

#include "harmonia/eigenfn.hpp"
#include "support.hpp"

using namespace harmonia;

TEST_SUITE("eigenfn") {
  TEST_CASE("index sets") {
    const IndexSets s = index_sets(4);
    CHECK(s.gamma == std::vector<int>{1, 3});
    CHECK(s.B == std::vector<int>{3, 1});
    CHECK(s.k0 == 3);
    CHECK(index_sets(-3).gamma == std::vector<int>{-2});
    CHECK(index_sets(0).gamma.empty());
    CHECK(in_gamma(4, 3));
    CHECK_FALSE(in_gamma(4, 2));
    CHECK(in_B(4, 3.0));
    CHECK_FALSE(in_B(4, 2.0));
    CHECK(in_B1(4, cplx(3.2, 0.5)));
    CHECK_FALSE(in_B1(0, cplx(1.0, 0.0)));
  }

  TEST_CASE("spectral classification") {
    const SpectralClass c = classify(2, cplx(0.5, 3.0));
    CHECK(c.in_strip);
    CHECK(c.right_half);
    CHECK_FALSE(c.integer);
    CHECK(classify(3, 2.0).in_B);
  }

  TEST_CASE("integer sets Z(k)") {
    CHECK_KIND(z_of_k(0), ErrorKind::ZeroIndex);
    const IntegerSet z = z_of_k(2);
    CHECK(z.first(3).size() == 3);
  }

  TEST_CASE("phi reference values") {
    CHECK_REL(phi(2, cplx(1.3, 0.4), 0.5), cplx(0.81404827289974906, 0.056466063559052221), 1e-13);
    CHECK_REL(phi(1, cplx(2.2, -0.7), 3.0), cplx(-6.8528344230220777, -15.987767267719009), 1e-12);
    CHECK_REL(phi(0, cplx(0.0, 0.5), 25.0), cplx(9.4921315224471058e-12, 0.0), 1e-9);
    CHECK_REL(phi(3, 1.7, 25.0), cplx(-1716868.1547209454, 0.0), 1e-10);
    CHECK(phi(5, cplx(0.2, 0.1), 0.0) == cplx(1.0, 0.0));
    CHECK_REL(phi(0, cplx(0.0, 0.5), 350.0), cplx(-1.59660135895854e-152, 0.0), 1e-11);
    CHECK_KIND(phi(0, cplx(0.0, 0.5), 380.0), ErrorKind::InvalidArgument);
    // Even in t and in lambda.
    CHECK_REL(phi(2, 0.7, -1.3), phi(2, 0.7, 1.3), 1e-15);
    CHECK_REL(phi(2, cplx(0.7, 0.2), 1.3), phi(2, cplx(-0.7, -0.2), 1.3), 1e-12);
  }

  TEST_CASE("Phi reference values") {
    CHECK_REL(phi_cap(1, cplx(2.0, 1.0), 1.5), cplx(0.00082924978489817867, -0.010929221062319754), 1e-12);
    CHECK_REL(phi_cap(4, cplx(0.3, 0.2), 0.4), cplx(-0.16883937600905061, 0.032405392268856382), 1e-12);
    CHECK_KIND(phi_cap(0, 2.0, 0.0), ErrorKind::SingularAtOrigin);
  }

  TEST_CASE("derivatives against central differences") {
    const cplx lambda(0.9, 0.6);
    const double h = 1e-5;
    for (double t : {0.4, 1.7}) {
      const cplx dphi = (phi(2, lambda, t + h) - phi(2, lambda, t - h)) / (2.0 * h);
      const cplx dcap = (phi_cap(2, lambda, t + h) - phi_cap(2, lambda, t - h)) / (2.0 * h);
      CHECK_REL(phi_derivative(2, lambda, t), dphi, 1e-8);
      CHECK_REL(phi_cap_derivative(2, lambda, t), dcap, 1e-8);
    }
  }

  TEST_CASE("c-function") {
    CHECK_REL(c_fn(0, 2.5), cplx(-0.45765585810108791, 0.0), 1e-13);
    CHECK_REL(c_fn(3, cplx(0.4, 1.1)), cplx(0.17660290087814732, -1.0703172532924146), 1e-12);
    CHECK_REL(c_fn(0, -1.0), cplx(1.0, 0.0), 1e-14);
    // Zeros of c(-lambda) are exactly the set B.
    CHECK(std::abs(c_fn(4, -3.0)) == 0.0);
    CHECK(std::abs(c_fn(4, -1.0)) == 0.0);
  }

  TEST_CASE("connection formula and Wronskian") {
    const cplx lambda(0.4, 1.1);
    for (double t : {0.3, 1.1, 3.0}) CHECK(connection_residual(3, lambda, t) < 1e-10);
    CHECK_KIND(connection_residual(0, 2.0, 1.0), ErrorKind::IntegerSpectralParam);
    const cplx expected = 2.0 * lambda * c_fn(3, -lambda);
    for (double t : {0.5, 1.0, 2.0, 4.0}) {
      const cplx w = wronskian_bracket(phi(3, lambda, t), phi_derivative(3, lambda, t), phi_cap(3, lambda, t),
                                       phi_cap_derivative(3, lambda, t), t);
      CHECK_REL(w, expected, 1e-9);
    }
  }

  TEST_CASE("Casimir eigen-equation") {
    const cplx lambda(1.2, 0.8);
    const RadialProfile f = phi_profile(2, lambda);
    for (double t : {0.5, 1.5}) {
      const CasimirTerms terms = casimir_terms(2, f, t);
      CHECK(std::abs(terms.value - (lambda * lambda - 1.0) * f(t)) / terms.scale() < 1e-6);
    }
    CHECK_KIND(casimir_radial(2, f, 0.0), ErrorKind::DerivativeUnavailable);
  }

  TEST_CASE("discrete series functions") {
    CHECK_REL(psi(4, 3, 1.0), cplx(0.17637844761413467, 0.0), 1e-13);
    CHECK_KIND(psi(4, 2, 1.0), ErrorKind::IndexNotInGamma);
    CHECK_KIND(psi(0, 1, 1.0), ErrorKind::IndexNotInGamma);
    // Exponential decay rate |k| + 1.
    const double r = std::abs(psi(4, 1, 8.0)) / std::abs(psi(4, 1, 7.0));
    CHECK(r == doctest::Approx(std::exp(-2.0)).epsilon(1e-3));
  }

  TEST_CASE("Haar density") {
    CHECK(delta_density(0.5) == doctest::Approx(2.0 * std::sinh(1.0)));
    CHECK_KIND(delta_density(-1.0), ErrorKind::InvalidArgument);
  }
}
