#include <cmath>

#include "harmonia/bkernel.hpp"
#include "harmonia/eigenfn.hpp"
#include "support.hpp"

using namespace harmonia;

TEST_SUITE("bkernel") {
  TEST_CASE("b reference values") {
    CHECK_REL(b_kernel(0, 2.0, 1.0), cplx(0.019687179768021891, 0.0), 1e-12);
    CHECK_REL(b_kernel(2, cplx(1.5, 0.5), 0.7), cplx(0.11053307417622286, -0.16346882509570717), 1e-12);
  }

  TEST_CASE("b domain") {
    CHECK_KIND(b_kernel(4, 3.0, 1.0), ErrorKind::SpectralParamInB);
    CHECK_KIND(check_b_domain(0, cplx(-0.5, 0.0)), ErrorKind::NonpositiveRealPart);
    CHECK_NOTHROW(check_b_domain(4, 2.0));
  }

  TEST_CASE("b solves the radial equation with the expected derivative") {
    const cplx lambda(1.4, 0.3);
    const double h = 1e-5, t = 0.8;
    const cplx fd = (b_kernel(1, lambda, t + h) - b_kernel(1, lambda, t - h)) / (2.0 * h);
    CHECK_REL(b_kernel_derivative(1, lambda, t), fd, 1e-8);
  }

  TEST_CASE("L1 norms") {
    QuadratureSpec spec;
    CHECK(l1_norm_b(0, 5.0, spec) == doctest::Approx(1.0 / 24.0).epsilon(1e-10));
    CHECK(l1_norm_b(2, 3.0, spec) == doctest::Approx(0.1875).epsilon(1e-10));
    CHECK(l1_norm_b(1, 2.5, spec) == doctest::Approx(0.21563962869340111).epsilon(1e-10));
    CHECK_KIND(l1_norm_b(0, 0.5, spec), ErrorKind::NotIntegrableRegion);
    CHECK_KIND(l1_norm_b(4, cplx(3.2, 0.2), spec), ErrorKind::ExcludedRegion);
  }

  TEST_CASE("weighted moment") {
    QuadratureSpec spec;
    CHECK_REL(weighted_moment_b(1, 4.0, spec), cplx(1.0 / 12.0, 0.0), 1e-9);
    CHECK_KIND(weighted_moment_b(3, 3.5, spec), ErrorKind::DivergentIntegral);
  }

  TEST_CASE("estimate constants are finite and positive") {
    const EstimateConstants e = b_estimate_check(0, cplx(2.0, 5.0));
    CHECK(e.c_small > 0.0);
    CHECK(e.c_large > 0.0);
    CHECK_KIND(b_estimate_check(4, 3.0), ErrorKind::SpectralParamInB);
    CHECK_KIND(b_estimate_check(4, cplx(3.2, 0.5)), ErrorKind::ExcludedRegion);
  }

  TEST_CASE("spherical product formula") {
    QuadratureSpec spec;
    CHECK(product_formula_residual(0, 2.0, 0.3, 1.5, spec) < 1e-8);
    CHECK(product_formula_residual(2, 1.5, 1.1, 0.6, spec) < 1e-8);
    CHECK_KIND(product_formula_residual(0, 2.0, 1.0, 1.0, spec), ErrorKind::CoincidentRadii);
  }

  TEST_CASE("T_lambda domain") {
    QuadratureSpec spec;
    CHECK_KIND(t_transform(zero_profile(), 0, 1.5, 1.0, spec), ErrorKind::StripViolation);
    CHECK_KIND(t_transform(zero_profile(), 0, 0.5, 0.0, spec), ErrorKind::SingularAtOrigin);
  }
}
