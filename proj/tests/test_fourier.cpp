#include <cmath>

#include "harmonia/bkernel.hpp"
#include "harmonia/fourier.hpp"
#include "harmonia/profile.hpp"
#include "support.hpp"

using namespace harmonia;

TEST_SUITE("fourier") {
  TEST_CASE("resolvent symbols of b") {
    QuadratureSpec spec;
    for (double xi : {0.0, 1.0, 5.0})
      CHECK_REL(principal_transform(b_profile(2, 3.5), 2, cplx(0.0, xi), spec), 1.0 / (3.5 * 3.5 + xi * xi), 1e-7);
    CHECK_REL(discrete_transform(b_profile(4, 5.0), 4, 3, spec), cplx(1.0 / 16.0, 0.0), 1e-7);
    CHECK_REL(discrete_transform(b_profile(-3, 4.0), -3, -2, spec), cplx(1.0 / 12.0, 0.0), 1e-7);
    const cplx z(0.3, 0.9);
    CHECK_REL(principal_transform(b_profile(0, 2.0), 0, z, spec), 1.0 / (4.0 - z * z), 1e-7);
  }

  TEST_CASE("transform domains") {
    QuadratureSpec spec;
    CHECK_KIND(discrete_transform(bump_profile(), 4, 2, spec), ErrorKind::IndexNotInGamma);
    CHECK_KIND(principal_transform(b_profile(0, 1.5), 0, 1.8, spec), ErrorKind::DivergentIntegral);
  }

  TEST_CASE("bump transform is real on the imaginary axis and even") {
    QuadratureSpec spec;
    const RadialProfile f = bump_profile();
    const cplx a = principal_transform(f, 0, cplx(0.0, 2.0), spec);
    const cplx b = principal_transform(f, 0, cplx(0.0, -2.0), spec);
    CHECK(std::abs(a.imag()) < 1e-14);
    CHECK_REL(a, b, 1e-12);
  }

  TEST_CASE("T_lambda transform identities") {
    QuadratureSpec spec;
    const HatCheck h = t_transform_hat_check(bump_profile(), 0, 0.5, 1.0, spec);
    CHECK(h.residual < 1e-6);
    const HatCheck d = t_transform_hat_check_discrete(bump_profile(), 4, cplx(0.3, 0.7), 3, spec);
    CHECK(d.residual < 1e-6);
  }

  TEST_CASE("grids and records") {
    const auto g = imaginary_axis_grid(2.0, 0.5);
    REQUIRE(g.size() == 5);
    CHECK(g.back() == cplx(0.0, 2.0));
    CHECK(strip_grid(1.0, 0.5).size() == 15);
    CHECK_KIND(imaginary_axis_grid(1.0, 0.0), ErrorKind::InvalidArgument);
    QuadratureSpec spec;
    const TransformRecord r = make_transform_record(bump_profile(), 4, imaginary_axis_grid(1.0, 1.0), spec);
    CHECK(r.principal.size() == 2);
    CHECK(r.discrete.size() == 2);
  }

  TEST_CASE("decay functional") {
    // |F(is)| = exp(-e^{pi s/2}) gives exactly 1 (window kept above the underflow threshold);
    // along -i the same F tends to 1 and the functional to 0.
    const auto F = [](cplx z) { return std::exp(-std::exp(cplx(0.0, -0.5 * M_PI) * z)); };
    CHECK(delta_infinity(F, +1, 4.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(delta_infinity(F, -1, 4.0, 2.0)) < 1e-5);
    // Gaussian decay is slower than double-exponential: the functional vanishes.
    CHECK(delta_infinity([](cplx z) { return std::exp(z * z); }, +1, 30.0, 18.0) < 1e-5);
    CHECK_KIND(delta_infinity(F, 2, 30.0, 18.0), ErrorKind::InvalidArgument);
    CHECK_KIND(delta_infinity(F, 1, 10.0, 18.0), ErrorKind::EmptyWindow);
  }
}
