#include <cmath>

#include "harmonia/bkernel.hpp"
#include "harmonia/eigenfn.hpp"
#include "harmonia/fourier.hpp"
#include "harmonia/profile.hpp"
#include "harmonia/resolvent.hpp"
#include "support.hpp"

using namespace harmonia;

TEST_SUITE("resolvent") {
  TEST_CASE("quotient identity") {
    QuadratureSpec spec;
    const QuotientResidual r = quotient_identity_residual(0, 3.0, cplx(2.5, 0.5), cplx(0.3, 0.9), spec);
    CHECK(r.algebraic < 1e-14);
    CHECK(r.numeric < 1e-6);
    const QuotientResidual d = quotient_identity_residual_discrete(4, 6.0, 2.0, 3, spec);
    CHECK(d.algebraic < 1e-14);
    CHECK(d.numeric < 1e-6);
  }

  TEST_CASE("quotient identity domains") {
    QuadratureSpec spec;
    CHECK_KIND(quotient_identity_residual(0, 0.8, 2.0, 0.5, spec), ErrorKind::ExcludedSpectralParam);
    CHECK_KIND(quotient_identity_residual(0, 3.0, 2.0, 1.5, spec), ErrorKind::ExcludedSpectralParam);
    CHECK_KIND(quotient_identity_residual_discrete(4, 6.0, 2.0, 2, spec), ErrorKind::IndexNotInGamma);
  }

  TEST_CASE("resolvent pairing") {
    QuadratureSpec spec;
    // Pairing with the constant 1 is the n = 0 moment 1/(lambda^2 - 1).
    const cplx lambda(2.5, 1.0);
    CHECK_REL(resolvent_pair(constant_profile(1.0), 0, lambda, spec), 1.0 / (lambda * lambda - 1.0), 1e-8);
    // Compact g: agrees with a direct quadrature of b g Delta.
    const RadialProfile g = bump_profile();
    const auto direct = integrate_segment(
        [&](double t) { return b_kernel(2, lambda, t) * g(t) * delta_density(t); }, 0.5, 1.5, spec);
    CHECK_REL(resolvent_pair(g, 2, lambda, spec), direct.value, 1e-8);
    CHECK_KIND(resolvent_pair(g, 0, 0.5, spec), ErrorKind::ExcludedSpectralParam);
    CHECK_KIND(resolvent_pair(g, 4, 3.0, spec), ErrorKind::ExcludedSpectralParam);
  }

  TEST_CASE("T_lambda representative") {
    QuadratureSpec spec;
    CHECK_KIND(t_representative_pair(bump_profile(), bump_profile(), 0, 1.5, spec), ErrorKind::StripViolation);
    CHECK_KIND(t_representative_pair(bump_profile(), zero_profile(), 0, 0.5, spec), ErrorKind::TransformZeroDivision);
  }

  TEST_CASE("contour spec validation") {
    ContourSpec c;
    CHECK_NOTHROW(c.validate());
    c.nodes = 15;
    CHECK_KIND(c.validate(), ErrorKind::InvalidArgument);
    c = ContourSpec{};
    c.abscissa = 1.0;
    CHECK_KIND(c.validate(), ErrorKind::InvalidArgument);
    CHECK(ContourSpec::for_type(3).abscissa == doctest::Approx(5.0));
  }

  TEST_CASE("contour reconstruction of a bump") {
    QuadratureSpec spec;
    const RadialProfile f = bump_profile(contour_bump_shape(0));
    const ContourSamples s = sample_contour(f, 0, ContourSpec::for_type(0, 30.0, 256), spec);
    CHECK(s.folded);
    CHECK(s.heights.size() == 128);
    CHECK_NOTHROW(check_decay(s));
    for (double t : {0.3, 1.0, 1.3, 2.2}) CHECK(std::abs(contour_reconstruct(s, t) - f(t)) < 1e-3);
    CHECK(std::abs(contour_transform(s, 0.3) - principal_transform(f, 0, 0.3, spec)) < 1e-4);
    CHECK_KIND(contour_reconstruct(s, 0.0), ErrorKind::SingularAtOrigin);
    const auto rows = reconstruction_table(f, s, {0.5, 1.0});
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].f == doctest::Approx(1.0));
  }

  TEST_CASE("contour preconditions") {
    QuadratureSpec spec;
    CHECK_KIND(sample_contour(b_profile(0, 2.0), 0, ContourSpec{}, spec), ErrorKind::InvalidArgument);
    // A short line leaves the transform far from negligible at the truncation height.
    const ContourSamples s = sample_contour(bump_profile(contour_bump_shape(0)), 0, ContourSpec::for_type(0, 2.0, 16), spec);
    CHECK_KIND(check_decay(s), ErrorKind::InsufficientDecay);
  }
}
