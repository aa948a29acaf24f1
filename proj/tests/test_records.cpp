#include <cmath>
#include <limits>
#include <sstream>

#include "harmonia/profile.hpp"
#include "harmonia/records.hpp"
#include "support.hpp"

using namespace harmonia;

namespace {

TransformRecord sample_record() {
  TransformRecord r;
  r.n = 4;
  r.principal = {{cplx(0.0, 0.25), cplx(0.1, -1e-300)}, {cplx(-0.5, 40.0), cplx(1.0 / 3.0, 2.0 / 7.0)}};
  r.discrete = {{1, cplx(0.041666666666666664, 0.0)}, {3, cplx(M_PI, -M_E)}};
  return r;
}

bool same(const TransformRecord& a, const TransformRecord& b) {
  if (a.n != b.n || a.principal.size() != b.principal.size() || a.discrete.size() != b.discrete.size()) return false;
  for (std::size_t i = 0; i < a.principal.size(); ++i)
    if (a.principal[i] != b.principal[i]) return false;
  for (std::size_t i = 0; i < a.discrete.size(); ++i)
    if (a.discrete[i] != b.discrete[i]) return false;
  return true;
}

}  // namespace

TEST_SUITE("records") {
  TEST_CASE("17-digit rendering parses back exactly") {
    for (double x : {0.1, 1.0 / 3.0, -2.2250738585072014e-308, 1e300, 5e-324, 123456789.0}) {
      CHECK(parse_double(format_double17(x)) == x);
    }
    CHECK(format_double17(0.1) == "0.10000000000000001");
    CHECK_KIND(parse_double("1.5x"), ErrorKind::InvalidArgument);
    CHECK_KIND(parse_double(""), ErrorKind::InvalidArgument);
  }

  TEST_CASE("transform CSV round trip") {
    const TransformRecord r = sample_record();
    std::stringstream principal, discrete;
    write_principal_csv(principal, r);
    write_discrete_csv(discrete, r);
    CHECK(principal.str().rfind("re_lambda,im_lambda,re_F,im_F\n", 0) == 0);
    CHECK(discrete.str().rfind("k,re_F,im_F\n", 0) == 0);
    CHECK(same(read_transform_csv(principal, &discrete, 4), r));
  }

  TEST_CASE("transform JSON round trip") {
    const TransformRecord r = sample_record();
    CHECK(same(transform_record_from_json(transform_record_to_json(r)), r));
    CHECK_KIND(transform_record_from_json("{\"n\": 1}"), ErrorKind::InvalidArgument);
    CHECK_KIND(transform_record_from_json("not json"), ErrorKind::InvalidArgument);
  }

  TEST_CASE("reconstruction CSV round trip") {
    const std::vector<ReconstructionRow> rows = {{0.25, 0.0, 1.2e-7, 1.2e-7}, {1.0, 1.0, 0.99999, 1.0000000000065512e-05}};
    std::stringstream ss;
    write_reconstruction_csv(ss, rows);
    const auto back = read_reconstruction_csv(ss);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(back[i].t == rows[i].t);
      CHECK(back[i].f == rows[i].f);
      CHECK(back[i].reconstruction == rows[i].reconstruction);
      CHECK(back[i].abs_error == rows[i].abs_error);
    }
  }

  TEST_CASE("malformed tables") {
    std::stringstream wrong_header("t,f\n1,2\n");
    CHECK_KIND(read_reconstruction_csv(wrong_header), ErrorKind::InvalidArgument);
    std::stringstream short_row("t,re_f,re_reconstruction,abs_error\n1,2,3\n");
    CHECK_KIND(read_reconstruction_csv(short_row), ErrorKind::InvalidArgument);
    std::stringstream empty;
    CHECK_KIND(read_transform_csv(empty), ErrorKind::InvalidArgument);
  }

  TEST_CASE("profiles") {
    const RadialProfile f = bump_profile();
    CHECK(f(1.0) == cplx(1.0, 0.0));
    CHECK(f(0.5) == cplx(0.0, 0.0));
    CHECK(f(1.6) == cplx(0.0, 0.0));
    CHECK(f.compact());
    const RadialProfile tilted = bump_profile(contour_bump_shape(2));
    CHECK(tilted(1.2).real() < f(1.2).real());
    CHECK(tilted(0.8).real() > f(0.8).real());
    CHECK(step_profile(1.0)(0.5) == cplx(1.0, 0.0));
    CHECK(step_profile(1.0)(1.0) == cplx(0.0, 0.0));
    CHECK_KIND(step_profile(0.0), ErrorKind::InvalidArgument);
    BumpShape bad;
    bad.half_width = 0.0;
    CHECK_KIND(bump_profile(bad), ErrorKind::InvalidArgument);
  }
}
