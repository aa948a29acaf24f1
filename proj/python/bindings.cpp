#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "harmonia/bkernel.hpp"
#include "harmonia/eigenfn.hpp"
#include "harmonia/fourier.hpp"
#include "harmonia/profile.hpp"
#include "harmonia/records.hpp"
#include "harmonia/resolvent.hpp"
#include "harmonia/suites.hpp"

namespace py = pybind11;
using harmonia::cplx;

namespace {

harmonia::QuadratureSpec make_spec(double rel_tol) {
  harmonia::QuadratureSpec spec;
  spec.rel_tol = rel_tol;
  spec.validate();
  return spec;
}

harmonia::RadialProfile make_profile(const std::string& kind, int n, cplx mu) {
  if (kind == "bump") return harmonia::bump_profile();
  if (kind == "contour_bump") return harmonia::bump_profile(harmonia::contour_bump_shape(n));
  if (kind == "b") return harmonia::b_profile(n, mu);
  if (kind == "step") return harmonia::step_profile(1.0);
  throw harmonia::Error(harmonia::ErrorKind::InvalidArgument, "unknown profile '" + kind + "'");
}

py::dict report_dict(const harmonia::SuiteReport& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["value"] = c.value;
    d["expected"] = c.expected;
    d["residual"] = c.residual;
    d["tolerance"] = c.tolerance;
    d["passed"] = c.passed;
    d["note"] = c.note;
    checks.append(d);
  }
  py::dict out;
  out["suite"] = r.suite;
  out["passed"] = r.passed();
  out["worst_residual"] = r.worst_residual();
  out["seconds"] = r.seconds;
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spherical analysis on SL(2,R) for type-(n,n) functions";

  static py::exception<harmonia::Error> harmonia_error(m, "HarmoniaError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const harmonia::Error& e) {
      py::object err = harmonia_error;
      py::object exc = err(e.what());
      exc.attr("kind") = e.name();
      PyErr_SetObject(harmonia_error.ptr(), exc.ptr());
    }
  });

  const double tol = harmonia::QuadratureSpec{}.rel_tol;

  m.def("gamma", &harmonia::gamma, py::arg("z"));
  m.def("lgamma", &harmonia::lgamma, py::arg("z"));
  m.def("hyp2f1", py::overload_cast<cplx, cplx, cplx, double>(&harmonia::hyp2f1), py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("z"));

  m.def("phi", &harmonia::phi, py::arg("n"), py::arg("lam"), py::arg("t"), "Spherical function phi_lambda(a_t)");
  m.def("phi_cap", &harmonia::phi_cap, py::arg("n"), py::arg("lam"), py::arg("t"),
        "Second solution Phi_lambda(a_t), t > 0");
  m.def("c", &harmonia::c_fn, py::arg("n"), py::arg("lam"), "c-function c(lambda)");
  m.def("psi", &harmonia::psi, py::arg("n"), py::arg("k"), py::arg("t"), "Discrete series function, k in Gamma_n");
  m.def("b", &harmonia::b_kernel, py::arg("n"), py::arg("lam"), py::arg("t"), "b_lambda(a_t)");
  m.def("delta_density", &harmonia::delta_density, py::arg("t"));
  m.def("connection_residual", &harmonia::connection_residual, py::arg("n"), py::arg("lam"), py::arg("t"));
  m.def("gamma_set", [](int n) { return harmonia::index_sets(n).gamma; }, py::arg("n"), "Gamma_n");
  m.def("b_set", [](int n) { return harmonia::index_sets(n).B; }, py::arg("n"), "B (zeros of c(-lambda))");
  m.def("in_B1", &harmonia::in_B1, py::arg("n"), py::arg("lam"));

  m.def(
      "l1_norm_b",
      [](int n, cplx lam, double rel_tol) { return harmonia::l1_norm_b(n, lam, make_spec(rel_tol)); },
      py::arg("n"), py::arg("lam"), py::arg("rel_tol") = tol);
  m.def(
      "principal_transform",
      [](const std::string& profile, int n, cplx lam, cplx mu, double rel_tol) {
        return harmonia::principal_transform(make_profile(profile, n, mu), n, lam, make_spec(rel_tol));
      },
      py::arg("profile"), py::arg("n"), py::arg("lam"), py::arg("mu") = cplx(2.0), py::arg("rel_tol") = tol,
      "Transform of a named profile ('bump', 'contour_bump', 'b', 'step') at lambda");
  m.def(
      "discrete_transform",
      [](const std::string& profile, int n, int k, cplx mu, double rel_tol) {
        return harmonia::discrete_transform(make_profile(profile, n, mu), n, k, make_spec(rel_tol));
      },
      py::arg("profile"), py::arg("n"), py::arg("k"), py::arg("mu") = cplx(2.0), py::arg("rel_tol") = tol);

  m.def(
      "reconstruct",
      [](int n, const std::vector<double>& ts, double height, int nodes, double rel_tol) {
        const auto spec = make_spec(rel_tol);
        const auto f = harmonia::bump_profile(harmonia::contour_bump_shape(n));
        const auto samples = harmonia::sample_contour(f, n, harmonia::ContourSpec::for_type(n, height, nodes), spec);
        harmonia::check_decay(samples);
        py::list rows;
        for (const auto& r : harmonia::reconstruction_table(f, samples, ts))
          rows.append(py::make_tuple(r.t, r.f, r.reconstruction, r.abs_error));
        return rows;
      },
      py::arg("n"), py::arg("ts"), py::arg("height") = 30.0, py::arg("nodes") = 2048, py::arg("rel_tol") = tol,
      "Contour reconstruction of the type-n test bump: rows (t, f, reconstruction, abs_error)");

  m.def("suite_names", &harmonia::suite_names);
  m.def(
      "verify",
      [](const std::string& name, double rel_tol) {
        return report_dict(harmonia::run_named_suite(name, make_spec(rel_tol)));
      },
      py::arg("name"), py::arg("rel_tol") = tol, "Run a named verification suite");

  m.def("format_double17", &harmonia::format_double17, py::arg("x"));
}
