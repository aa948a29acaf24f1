// harmonia: evaluation, transforms, verification suites and contour reconstruction.
//
// Exit codes: 0 success, 1 verification failure, 2 domain or usage error.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmonia/bkernel.hpp"
#include "harmonia/eigenfn.hpp"
#include "harmonia/fourier.hpp"
#include "harmonia/profile.hpp"
#include "harmonia/records.hpp"
#include "harmonia/resolvent.hpp"
#include "harmonia/suites.hpp"

namespace {

using harmonia::cplx;
using harmonia::Error;
using harmonia::ErrorKind;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// "1.3+0.4i", "-2", "0.5i", "-i", "3-2.5i".
cplx parse_complex(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
  static const std::regex pure_imag(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pure_imag)) {
    const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (std::regex_match(text, m, re) && (m[1].matched || m[2].matched)) {
    const double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im_part = 0.0;
    if (m[2].matched) {
      im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im_part = -im_part;
    }
    return {re_part, im_part};
  }
  throw Error(ErrorKind::InvalidArgument, "cannot parse complex value '" + text + "'");
}

// "start:stop:step" (inclusive) or a single value.
std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string p;
  while (std::getline(ss, p, ':')) parts.push_back(p);
  if (parts.size() == 1) return {harmonia::parse_double(parts[0])};
  if (parts.size() != 3) throw Error(ErrorKind::InvalidArgument, "range must be start:stop:step, got '" + text + "'");
  const double start = harmonia::parse_double(parts[0]);
  const double stop = harmonia::parse_double(parts[1]);
  const double step = harmonia::parse_double(parts[2]);
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "range step must be positive");
  if (stop < start) throw Error(ErrorKind::InvalidArgument, "range is empty");
  const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  for (long i = 0; i < count; ++i) out.push_back(start + step * static_cast<double>(i));
  return out;
}

harmonia::QuadratureSpec quadrature_from_env(std::optional<double> rel_tol) {
  harmonia::QuadratureSpec spec;
  if (const char* env = std::getenv("HARMONIA_QUAD_TOL")) {
    const double v = harmonia::parse_double(env);
    if (!(v > 0.0)) throw Error(ErrorKind::InvalidArgument, "HARMONIA_QUAD_TOL must be positive");
    spec.rel_tol = v;
  }
  if (rel_tol) spec.rel_tol = *rel_tol;
  spec.validate();
  return spec;
}

// Writes to the named file, or stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::InvalidArgument, "cannot open output file '" + path + "'");
  os << text;
}

std::string d17(double x) { return harmonia::format_double17(x); }

// ---------------------------------------------------------------------------

struct EvalOptions {
  std::string function;
  int n = 0;
  std::string lambda = "0";
  int k = 0;
  std::string t = "1";
  std::string format = "csv";
  std::string output;
};

int run_eval(const EvalOptions& o) {
  const std::vector<double> ts = parse_range(o.t);
  std::ostringstream os;
  nlohmann::ordered_json j;
  j["function"] = o.function;
  j["n"] = o.n;
  if (o.function == "c") {
    const cplx z = parse_complex(o.lambda);
    const cplx v = harmonia::c_fn(o.n, z);
    if (o.format == "json") {
      j["lambda"] = {z.real(), z.imag()};
      j["value"] = {v.real(), v.imag()};
      os << j.dump(2) << '\n';
    } else {
      os << "re_lambda,im_lambda,re_value,im_value\n"
         << d17(z.real()) << ',' << d17(z.imag()) << ',' << d17(v.real()) << ',' << d17(v.imag()) << '\n';
    }
    emit(o.output, os.str());
    return 0;
  }
  std::function<cplx(double)> f;
  if (o.function == "psi") {
    if (!harmonia::in_gamma(o.n, o.k))
      throw Error(ErrorKind::IndexNotInGamma, "k=" + std::to_string(o.k) + " is not in Gamma_" + std::to_string(o.n));
    f = [&](double t) { return harmonia::psi(o.n, o.k, t); };
    j["k"] = o.k;
  } else {
    const cplx z = parse_complex(o.lambda);
    j["lambda"] = {z.real(), z.imag()};
    if (o.function == "phi") {
      f = [&o, z](double t) { return harmonia::phi(o.n, z, t); };
    } else if (o.function == "phi_cap") {
      f = [&o, z](double t) { return harmonia::phi_cap(o.n, z, t); };
    } else if (o.function == "b") {
      harmonia::check_b_domain(o.n, z);
      f = [&o, z](double t) { return harmonia::b_kernel(o.n, z, t); };
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown function '" + o.function + "'");
    }
  }
  // Evaluate everything first so a domain error leaves no partial table behind.
  std::vector<cplx> values;
  for (double t : ts) values.push_back(f(t));
  if (o.format == "json") {
    j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ts.size(); ++i)
      j["rows"].push_back({{"t", ts[i]}, {"re", values[i].real()}, {"im", values[i].imag()}});
    os << j.dump(2) << '\n';
  } else {
    os << "t,re_value,im_value\n";
    for (std::size_t i = 0; i < ts.size(); ++i)
      os << d17(ts[i]) << ',' << d17(values[i].real()) << ',' << d17(values[i].imag()) << '\n';
  }
  emit(o.output, os.str());
  return 0;
}

// ---------------------------------------------------------------------------

struct TransformOptions {
  int n = 0;
  std::string profile = "bump";
  std::string mu = "2";
  std::string grid = "imaginary";
  double xi_max = 40.0;
  double step = 0.25;
  std::string format = "csv";
  std::string output;
  std::string discrete_output;
};

int run_transform(const TransformOptions& o, const harmonia::QuadratureSpec& spec) {
  harmonia::RadialProfile f;
  if (o.profile == "bump") {
    f = harmonia::bump_profile();
  } else if (o.profile == "b") {
    f = harmonia::b_profile(o.n, parse_complex(o.mu));
  } else if (o.profile == "step") {
    f = harmonia::step_profile(1.0);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown profile '" + o.profile + "' (bump | b | step)");
  }
  std::vector<cplx> grid;
  if (o.grid == "imaginary") {
    grid = harmonia::imaginary_axis_grid(o.xi_max, o.step);
  } else if (o.grid == "strip") {
    grid = harmonia::strip_grid(o.xi_max, o.step);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown grid '" + o.grid + "' (imaginary | strip)");
  }
  const harmonia::TransformRecord rec = harmonia::make_transform_record(f, o.n, grid, spec);
  if (o.format == "json") {
    emit(o.output, harmonia::transform_record_to_json(rec) + "\n");
    return 0;
  }
  std::ostringstream principal;
  harmonia::write_principal_csv(principal, rec);
  emit(o.output, principal.str());
  if (!o.discrete_output.empty()) {
    std::ostringstream discrete;
    harmonia::write_discrete_csv(discrete, rec);
    emit(o.discrete_output, discrete.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  std::optional<int> n;
  std::optional<std::string> lambda;
  std::optional<std::string> lambda0;
  std::optional<std::string> z;
  std::vector<int> k;
  std::vector<double> xi;
  std::string format = "json";
  std::string output;
};

harmonia::SuiteReport run_one_suite(const std::string& name, const VerifyOptions& o,
                                    const harmonia::QuadratureSpec& spec) {
  using namespace harmonia;
  const bool custom = o.n || o.lambda || o.lambda0 || o.z || !o.k.empty() || !o.xi.empty();
  if (!custom) return run_named_suite(name, spec);
  const int n = o.n.value_or(0);
  const auto need_lambda = [&](const char* what) {
    if (!o.lambda) throw Error(ErrorKind::InvalidArgument, std::string("--lambda is required for ") + what);
    return parse_complex(*o.lambda);
  };
  std::function<SuiteReport()> body;
  if (name == "wronskian") {
    const cplx l = need_lambda("wronskian");
    body = [=] { return wronskian_suite({{n, l}}); };
  } else if (name == "connection") {
    const cplx l = need_lambda("connection");
    std::vector<SpectralPoint> pts;
    for (double t : {0.2, 0.5, 1.0, 2.0, 4.0}) pts.push_back({n, l, t});
    body = [=] { return connection_suite(pts); };
  } else if (name == "casimir") {
    const cplx l = need_lambda("casimir");
    std::vector<SpectralPoint> pts;
    for (double t : {0.2, 0.5, 1.0, 2.0, 4.0}) pts.push_back({n, l, t});
    body = [=] { return casimir_suite(pts); };
  } else if (name == "moment") {
    std::vector<MomentCase> cases;
    for (double x : o.xi) cases.push_back({n, x});
    if (o.lambda) cases.push_back({n, parse_complex(*o.lambda).real()});
    if (cases.empty()) throw Error(ErrorKind::InvalidArgument, "--xi is required for moment");
    body = [=, &spec] { return moment_suite(cases, spec); };
  } else if (name == "transform-pairs") {
    TransformPairCase c{n, need_lambda("transform-pairs"), o.xi, o.k};
    if (c.xi.empty() && c.k.empty()) c.xi = {0.0, 0.5, 1.0, 2.0, 5.0};
    body = [=, &spec] { return transform_pairs_suite({c}, spec); };
  } else if (name == "strip") {
    const cplx l = need_lambda("strip");
    std::vector<cplx> zs = o.z ? std::vector<cplx>{parse_complex(*o.z)} : default_strip_points();
    body = [=, &spec] { return strip_suite({{n, l}}, zs, spec); };
  } else if (name == "product-formula") {
    ProductGrid g;
    g.cases = {{n, need_lambda("product-formula")}};
    body = [=, &spec] { return product_formula_suite(g, spec); };
  } else if (name == "quotient-identity") {
    QuotientGrid g;
    g.n = n;
    g.discrete_n = n;
    if (o.lambda0) g.lambda0 = g.discrete_lambda0 = {parse_complex(*o.lambda0)};
    if (o.lambda) g.lambda = g.discrete_lambda = {parse_complex(*o.lambda)};
    if (o.z) {
      g.z = {parse_complex(*o.z)};
      g.discrete_lambda0.clear();
    } else if (!o.k.empty()) {
      g.z.clear();
    } else {
      g.discrete_lambda0.clear();
    }
    if (!o.k.empty()) {
      for (int k : o.k)
        if (!in_gamma(n, k)) throw Error(ErrorKind::IndexNotInGamma, "k is not in Gamma_n");
    }
    body = [=, &spec] { return quotient_identity_suite(g, spec); };
  } else if (name == "estimates") {
    EstimateSweep s;
    s.ns = {n};
    if (o.lambda) s.re = parse_complex(*o.lambda).real();
    body = [=] {
      SuiteReport r = estimate_small_suite(s);
      for (auto& c : estimate_large_suite(s).checks) r.checks.push_back(c);
      return r;
    };
  } else if (name == "reconstruction") {
    ReconstructionPlan p;
    p.ns = {n};
    body = [=, &spec] { return reconstruction_suite(p, spec); };
  } else if (name == "discrete-decay") {
    std::vector<DiscreteDecayCase> cases;
    for (int k : o.k) cases.push_back({n, k});
    if (cases.empty())
      for (int k : index_sets(n).gamma) cases.push_back({n, k});
    body = [=] { return discrete_decay_suite(cases); };
  } else if (name == "norm-decay") {
    std::vector<double> xs = o.xi.empty() ? std::vector<double>{5.0, 10.0, 20.0, 40.0} : o.xi;
    body = [=, &spec] { return norm_decay_suite(n, xs, 1e-2, spec); };
  } else {
    return run_named_suite(name, spec);
  }
  SuiteReport r = timed(body);
  r.suite = name;
  return r;
}

int run_verify(const VerifyOptions& o, const harmonia::QuadratureSpec& spec) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = harmonia::suite_names();
  } else {
    const auto known = harmonia::suite_names();
    if (std::find(known.begin(), known.end(), o.suite) == known.end())
      throw Error(ErrorKind::InvalidArgument, "unknown suite '" + o.suite + "'");
    names = {o.suite};
  }
  std::vector<harmonia::SuiteReport> reports;
  bool ok = true;
  for (const auto& name : names) {
    reports.push_back(o.suite == "all" ? harmonia::run_named_suite(name, spec) : run_one_suite(name, o, spec));
    const auto& r = reports.back();
    ok = ok && r.passed();
    std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  checks=" << r.checks.size()
              << " failures=" << r.failures() << " worst_residual=" << r.worst_residual() << " (" << r.seconds
              << " s)\n";
  }
  const std::string text =
      o.format == "csv" ? harmonia::report_to_csv(reports) : harmonia::report_to_json(reports) + "\n";
  emit(o.output, text);
  return ok ? 0 : kExitFailure;
}

// ---------------------------------------------------------------------------

struct ReconstructOptions {
  int n = 0;
  double height = 30.0;
  int nodes = 2048;
  double tol = 1e-3;
  std::string t = "0.25:2.5:0.28125";
  std::optional<double> beta, taper, tilt;
  double threshold = 1e-4;
  std::string format = "csv";
  std::string output;
};

int run_reconstruct(const ReconstructOptions& o, const harmonia::QuadratureSpec& spec) {
  harmonia::BumpShape shape = harmonia::contour_bump_shape(o.n);
  if (o.beta) shape.beta = *o.beta;
  if (o.taper) shape.taper = *o.taper;
  if (o.tilt) shape.tilt = *o.tilt;
  const harmonia::RadialProfile f = harmonia::bump_profile(shape);
  harmonia::ContourSpec contour = harmonia::ContourSpec::for_type(o.n, o.height, o.nodes);
  contour.decay_threshold = o.threshold;
  const harmonia::ContourSamples samples = harmonia::sample_contour(f, o.n, contour, spec);
  harmonia::check_decay(samples);
  const auto rows = harmonia::reconstruction_table(f, samples, parse_range(o.t));
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.abs_error);

  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["height"] = o.height;
    j["nodes"] = o.nodes;
    j["abscissa"] = contour.abscissa;
    j["edge_ratio"] = samples.edge_ratio;
    j["max_error"] = worst;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      j["rows"].push_back(
          {{"t", r.t}, {"re_f", r.f}, {"re_reconstruction", r.reconstruction}, {"abs_error", r.abs_error}});
    os << j.dump(2) << '\n';
  } else {
    harmonia::write_reconstruction_csv(os, rows);
  }
  emit(o.output, os.str());
  std::cerr << "max_error=" << d17(worst) << " tol=" << d17(o.tol) << " n=" << o.n << " T=" << o.height
            << " N=" << o.nodes << " edge_ratio=" << d17(samples.edge_ratio) << '\n';
  return worst <= o.tol ? 0 : kExitFailure;
}

// ---------------------------------------------------------------------------

struct NormsOptions {
  int n = 0;
  std::string xi = "5:40:5";
  std::optional<std::string> lambda;
  std::string format = "csv";
  std::string output;
};

int run_norms(const NormsOptions& o, const harmonia::QuadratureSpec& spec) {
  std::vector<cplx> lambdas;
  if (o.lambda) {
    lambdas.push_back(parse_complex(*o.lambda));
  } else {
    for (double x : parse_range(o.xi)) lambdas.emplace_back(x, 0.0);
  }
  std::vector<double> norms;
  for (cplx l : lambdas) norms.push_back(harmonia::l1_norm_b(o.n, l, spec));
  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      j["rows"].push_back({{"re_lambda", lambdas[i].real()}, {"im_lambda", lambdas[i].imag()}, {"l1_norm", norms[i]}});
    os << j.dump(2) << '\n';
  } else {
    os << "re_lambda,im_lambda,l1_norm\n";
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      os << d17(lambdas[i].real()) << ',' << d17(lambdas[i].imag()) << ',' << d17(norms[i]) << '\n';
  }
  emit(o.output, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonia: spherical analysis on SL(2,R) for type-(n,n) functions"};
  app.require_subcommand(1);
  std::optional<double> rel_tol;
  app.add_option("--rel-tol", rel_tol, "Quadrature relative tolerance (overrides HARMONIA_QUAD_TOL)");

  const std::vector<std::string> formats = {"csv", "json"};

  EvalOptions ev;
  auto* eval = app.add_subcommand("eval", "Evaluate phi, phi_cap, b, psi or c on a t range");
  eval->add_option("function", ev.function, "phi | phi_cap | b | psi | c")
      ->required()
      ->check(CLI::IsMember({"phi", "phi_cap", "b", "psi", "c"}));
  eval->add_option("--n", ev.n, "Type index n");
  eval->add_option("--lambda", ev.lambda, "Spectral parameter, e.g. 1.3+0.4i");
  eval->add_option("--k", ev.k, "Discrete index k (psi)");
  eval->add_option("--t", ev.t, "t value or start:stop:step");
  eval->add_option("--format", ev.format)->check(CLI::IsMember(formats));
  eval->add_option("-o,--output", ev.output, "Output file (default stdout)");

  TransformOptions tr;
  auto* transform = app.add_subcommand("transform", "Principal and discrete transforms on a spectral grid");
  transform->add_option("--n", tr.n, "Type index n");
  transform->add_option("--profile", tr.profile, "bump | b | step")->check(CLI::IsMember({"bump", "b", "step"}));
  transform->add_option("--mu", tr.mu, "Parameter of the b profile");
  transform->add_option("--grid", tr.grid, "imaginary | strip")->check(CLI::IsMember({"imaginary", "strip"}));
  transform->add_option("--xi-max", tr.xi_max, "Largest imaginary part");
  transform->add_option("--step", tr.step, "Grid step");
  transform->add_option("--format", tr.format)->check(CLI::IsMember(formats));
  transform->add_option("-o,--output", tr.output, "Principal table (default stdout)");
  transform->add_option("--discrete-output", tr.discrete_output, "Discrete table (CSV only)");

  VerifyOptions ve;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite (or 'all')");
  verify->add_option("suite", ve.suite, "Suite name or 'all'")->required();
  verify->add_option("--n", ve.n, "Type index n");
  verify->add_option("--lambda", ve.lambda, "Spectral parameter");
  verify->add_option("--lambda0", ve.lambda0, "Quotient identity lambda0");
  verify->add_option("--z", ve.z, "Strip point z");
  verify->add_option("--k", ve.k, "Discrete indices");
  verify->add_option("--xi", ve.xi, "Real spectral samples");
  verify->add_option("--format", ve.format)->check(CLI::IsMember(formats));
  verify->add_option("-o,--output", ve.output, "Report file (default stdout)");

  ReconstructOptions re;
  auto* reconstruct = app.add_subcommand("reconstruct", "Contour reconstruction of a bump from b_z samples");
  reconstruct->add_option("--n", re.n, "Type index n");
  reconstruct->add_option("--height,-T", re.height, "Truncation height T");
  reconstruct->add_option("--nodes,-N", re.nodes, "Number of cells on [-T, T]");
  reconstruct->add_option("--tol", re.tol, "Maximum admissible pointwise error");
  reconstruct->add_option("--t", re.t, "t value or start:stop:step");
  reconstruct->add_option("--beta", re.beta, "Bump Kaiser-Bessel parameter");
  reconstruct->add_option("--taper", re.taper, "Bump taper exponent");
  reconstruct->add_option("--tilt", re.tilt, "Bump exponential tilt");
  reconstruct->add_option("--decay-threshold", re.threshold, "Admissible edge/peak ratio of f_H on the line");
  reconstruct->add_option("--format", re.format)->check(CLI::IsMember(formats));
  reconstruct->add_option("-o,--output", re.output, "Output file (default stdout)");

  NormsOptions no;
  auto* norms = app.add_subcommand("norms", "L1 norms of b_lambda");
  norms->add_option("--n", no.n, "Type index n");
  norms->add_option("--xi", no.xi, "Real lambda range start:stop:step");
  norms->add_option("--lambda", no.lambda, "Single complex lambda");
  norms->add_option("--format", no.format)->check(CLI::IsMember(formats));
  norms->add_option("-o,--output", no.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const harmonia::QuadratureSpec spec = quadrature_from_env(rel_tol);
    if (eval->parsed()) return run_eval(ev);
    if (transform->parsed()) return run_transform(tr, spec);
    if (verify->parsed()) return run_verify(ve, spec);
    if (reconstruct->parsed()) return run_reconstruct(re, spec);
    if (norms->parsed()) return run_norms(no, spec);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "InvalidArgument: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
