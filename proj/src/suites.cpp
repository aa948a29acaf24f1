#include "harmonia/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "harmonia/bkernel.hpp"
#include "harmonia/eigenfn.hpp"
#include "harmonia/fourier.hpp"
#include "harmonia/profile.hpp"
#include "harmonia/records.hpp"
#include "harmonia/resolvent.hpp"

namespace harmonia {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(const char* pattern, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* pattern, ...) {
  char buf[256];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

std::string cfmt(cplx z) { return fmt("%.6g%+.6gi", z.real(), z.imag()); }

CheckResult make_check(std::string name, double value, double expected, double residual, double tolerance,
                       std::string note = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.value = value;
  c.expected = expected;
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = std::isfinite(residual) && residual < tolerance;
  c.note = std::move(note);
  return c;
}

double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// Runs one check body; a library error becomes a failed check carrying the error text.
template <typename Body>
void guarded(SuiteReport& r, const std::string& name, double tolerance, Body body) {
  try {
    r.checks.push_back(body());
  } catch (const Error& e) {
    r.checks.push_back(make_check(name, NAN, NAN, kInf, tolerance, e.what()));
  }
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

double distance_to_integer(cplx z) { return std::hypot(z.real() - std::round(z.real()), z.imag()); }

double distance_to_B(int n, cplx lambda) {
  double d = kInf;
  for (int b : index_sets(n).B) d = std::min(d, std::abs(lambda - static_cast<double>(b)));
  return d;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v;
  for (int i = 0; i < count; ++i) v.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  return v;
}

}  // namespace

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double SuiteReport::worst_residual() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, std::isnan(c.residual) ? kInf : c.residual);
  return w;
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

SuiteReport timed(const std::function<SuiteReport()>& body) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r = body();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Random draws.

std::vector<SpectralCase> random_wronskian_cases(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SpectralCase> out;
  while (out.size() < count) {
    const int n = uniform_int(rng, -5, 5);
    const cplx lambda(uniform(rng, 0.1, 3.0), uniform(rng, -3.0, 3.0));
    if (distance_to_B(n, lambda) < 0.2 || distance_to_integer(lambda) < 0.05) continue;
    out.push_back({n, lambda});
  }
  return out;
}

std::vector<SpectralPoint> random_connection_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SpectralPoint> out;
  while (out.size() < count) {
    const int n = uniform_int(rng, -5, 5);
    const cplx lambda(uniform(rng, -2.0, 2.0), uniform(rng, -2.5, 2.5));
    const double t = uniform(rng, 0.2, 4.0);
    if (distance_to_integer(lambda) < 0.05) continue;
    out.push_back({n, lambda, t});
  }
  return out;
}

std::vector<SpectralPoint> random_casimir_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SpectralPoint> out;
  while (out.size() < count) {
    const int n = uniform_int(rng, -5, 5);
    const cplx lambda(uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0));
    if (std::abs(lambda) > 3.0) continue;
    out.push_back({n, lambda, uniform(rng, 0.2, 4.0)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hypergeometric layer.

SuiteReport hypergeometric_suite(const QuadratureSpec& spec, std::uint64_t seed) {
  SuiteReport r;
  r.suite = "hypergeometric";
  std::mt19937_64 rng(seed);

  guarded(r, "gamma recurrence", 1e-10, [&] {
    double worst = 0.0;
    int drawn = 0;
    while (drawn < 100) {
      const cplx z(uniform(rng, -19.0, 20.0), uniform(rng, -20.0, 20.0));
      if (std::abs(z) > 20.0 || std::abs(z + 1.0) > 20.0 || distance_to_integer(z) < 0.05) continue;
      ++drawn;
      worst = std::max(worst, rel_err(z * gamma(z), gamma(z + 1.0)));
    }
    return make_check("gamma recurrence", worst, 0.0, worst, 1e-10, "100 draws, |z| <= 20");
  });
  guarded(r, "gamma reflection", 1e-10, [&] {
    double worst = 0.0;
    int drawn = 0;
    while (drawn < 100) {
      const cplx z(uniform(rng, -10.0, 10.0), uniform(rng, -5.0, 5.0));
      if (distance_to_integer(z) < 0.05) continue;
      ++drawn;
      const cplx v = gamma(z) * gamma(1.0 - z) * std::sin(kPi * z) / kPi;
      worst = std::max(worst, std::abs(v - 1.0));
    }
    return make_check("gamma reflection", worst, 0.0, worst, 1e-10, "100 draws away from integers");
  });
  guarded(r, "contiguous relation", 1e-9, [&] {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const cplx a(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
      const cplx b(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
      const cplx c(uniform(rng, 0.5, 3.0), uniform(rng, -2.0, 2.0));
      const double z = uniform(rng, 0.0, 0.95);
      const cplx lhs = c * (c + 1.0) * hyp2f1(a, b, c, z);
      const cplx t1 = c * (c - a + 1.0) * hyp2f1(a, b + 1.0, c + 2.0, z);
      const cplx t2 = a * (c - (c - b) * z) * hyp2f1(a + 1.0, b + 1.0, c + 2.0, z);
      const double scale = std::abs(lhs) + std::abs(t1) + std::abs(t2);
      worst = std::max(worst, std::abs(lhs - t1 - t2) / scale);
    }
    return make_check("contiguous relation", worst, 0.0, worst, 1e-9, "50 draws, z in (0, 0.95)");
  });
  guarded(r, "beta-type integral", 1e-7, [&] {
    double worst = 0.0;
    QuadratureSpec tight = spec;
    tight.rel_tol = std::min(spec.rel_tol, 1e-10);
    for (int i = 0; i < 20; ++i) {
      const cplx a(uniform(rng, -1.0, 1.0), uniform(rng, -0.5, 0.5));
      const cplx d(uniform(rng, 1.0, 2.0), uniform(rng, -0.5, 0.5));
      const cplx b = d + cplx(uniform(rng, 1.0, 2.0), uniform(rng, -0.5, 0.5));
      const cplx c = a + d + cplx(uniform(rng, 1.0, 2.0), uniform(rng, -0.5, 0.5));
      const auto f = [&](double x) -> cplx {
        return std::pow(x, d - 1.0) * std::pow(1.0 - x, b - d - 1.0) * hyp2f1(a, b, c, x, 1.0 - x);
      };
      const cplx lhs = integrate_segment(f, 0.0, 1.0, tight).value;
      const cplx rhs = gamma(c) * gamma(d) * gamma(b - d) * gamma(c - a - d) * rgamma(b) * rgamma(c - a) * rgamma(c - d);
      worst = std::max(worst, rel_err(lhs, rhs));
    }
    return make_check("beta-type integral", worst, 0.0, worst, 1e-7, "20 admissible draws");
  });
  guarded(r, "series vs integral path", 1e-8, [&] {
    double worst = 0.0;
    const cplx params[][3] = {{0.5, 1.5, 2.5},
                              {cplx(0.5, 1.0), cplx(0.5, -1.0), 1.5},
                              {cplx(1.2, 0.3), 0.7, cplx(2.1, -0.4)},
                              {cplx(-0.6, 2.0), cplx(1.4, -0.5), 3.0}};
    for (const auto& p : params)
      for (double z : {-0.9, -0.5, 0.3, 0.7, 0.85, 0.95}) {
        const cplx direct = hyp2f1(p[0], p[1], p[2], z);
        const cplx integral = hyp2f1_integral(p[0], p[1], p[2], z, spec);
        worst = std::max(worst, rel_err(direct, integral));
      }
    return make_check("series vs integral path", worst, 0.0, worst, 1e-8, "4 parameter sets x 6 arguments");
  });
  return r;
}

// ---------------------------------------------------------------------------
// Eigenfunction layer.

SuiteReport wronskian_suite(const std::vector<SpectralCase>& cases) {
  SuiteReport r;
  r.suite = "wronskian";
  const double ts[] = {0.5, 1.0, 2.0, 4.0};
  for (const auto& c : cases) {
    const std::string tag = fmt("n=%d lambda=%s", c.n, cfmt(c.lambda).c_str());
    guarded(r, tag + " spread", 1e-10, [&] {
      std::vector<cplx> w;
      for (double t : ts)
        w.push_back(wronskian_bracket(phi(c.n, c.lambda, t), phi_derivative(c.n, c.lambda, t),
                                      phi_cap(c.n, c.lambda, t), phi_cap_derivative(c.n, c.lambda, t), t));
      cplx mean = 0.0;
      for (cplx v : w) mean += v;
      mean /= static_cast<double>(w.size());
      double spread = 0.0;
      for (cplx u : w)
        for (cplx v : w) spread = std::max(spread, std::abs(u - v));
      spread /= std::abs(mean);
      const cplx expected = 2.0 * c.lambda * c_fn(c.n, -c.lambda);
      double worst = 0.0;
      for (cplx v : w) worst = std::max(worst, rel_err(v, expected));
      r.checks.push_back(make_check(tag + " value", std::abs(w[1]), std::abs(expected), worst, 1e-7,
                                    "[phi, Phi] against 2 lambda c(-lambda)"));
      return make_check(tag + " spread", std::abs(mean), std::abs(mean), spread, 1e-10, "t in {0.5, 1, 2, 4}");
    });
  }
  return r;
}

SuiteReport connection_suite(const std::vector<SpectralPoint>& points) {
  SuiteReport r;
  r.suite = "connection";
  double worst = 0.0;
  std::string where;
  for (const auto& p : points) {
    const std::string tag = fmt("n=%d lambda=%s t=%.4g", p.n, cfmt(p.lambda).c_str(), p.t);
    try {
      const double res = connection_residual(p.n, p.lambda, p.t);
      if (!(res <= worst)) {
        worst = res;
        where = tag;
      }
    } catch (const Error& e) {
      r.checks.push_back(make_check(tag, NAN, NAN, kInf, 1e-8, e.what()));
    }
  }
  r.checks.push_back(make_check(fmt("worst of %zu points", points.size()), worst, 0.0, worst, 1e-8, where));
  return r;
}

SuiteReport casimir_suite(const std::vector<SpectralPoint>& points) {
  SuiteReport r;
  r.suite = "casimir";
  double worst = 0.0;
  std::string where;
  for (const auto& p : points) {
    const std::string tag = fmt("n=%d lambda=%s t=%.4g", p.n, cfmt(p.lambda).c_str(), p.t);
    try {
      const CasimirTerms terms = casimir_terms(p.n, phi_profile(p.n, p.lambda), p.t);
      const cplx target = (p.lambda * p.lambda - 1.0) * phi(p.n, p.lambda, p.t);
      const double res = std::abs(terms.value - target) / (terms.scale() + std::abs(target));
      if (!(res <= worst)) {
        worst = res;
        where = tag;
      }
    } catch (const Error& e) {
      r.checks.push_back(make_check(tag, NAN, NAN, kInf, 1e-5, e.what()));
    }
  }
  r.checks.push_back(make_check(fmt("worst of %zu draws", points.size()), worst, 0.0, worst, 1e-5, where));
  return r;
}

// ---------------------------------------------------------------------------
// Transforms of b.

std::vector<TransformPairCase> default_principal_pairs() {
  const std::vector<double> xi = {0.0, 0.5, 1.0, 2.0, 5.0};
  return {{0, 2.0, xi, {}}, {2, 3.5, xi, {}}, {4, 5.0, xi, {}}};
}

std::vector<TransformPairCase> default_discrete_pairs() { return {{4, 5.0, {}, {1, 3}}, {-3, 4.0, {}, {-2}}}; }

SuiteReport transform_pairs_suite(const std::vector<TransformPairCase>& cases, const QuadratureSpec& spec) {
  SuiteReport r;
  r.suite = "transform-pairs";
  for (const auto& c : cases) {
    for (double xi : c.xi) {
      const std::string tag = fmt("n=%d mu=%s xi=%g", c.n, cfmt(c.mu).c_str(), xi);
      guarded(r, tag, 1e-6, [&] {
        const cplx got = principal_transform(b_profile(c.n, c.mu), c.n, cplx(0.0, xi), spec);
        const cplx want = 1.0 / (c.mu * c.mu + xi * xi);
        return make_check(tag, got.real(), want.real(), rel_err(got, want), 1e-6, "1/(mu^2 + xi^2)");
      });
    }
    for (int k : c.k) {
      const std::string tag = fmt("n=%d mu=%s k=%d", c.n, cfmt(c.mu).c_str(), k);
      guarded(r, tag, 1e-6, [&] {
        const cplx got = discrete_transform(b_profile(c.n, c.mu), c.n, k, spec);
        const cplx want = 1.0 / (c.mu * c.mu - static_cast<double>(k * k));
        return make_check(tag, got.real(), want.real(), rel_err(got, want), 1e-6, "1/(mu^2 - k^2)");
      });
    }
  }
  return r;
}

std::vector<cplx> default_strip_points() { return {1.0, -1.0, 0.5, -0.5, cplx(0.3, 0.9)}; }

SuiteReport strip_suite(const std::vector<SpectralCase>& mus, const std::vector<cplx>& zs, const QuadratureSpec& spec) {
  SuiteReport r;
  r.suite = "strip";
  for (const auto& m : mus)
    for (cplx z : zs) {
      const std::string tag = fmt("n=%d mu=%s z=%s", m.n, cfmt(m.lambda).c_str(), cfmt(z).c_str());
      guarded(r, tag, 1e-6, [&] {
        const cplx got = principal_transform(b_profile(m.n, m.lambda), m.n, z, spec);
        const cplx want = 1.0 / (m.lambda * m.lambda - z * z);
        return make_check(tag, std::abs(got), std::abs(want), rel_err(got, want), 1e-6, "1/(mu^2 - z^2)");
      });
    }
  return r;
}

std::vector<MomentCase> default_moment_cases() { return {{0, 3.0}, {1, 4.0}, {2, 4.0}, {3, 6.0}}; }

SuiteReport moment_suite(const std::vector<MomentCase>& cases, const QuadratureSpec& spec) {
  SuiteReport r;
  r.suite = "moment";
  for (const auto& c : cases) {
    const std::string tag = fmt("n=%d xi=%g", c.n, c.xi);
    guarded(r, tag, 1e-6, [&] {
      const cplx got = weighted_moment_b(c.n, c.xi, spec);
      const double m = std::abs(c.n) + 1.0;
      const double want = 1.0 / (c.xi * c.xi - m * m);
      return make_check(tag, got.real(), want, rel_err(got, want), 1e-6, "1/(xi^2 - (|n|+1)^2)");
    });
  }
  return r;
}

SuiteReport norm_decay_suite(int n, const std::vector<double>& xis, double final_bound, const QuadratureSpec& spec) {
  SuiteReport r;
  r.suite = "norm-decay";
  std::vector<double> norms;
  for (double xi : xis) {
    try {
      norms.push_back(l1_norm_b(n, xi, spec));
    } catch (const Error& e) {
      r.checks.push_back(make_check(fmt("n=%d xi=%g", n, xi), NAN, NAN, kInf, 0.0, e.what()));
      return r;
    }
  }
  for (std::size_t i = 1; i < norms.size(); ++i) {
    CheckResult c = make_check(fmt("n=%d ||b||_1 decreases xi=%g -> %g", n, xis[i - 1], xis[i]), norms[i],
                               norms[i - 1], norms[i] - norms[i - 1], 0.0, "strict decrease");
    c.passed = norms[i] < norms[i - 1];
    r.checks.push_back(c);
  }
  if (!norms.empty())
    r.checks.push_back(make_check(fmt("n=%d ||b||_1 at xi=%g", n, xis.back()), norms.back(), final_bound,
                                  norms.back(), final_bound, "final value bound"));
  return r;
}

namespace {

SuiteReport estimate_suite(const EstimateSweep& sweep, bool small) {
  SuiteReport r;
  r.suite = small ? "estimates-small" : "estimates-large";
  for (int n : sweep.ns) {
    std::vector<double> values;
    std::string listing;
    const std::string tag = fmt("n=%d Re lambda=%g %s", n, sweep.re, small ? "C_small" : "C_large");
    try {
      for (double h : sweep.heights)
        for (double sign : {1.0, -1.0}) {
          if (h == 0.0 && sign < 0.0) continue;
          const cplx lambda(sweep.re, sign * h);
          if (in_B1(n, lambda)) continue;
          const EstimateConstants c = b_estimate_check(n, lambda);
          const double v = small ? c.c_small : c.c_large;
          values.push_back(v);
          listing += fmt("%s%.4g@%g", listing.empty() ? "" : " ", v, sign * h);
        }
    } catch (const Error& e) {
      r.checks.push_back(make_check(tag, NAN, NAN, kInf, sweep.tolerance, e.what()));
      continue;
    }
    if (values.empty()) {
      r.checks.push_back(make_check(tag, NAN, NAN, kInf, sweep.tolerance, "every sample lies in B1"));
      continue;
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double spread = (*hi - *lo) / *hi;
    r.checks.push_back(make_check(tag + " spread", *hi, *lo, spread, sweep.tolerance, listing));
  }
  return r;
}

}  // namespace

SuiteReport estimate_small_suite(const EstimateSweep& sweep) { return estimate_suite(sweep, true); }
SuiteReport estimate_large_suite(const EstimateSweep& sweep) { return estimate_suite(sweep, false); }

SuiteReport product_formula_suite(const ProductGrid& grid, const QuadratureSpec& spec) {
  SuiteReport r;
  r.suite = "product-formula";
  for (const auto& c : grid.cases)
    for (double s : grid.s)
      for (double t : grid.t) {
        const std::string tag = fmt("n=%d lambda=%s s=%g t=%g", c.n, cfmt(c.lambda).c_str(), s, t);
        guarded(r, tag, 1e-6, [&] {
          const double res = product_formula_residual(c.n, c.lambda, s, t, spec);
          return make_check(tag, res, 0.0, res, 1e-6, "K-integral vs b(a_max) phi(a_min)");
        });
      }
  return r;
}

SuiteReport t_transform_suite(const TTransformSamples& samples, const QuadratureSpec& spec) {
  SuiteReport r;
  r.suite = "t-transform";
  const RadialProfile f = bump_profile();
  for (int n : samples.principal_ns)
    for (cplx lambda : samples.lambdas)
      for (double xi : samples.xis) {
        const std::string tag = fmt("n=%d lambda=%s xi=%g", n, cfmt(lambda).c_str(), xi);
        guarded(r, tag, 1e-5, [&] {
          const HatCheck h = t_transform_hat_check(f, n, lambda, xi, spec);
          return make_check(tag, std::abs(h.transform), std::abs(h.closed_form), h.residual, 1e-5,
                            "(f_H(lambda) - f_H(i xi)) / (lambda^2 + xi^2)");
        });
      }
  for (cplx lambda : samples.lambdas)
    for (int k : samples.ks) {
      const std::string tag = fmt("n=%d lambda=%s k=%d", samples.discrete_n, cfmt(lambda).c_str(), k);
      guarded(r, tag, 1e-5, [&] {
        const HatCheck h = t_transform_hat_check_discrete(f, samples.discrete_n, lambda, k, spec);
        return make_check(tag, std::abs(h.transform), std::abs(h.closed_form), h.residual, 1e-5,
                          "(f_H(lambda) - f_B(k)) / (lambda^2 - k^2)");
      });
    }
  return r;
}

SuiteReport quotient_identity_suite(const QuotientGrid& g, const QuadratureSpec& spec) {
  SuiteReport r;
  r.suite = "quotient-identity";
  const auto push = [&](const std::string& tag, const QuotientResidual& q, double scale) {
    r.checks.push_back(make_check(tag + " algebraic", q.algebraic, 0.0, q.algebraic, 1e-14 * std::max(1.0, scale),
                                  "rational identity, rounding only"));
    r.checks.push_back(make_check(tag + " numeric", q.numeric, 0.0, q.numeric, 1e-6, "quadrature transforms"));
  };
  for (cplx l0 : g.lambda0)
    for (cplx l : g.lambda)
      for (cplx z : g.z) {
        const std::string tag =
            fmt("n=%d l0=%s l=%s z=%s", g.n, cfmt(l0).c_str(), cfmt(l).c_str(), cfmt(z).c_str());
        try {
          push(tag, quotient_identity_residual(g.n, l0, l, z, spec), std::abs(1.0 / (l0 * l0 - z * z)));
        } catch (const Error& e) {
          r.checks.push_back(make_check(tag, NAN, NAN, kInf, 1e-6, e.what()));
        }
      }
  for (cplx l0 : g.discrete_lambda0)
    for (cplx l : g.discrete_lambda)
      for (int k : index_sets(g.discrete_n).gamma) {
        const std::string tag = fmt("n=%d l0=%s l=%s k=%d", g.discrete_n, cfmt(l0).c_str(), cfmt(l).c_str(), k);
        try {
          const double kk = k;
          push(tag, quotient_identity_residual_discrete(g.discrete_n, l0, l, k, spec),
               std::abs(1.0 / (l0 * l0 - kk * kk)));
        } catch (const Error& e) {
          r.checks.push_back(make_check(tag, NAN, NAN, kInf, 1e-6, e.what()));
        }
      }
  return r;
}

// ---------------------------------------------------------------------------
// Contour reconstruction.

SuiteReport reconstruction_suite(const ReconstructionPlan& plan, const QuadratureSpec& spec) {
  SuiteReport r;
  r.suite = "reconstruction";
  const std::vector<double> ts = linspace(plan.t_lo, plan.t_hi, plan.t_count);
  for (int n : plan.ns) {
    const RadialProfile f = bump_profile(contour_bump_shape(n));
    const auto max_error = [&](const ContourSamples& s) {
      double worst = 0.0;
      for (const auto& row : reconstruction_table(f, s, ts)) worst = std::max(worst, row.abs_error);
      return worst;
    };
    const auto contour_for = [&](int nodes) {
      ContourSpec c = ContourSpec::for_type(n, plan.height, nodes);
      c.decay_threshold = plan.decay_threshold;
      return c;
    };
    try {
      const ContourSamples main = sample_contour(f, n, contour_for(plan.nodes), spec);
      r.checks.push_back(make_check(fmt("n=%d decay at height %g", n, plan.height), main.edge_ratio,
                                    plan.decay_threshold, main.edge_ratio, plan.decay_threshold,
                                    "|f_H| at the truncation height relative to its peak"));
      const cplx direct = principal_transform(f, n, 0.3, spec);
      const cplx cauchy = contour_transform(main, 0.3);
      r.checks.push_back(make_check(fmt("n=%d transform at w=0.3", n), cauchy.real(), direct.real(),
                                    std::abs(cauchy - direct), 1e-4, "Cauchy formula on the line"));
      const double err = max_error(main);
      r.checks.push_back(make_check(fmt("n=%d max error N=%d T=%g", n, plan.nodes, plan.height), err, 0.0, err,
                                    plan.tolerance, fmt("%d points on [%g, %g]", plan.t_count, plan.t_lo, plan.t_hi)));
      double previous = NAN;
      int previous_nodes = 0;
      for (int nodes : plan.ladder) {
        const double e = nodes == plan.nodes ? err : max_error(sample_contour(f, n, contour_for(nodes), spec));
        if (previous_nodes > 0) {
          CheckResult c = make_check(fmt("n=%d error decreases N=%d -> %d", n, previous_nodes, nodes), e, previous,
                                     e - previous, 0.0, "strict decrease at fixed height");
          c.passed = e < previous;
          r.checks.push_back(c);
        }
        previous = e;
        previous_nodes = nodes;
      }
    } catch (const Error& e) {
      r.checks.push_back(make_check(fmt("n=%d", n), NAN, NAN, kInf, plan.tolerance, e.what()));
    }
  }
  return r;
}

SuiteReport discrete_decay_suite(const std::vector<DiscreteDecayCase>& cases, double ratio_bound) {
  SuiteReport r;
  r.suite = "discrete-decay";
  for (const auto& c : cases) {
    const std::string tag = fmt("n=%d k=%d", c.n, c.k);
    guarded(r, tag, ratio_bound, [&] {
      double lo = kInf, hi = 0.0;
      for (double t : linspace(2.0, 10.0, 81)) {
        const double v = std::abs(psi(c.n, c.k, t)) * std::exp((std::abs(c.k) + 1.0) * t);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return make_check(tag + " max/min of |psi| e^{(|k|+1)t}", hi, lo, hi / lo, ratio_bound, "t in [2, 10]");
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Named suites and reports.

std::vector<std::string> suite_names() {
  return {"hypergeometric", "wronskian",   "connection",     "casimir",     "transform-pairs",
          "strip",          "moment",      "norm-decay",     "estimates",   "product-formula",
          "t-transform",    "quotient-identity", "reconstruction", "discrete-decay"};
}

SuiteReport run_named_suite(const std::string& name, const QuadratureSpec& spec) {
  std::function<SuiteReport()> body;
  if (name == "hypergeometric") {
    body = [&] { return hypergeometric_suite(spec); };
  } else if (name == "wronskian") {
    body = [] { return wronskian_suite(random_wronskian_cases()); };
  } else if (name == "connection") {
    body = [] { return connection_suite(random_connection_points()); };
  } else if (name == "casimir") {
    body = [] { return casimir_suite(random_casimir_points()); };
  } else if (name == "transform-pairs") {
    body = [&] {
      auto cases = default_principal_pairs();
      for (auto& c : default_discrete_pairs()) cases.push_back(c);
      return transform_pairs_suite(cases, spec);
    };
  } else if (name == "strip") {
    body = [&] { return strip_suite({{0, 2.0}, {2, 3.5}, {4, 5.0}}, default_strip_points(), spec); };
  } else if (name == "moment") {
    body = [&] { return moment_suite(default_moment_cases(), spec); };
  } else if (name == "norm-decay") {
    body = [&] { return norm_decay_suite(0, {5.0, 10.0, 20.0, 40.0}, 1e-2, spec); };
  } else if (name == "estimates") {
    body = [] {
      SuiteReport r = estimate_small_suite({});
      r.suite = "estimates";
      for (auto& c : estimate_large_suite({}).checks) r.checks.push_back(c);
      return r;
    };
  } else if (name == "product-formula") {
    body = [&] { return product_formula_suite({}, spec); };
  } else if (name == "t-transform") {
    body = [&] { return t_transform_suite({}, spec); };
  } else if (name == "quotient-identity") {
    body = [&] { return quotient_identity_suite({}, spec); };
  } else if (name == "reconstruction") {
    body = [&] { return reconstruction_suite({}, spec); };
  } else if (name == "discrete-decay") {
    body = [] { return discrete_decay_suite({{4, 1}, {4, 3}, {-3, -2}}); };
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  }
  SuiteReport r = timed(body);
  r.suite = name;
  return r;
}

std::string report_to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json j;
  bool all = true;
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["suite"] = r.suite;
    s["passed"] = r.passed();
    s["seconds"] = r.seconds;
    s["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
      s["checks"].push_back({{"name", c.name},
                             {"value", c.value},
                             {"expected", c.expected},
                             {"residual", c.residual},
                             {"tolerance", c.tolerance},
                             {"passed", c.passed},
                             {"note", c.note}});
    all = all && r.passed();
    j["suites"].push_back(s);
  }
  j["passed"] = all;
  return j.dump(2);
}

std::string report_to_csv(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  os << "suite,check,value,expected,residual,tolerance,passed\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      os << r.suite << ",\"" << c.name << "\"," << format_double17(c.value) << ',' << format_double17(c.expected)
         << ',' << format_double17(c.residual) << ',' << format_double17(c.tolerance) << ','
         << (c.passed ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace harmonia
