#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "harmonia/numerics.hpp"

namespace harmonia {

// One numerical proposition: `value` compared with `expected`, `residual` against `tolerance`.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  double worst_residual() const;
  // Number of failing checks.
  std::size_t failures() const;
};

struct SpectralCase {
  int n = 0;
  cplx lambda;
};
struct SpectralPoint {
  int n = 0;
  cplx lambda;
  double t = 1.0;
};

// Seeded draws shared by the CLI and the acceptance tests.
constexpr std::uint64_t kSuiteSeed = 20240611;
std::vector<SpectralCase> random_wronskian_cases(std::size_t count = 10, std::uint64_t seed = kSuiteSeed);
std::vector<SpectralPoint> random_connection_points(std::size_t count = 50, std::uint64_t seed = kSuiteSeed + 1);
std::vector<SpectralPoint> random_casimir_points(std::size_t count = 30, std::uint64_t seed = kSuiteSeed + 2);

// Gamma recurrence/reflection, contiguous relation, beta-type integral, dual hyp2f1 paths.
SuiteReport hypergeometric_suite(const QuadratureSpec& spec, std::uint64_t seed = kSuiteSeed + 3);

// [phi, Phi](t) constant over t in {0.5, 1, 2, 4} and equal to 2 lambda c(-lambda).
SuiteReport wronskian_suite(const std::vector<SpectralCase>& cases);
SuiteReport connection_suite(const std::vector<SpectralPoint>& points);
SuiteReport casimir_suite(const std::vector<SpectralPoint>& points);

struct TransformPairCase {
  int n = 0;
  cplx mu;
  std::vector<double> xi;  // principal samples at i xi
  std::vector<int> k;      // discrete samples
};
std::vector<TransformPairCase> default_principal_pairs();
std::vector<TransformPairCase> default_discrete_pairs();
// transform of b_mu at i xi against 1/(mu^2 + xi^2) and at k against 1/(mu^2 - k^2), relative.
SuiteReport transform_pairs_suite(const std::vector<TransformPairCase>& cases, const QuadratureSpec& spec);

// transform of b_mu at z in the strip against 1/(mu^2 - z^2).
SuiteReport strip_suite(const std::vector<SpectralCase>& mus, const std::vector<cplx>& zs, const QuadratureSpec& spec);
std::vector<cplx> default_strip_points();

struct MomentCase {
  int n = 0;
  double xi = 3.0;
};
std::vector<MomentCase> default_moment_cases();
SuiteReport moment_suite(const std::vector<MomentCase>& cases, const QuadratureSpec& spec);

// ||b_xi||_1 strictly decreasing along xi and below `final_bound` at the last xi.
SuiteReport norm_decay_suite(int n, const std::vector<double>& xis, double final_bound, const QuadratureSpec& spec);

// Spread (max - min) / max of the two estimate constants along Re lambda = re, lambda outside B1.
struct EstimateSweep {
  std::vector<int> ns = {0, 3};
  double re = 2.0;
  std::vector<double> heights = {0.0, 1.0, 2.0, 5.0, 10.0, 15.0, 20.0};
  double tolerance = 0.2;
};
SuiteReport estimate_small_suite(const EstimateSweep& sweep);
SuiteReport estimate_large_suite(const EstimateSweep& sweep);

struct ProductGrid {
  std::vector<SpectralCase> cases = {{0, 2.0}, {2, 1.5}, {4, 5.0}};
  std::vector<double> s = {0.3, 1.1, 2.0};
  std::vector<double> t = {0.6, 1.5, 2.4};
};
SuiteReport product_formula_suite(const ProductGrid& grid, const QuadratureSpec& spec);

// Transform identities for T_lambda f with the default bump f.
struct TTransformSamples {
  std::vector<int> principal_ns = {0, 2};
  std::vector<cplx> lambdas = {0.5, cplx(0.3, 0.7)};
  std::vector<double> xis = {0.0, 1.0, 3.0};
  int discrete_n = 4;
  std::vector<int> ks = {1, 3};
};
SuiteReport t_transform_suite(const TTransformSamples& samples, const QuadratureSpec& spec);

struct QuotientGrid {
  int n = 0;
  std::vector<cplx> lambda0 = {3.0, 3.5, cplx(4.0, 1.0), 5.0};
  std::vector<cplx> lambda = {1.5, 2.0, cplx(2.5, 0.5), 3.2};
  std::vector<cplx> z = {0.0, 0.5, cplx(0.3, 0.9), cplx(0.0, 2.0)};
  // Discrete branch.
  int discrete_n = 4;
  std::vector<cplx> discrete_lambda0 = {5.5, 6.0};
  std::vector<cplx> discrete_lambda = {2.0, cplx(2.5, 0.5)};
};
SuiteReport quotient_identity_suite(const QuotientGrid& grid, const QuadratureSpec& spec);

struct ReconstructionPlan {
  std::vector<int> ns = {0, 1, 2, 3};
  double height = 30.0;
  int nodes = 2048;
  std::vector<int> ladder = {256, 512, 1024, 2048};  // monotonicity ladder (fixed height)
  double tolerance = 1e-3;
  double t_lo = 0.25, t_hi = 2.5;
  int t_count = 9;
  double decay_threshold = 1e-4;
};
// Max pointwise error (and its decrease along the ladder when `ladder` is non-empty).
SuiteReport reconstruction_suite(const ReconstructionPlan& plan, const QuadratureSpec& spec);

struct DiscreteDecayCase {
  int n = 4;
  int k = 1;
};
SuiteReport discrete_decay_suite(const std::vector<DiscreteDecayCase>& cases, double ratio_bound = 10.0);

// Named suites for the CLI: wronskian, connection, casimir, product-formula, transform-pairs,
// strip, quotient-identity, moment, norm-decay, estimates, t-transform, reconstruction,
// discrete-decay, hypergeometric.
std::vector<std::string> suite_names();
SuiteReport run_named_suite(const std::string& name, const QuadratureSpec& spec);

// Times a suite body and stores the elapsed wall-clock seconds.
SuiteReport timed(const std::function<SuiteReport()>& body);

std::string report_to_json(const std::vector<SuiteReport>& reports);
std::string report_to_csv(const std::vector<SuiteReport>& reports);

}  // namespace harmonia
