#include "harmonia/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "harmonia/bkernel.hpp"
#include "harmonia/eigenfn.hpp"
#include "harmonia/fourier.hpp"

namespace harmonia {

namespace {

void check_pole_free(cplx lambda, cplx z) {
  const cplx d = lambda * lambda - z * z;
  if (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(lambda * lambda)))
    throw Error(ErrorKind::PoleCollision, "z^2 coincides with lambda^2");
}

void check_integrable_kernel(int n, cplx lambda, const char* which) {
  require_finite(lambda, which);
  if (!(lambda.real() > 1.0) || in_B(n, lambda)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s needs Re > 1 and must avoid B (got %.6g%+.6gi)", which, lambda.real(),
                  lambda.imag());
    throw Error(ErrorKind::ExcludedSpectralParam, buf);
  }
}

double rational_residual(cplx l0, cplx l, cplx bl0, cplx bl) {
  return std::abs((1.0 - (l0 * l0 - l * l) * bl0) * bl - bl0);
}

bool real_valued(const RadialProfile& f) {
  const double hi = f.compact() ? f.support : 20.0;
  for (int j = 0; j <= 256; ++j)
    if (f(hi * j / 256.0).imag() != 0.0) return false;
  return true;
}

}  // namespace

QuotientResidual quotient_identity_residual(int n, cplx lambda0, cplx lambda, cplx z, const QuadratureSpec& spec) {
  require_finite(z, "z");
  if (!(lambda0.real() > std::abs(n) + 1.0))
    throw Error(ErrorKind::ExcludedSpectralParam, "lambda0 needs Re lambda0 > |n| + 1");
  check_integrable_kernel(n, lambda0, "lambda0");
  check_integrable_kernel(n, lambda, "lambda");
  if (std::abs(z.real()) > 1.0) throw Error(ErrorKind::ExcludedSpectralParam, "z must lie in the strip |Re z| <= 1");
  check_pole_free(lambda0, z);
  check_pole_free(lambda, z);
  QuotientResidual r;
  r.algebraic = rational_residual(lambda0, lambda, 1.0 / (lambda0 * lambda0 - z * z), 1.0 / (lambda * lambda - z * z));
  const cplx b0 = principal_transform(b_profile(n, lambda0), n, z, spec);
  const cplx b1 = principal_transform(b_profile(n, lambda), n, z, spec);
  r.numeric = rational_residual(lambda0, lambda, b0, b1);
  return r;
}

QuotientResidual quotient_identity_residual_discrete(int n, cplx lambda0, cplx lambda, int k,
                                                     const QuadratureSpec& spec) {
  if (!(lambda0.real() > std::abs(n) + 1.0))
    throw Error(ErrorKind::ExcludedSpectralParam, "lambda0 needs Re lambda0 > |n| + 1");
  check_integrable_kernel(n, lambda0, "lambda0");
  check_integrable_kernel(n, lambda, "lambda");
  if (!in_gamma(n, k)) throw Error(ErrorKind::IndexNotInGamma, "k is not in Gamma_n");
  const cplx kk = static_cast<double>(k);
  check_pole_free(lambda0, kk);
  check_pole_free(lambda, kk);
  QuotientResidual r;
  r.algebraic =
      rational_residual(lambda0, lambda, 1.0 / (lambda0 * lambda0 - kk * kk), 1.0 / (lambda * lambda - kk * kk));
  const cplx b0 = discrete_transform(b_profile(n, lambda0), n, k, spec);
  const cplx b1 = discrete_transform(b_profile(n, lambda), n, k, spec);
  r.numeric = rational_residual(lambda0, lambda, b0, b1);
  return r;
}

cplx resolvent_pair(const RadialProfile& g, int n, cplx lambda, const QuadratureSpec& spec) {
  check_integrable_kernel(n, lambda, "lambda");
  const RadialProfile b = b_profile(n, lambda);
  const auto h = [&](double t) -> cplx { return b.value(t) * g(t) * delta_density(t); };
  return integrate_radial(h, 0.0, g.support, g.breakpoints, lambda.real() - 1.0 + std::max(0.0, g.decay_rate),
                          OriginBehaviour::LogSingular, spec)
      .value;
}

cplx t_representative_pair(const RadialProfile& g, const RadialProfile& f, int n, cplx lambda,
                           const QuadratureSpec& spec) {
  if (!(lambda.real() > 0.0 && lambda.real() < 1.0))
    throw Error(ErrorKind::StripViolation, "the T_lambda representative needs 0 < Re lambda < 1");
  const cplx fhat = principal_transform(f, n, lambda, spec);
  if (std::abs(fhat) < 1e-12) throw Error(ErrorKind::TransformZeroDivision, "f_H(lambda) vanishes");
  const RadialProfile tf = t_transform_profile(f, n, lambda, spec);
  const auto h = [&](double t) -> cplx { return tf(t) * g(t) * delta_density(t); };
  std::vector<double> pts = f.breakpoints;
  pts.insert(pts.end(), g.breakpoints.begin(), g.breakpoints.end());
  if (g.compact() && g.support < f.support) pts.push_back(g.support);
  const double end = std::min(f.support, g.support);
  const cplx pairing =
      integrate_radial(h, 0.0, end, pts, f.decay_rate - 2.0, OriginBehaviour::LogSingular, spec).value;
  return pairing / fhat;
}

ContourSpec ContourSpec::for_type(int n, double height, int nodes) {
  ContourSpec c;
  c.abscissa = std::abs(n) + 2.0;
  c.height = height;
  c.nodes = nodes;
  return c;
}

void ContourSpec::validate() const {
  if (!(abscissa > 1.0) || !(height > 0.0) || nodes < 16 || nodes % 2 != 0 || !(decay_threshold > 0.0))
    throw Error(ErrorKind::InvalidArgument, "contour needs abscissa > 1, height > 0, an even node count >= 16");
}

ContourSamples sample_contour(const RadialProfile& f, int n, const ContourSpec& contour, const QuadratureSpec& spec) {
  contour.validate();
  if (!f.compact()) throw Error(ErrorKind::InvalidArgument, "contour reconstruction needs a compactly supported profile");
  ContourSamples s;
  s.contour = contour;
  s.n = n;
  s.folded = real_valued(f);
  const int N = contour.nodes;
  const int first = s.folded ? N / 2 : 0;
  for (int j = first; j < N; ++j) {
    const double h = -contour.height + 2.0 * contour.height * (j + 0.5) / N;
    s.heights.push_back(h);
    s.values.push_back(principal_transform(f, n, cplx(contour.abscissa, h), spec));
  }
  for (cplx v : s.values) s.peak = std::max(s.peak, std::abs(v));
  const double edge = s.folded ? std::abs(s.values.back()) : std::max(std::abs(s.values.back()), std::abs(s.values.front()));
  s.edge_ratio = s.peak > 0.0 ? edge / s.peak : 0.0;
  return s;
}

void check_decay(const ContourSamples& s) {
  if (s.edge_ratio > s.contour.decay_threshold) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "|f_H| at height %.4g is %.3g of its peak (threshold %.3g)", s.contour.height,
                  s.edge_ratio, s.contour.decay_threshold);
    throw Error(ErrorKind::InsufficientDecay, buf);
  }
}

namespace {

// Midpoint sum over the sampled heights in ascending order; when folded, `term`
// already includes the conjugate contribution.
template <typename Term>
cplx line_sum(const ContourSamples& s, Term term) {
  const double ds = 2.0 * s.contour.height / s.contour.nodes;
  cplx sum = 0.0;
  for (std::size_t j = 0; j < s.heights.size(); ++j) sum += term(cplx(s.contour.abscissa, s.heights[j]), s.values[j]);
  return sum * ds;
}

}  // namespace

cplx contour_reconstruct(const ContourSamples& s, double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::SingularAtOrigin, "reconstruction is evaluated for t > 0");
  const int n = s.n;
  // z b_z(t) = Phi_z(t) / (2 c(-z)); for real profiles the lower half is the conjugate.
  const auto term = [&](cplx z, cplx fz) -> cplx {
    const cplx v = z * fz * b_kernel(n, z, t);
    return s.folded ? cplx(2.0 * v.real(), 0.0) : v;
  };
  return line_sum(s, term) / kPi;
}

cplx contour_reconstruct(const RadialProfile& f, int n, double t, const ContourSpec& contour,
                         const QuadratureSpec& spec) {
  const ContourSamples s = sample_contour(f, n, contour, spec);
  check_decay(s);
  return contour_reconstruct(s, t);
}

cplx contour_transform(const ContourSamples& s, cplx w) {
  const auto term = [&](cplx z, cplx fz) -> cplx {
    const cplx v = z * fz / (z * z - w * w);
    if (!s.folded) return v;
    const cplx wc = std::conj(w);
    return v + std::conj(z * fz / (z * z - wc * wc));
  };
  return line_sum(s, term) / kPi;
}

std::vector<ReconstructionRow> reconstruction_table(const RadialProfile& f, const ContourSamples& samples,
                                                    const std::vector<double>& ts) {
  std::vector<ReconstructionRow> rows;
  rows.reserve(ts.size());
  for (double t : ts) {
    const cplx rec = contour_reconstruct(samples, t);
    const cplx exact = f(t);
    rows.push_back({t, exact.real(), rec.real(), std::abs(rec - exact)});
  }
  return rows;
}

}  // namespace harmonia
