#pragma once

#include <vector>

#include "harmonia/numerics.hpp"
#include "harmonia/profile.hpp"

namespace harmonia {

struct QuotientResidual {
  double algebraic = 0.0;  // rational identity evaluated with exact closed-form transforms
  double numeric = 0.0;    // same identity with quadrature transforms
};

// (1 - (l0^2 - l^2) b_{l0}(z)) b_l(z) = b_{l0}(z) for z in S1 (principal branch).
QuotientResidual quotient_identity_residual(int n, cplx lambda0, cplx lambda, cplx z, const QuadratureSpec& spec);
// Same identity with the discrete transforms at k in Gamma_n.
QuotientResidual quotient_identity_residual_discrete(int n, cplx lambda0, cplx lambda, int k,
                                                     const QuadratureSpec& spec);

// R[g](lambda) = <b_lambda, g> = int_0^inf b_lambda(a_t) g(t) Delta(t) dt,  Re lambda > 1, lambda not in B.
cplx resolvent_pair(const RadialProfile& g, int n, cplx lambda, const QuadratureSpec& spec);

// <T_lambda f, g> / f_H(lambda),  0 < Re lambda < 1.
cplx t_representative_pair(const RadialProfile& g, const RadialProfile& f, int n, cplx lambda,
                           const QuadratureSpec& spec);

// Integration line Re z = abscissa, truncated to |Im z| <= height, discretised by the
// midpoint Riemann sum with `nodes` equal cells on [-height, height].
struct ContourSpec {
  double abscissa = 2.0;
  double height = 30.0;
  int nodes = 2048;
  // Largest admissible |f_H| at the truncation height relative to its peak on the line.
  double decay_threshold = 1e-4;

  static ContourSpec for_type(int n, double height = 30.0, int nodes = 2048);
  void validate() const;
};

// Transform samples on the integration line.  Real-valued profiles are sampled on the
// upper half only (f_H(conj z) = conj f_H(z)); the lower half is implied.
struct ContourSamples {
  ContourSpec contour;
  int n = 0;
  bool folded = true;
  std::vector<double> heights;  // cell midpoints s_j, ascending
  std::vector<cplx> values;     // f_H(abscissa + i s_j)
  double peak = 0.0;            // max |f_H| over the samples
  double edge_ratio = 0.0;      // |f_H| at the truncation height / peak
};

ContourSamples sample_contour(const RadialProfile& f, int n, const ContourSpec& contour, const QuadratureSpec& spec);

// Throws InsufficientDecay when the samples do not decay below the contour threshold.
void check_decay(const ContourSamples& samples);

// Physical-space reconstruction f(a_t) ~ (1/pi) sum_j z_j f_H(z_j) b_{z_j}(a_t) ds,
// i.e. (1/2 pi i) int 2 z f_H(z) b_z dz along the line traversed upwards.
cplx contour_reconstruct(const ContourSamples& samples, double t);
cplx contour_reconstruct(const RadialProfile& f, int n, double t, const ContourSpec& contour,
                         const QuadratureSpec& spec);

// Transform-level Cauchy formula f_H(w) = (1/2 pi i) int 2 z f_H(z) / (z^2 - w^2) dz (upwards).
cplx contour_transform(const ContourSamples& samples, cplx w);

struct ReconstructionRow {
  double t = 0.0;
  double f = 0.0;
  double reconstruction = 0.0;
  double abs_error = 0.0;
};
std::vector<ReconstructionRow> reconstruction_table(const RadialProfile& f, const ContourSamples& samples,
                                                    const std::vector<double>& ts);

}  // namespace harmonia
