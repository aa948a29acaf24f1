#pragma once

#include <cstddef>
#include <vector>

#include "harmonia/numerics.hpp"
#include "harmonia/profile.hpp"

namespace harmonia {

// Parity class of the type index: even n -> sigma+, odd n -> sigma-.
enum class Parity { Even, Odd };

struct TypeIndex {
  int n = 0;
  Parity sigma() const noexcept { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }
};

struct Ball {
  int center = 0;
  double radius = 1.0;
};

struct IndexSets {
  int n = 0;
  std::vector<int> gamma;  // Gamma_n: integers of parity opposite to n strictly between 0 and n
  std::vector<int> B;      // zeros of c(-lambda) in Re lambda > 0: |n|-1, |n|-3, ... > 0
  std::vector<Ball> B1;    // closed unit balls centred at |n| - 2i - 1, i < k0
  int k0 = 1;              // floor(|n|/2) + 1
};

IndexSets index_sets(int n);
bool in_gamma(int n, int k);
bool in_B(int n, cplx lambda);
bool in_B1(int n, cplx lambda);

struct SpectralClass {
  bool in_strip = false;       // |Re lambda| <= 1
  bool right_half = false;     // Re lambda > 0
  bool integer = false;
  bool in_B = false;
  bool in_B1 = false;
};
SpectralClass classify(int n, cplx lambda);

// Z(k) = { m of parity opposite to k : m >= k+1 } for k >= 1, { ... : m <= k-1 } for k <= -1.
struct IntegerSet {
  int k = 1;
  bool contains(long m) const noexcept;
  std::vector<long> first(std::size_t count) const;
};
IntegerSet z_of_k(int k);

// Haar density in Cartan coordinates: 2 sinh 2t.
double delta_density(double t);

// Spherical function phi(a_t) = cosh^n t 2F1((n+1+lambda)/2, (n+1-lambda)/2; 1; -sinh^2 t).
cplx phi(int n, cplx lambda, double t);
cplx phi_derivative(int n, cplx lambda, double t);

// Second solution Phi(a_t) = (2 cosh t)^{-(1+lambda)} 2F1((1+lambda+|n|)/2, (1+lambda-|n|)/2; 1+lambda; cosh^-2 t).
cplx phi_cap(int n, cplx lambda, double t);
cplx phi_cap_derivative(int n, cplx lambda, double t);

// c(lambda) = 2^{1+lambda} Gamma(-lambda) / [Gamma((1-lambda-|n|)/2) Gamma((1-lambda+|n|)/2)],
// with explicit pole bookkeeping at integer lambda.
cplx c_fn(int n, cplx lambda);

// Discrete-series function psi_k = phi at lambda = |k|, k in Gamma_n.
cplx psi(int n, int k, double t);

// Radial Casimir d^2f/dt^2 + 2 coth(2t) df/dt + (n^2 / cosh^2 t) f, normalized so that
// phi and Phi are eigenfunctions with eigenvalue lambda^2 - 1.  Uses the
// profile's derivative handles when both are present, otherwise 5-point central
// differences with step 1e-4 * max(1, t).
cplx casimir_radial(int n, const RadialProfile& f, double t);

// Parts of the Casimir expression, for relative residuals.
struct CasimirTerms {
  cplx second, first, potential;  // f'', 2 coth(2t) f', n^2/cosh^2 t f
  cplx value;                     // their sum
  double scale() const noexcept;  // sum of magnitudes
};
CasimirTerms casimir_terms(int n, const RadialProfile& f, double t);

// [f, g](t) = Delta(t) (f' g - f g')
cplx wronskian_bracket(cplx f, cplx df, cplx g, cplx dg, double t);
cplx wronskian_bracket(const ScalarFn& f, const ScalarFn& df, const ScalarFn& g, const ScalarFn& dg, double t);

// |phi - c(lambda) Phi_lambda - c(-lambda) Phi_{-lambda}| / (1 + |phi|), lambda not an integer.
double connection_residual(int n, cplx lambda, double t);

// Profiles wrapping the eigenfunctions with analytic derivatives.
RadialProfile phi_profile(int n, cplx lambda);
RadialProfile phi_cap_profile(int n, cplx lambda);

}  // namespace harmonia
