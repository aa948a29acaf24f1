#include <array>
#include <cmath>
#include <string>

#include "harmonia/numerics.hpp"

namespace harmonia {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

std::string to_string(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", z.real(), z.imag());
  return buf;
}

// log Gamma for Re z >= 0.5.
cplx lgamma_right(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// A branch of log sin(pi z) that stays finite for large |Im z|.
cplx log_sin_pi(cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  const cplx i(0.0, 1.0);
  const cplx q = std::exp(2.0 * kPi * i * z);  // |q| <= 1
  return -i * kPi * z + std::log((q - 1.0) / (2.0 * i));
}

// pi * cot(pi z), stable for large |Im z|.
cplx pi_cot_pi(cplx z) {
  if (z.imag() < 0.0) return std::conj(pi_cot_pi(std::conj(z)));
  const cplx i(0.0, 1.0);
  const cplx q = std::exp(2.0 * kPi * i * z);
  return kPi * i * (q + 1.0) / (q - 1.0);
}

}  // namespace

bool near_integer(cplx z, long& m, double tol) noexcept {
  const double r = std::round(z.real());
  if (std::abs(z - cplx(r, 0.0)) <= tol) {
    m = static_cast<long>(r);
    return true;
  }
  return false;
}

bool is_nonpositive_integer(cplx z, double tol) noexcept {
  long m = 0;
  return near_integer(z, m, tol) && m <= 0;
}

void require_finite(cplx z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " is not finite");
}

cplx lgamma(cplx z) {
  require_finite(z, "gamma argument");
  if (is_nonpositive_integer(z))
    throw Error(ErrorKind::PoleAtNonpositiveInteger, "Gamma pole at " + to_string(z));
  if (z.real() >= 0.5) return lgamma_right(z);
  // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
  return std::log(kPi) - log_sin_pi(z) - lgamma_right(1.0 - z);
}

cplx gamma(cplx z) {
  const cplx lg = lgamma(z);
  cplx g = std::exp(lg);
  if (z.imag() == 0.0) g.imag(0.0);
  return g;
}

cplx rgamma(cplx z) {
  require_finite(z, "gamma argument");
  if (is_nonpositive_integer(z)) return 0.0;
  cplx g = std::exp(-lgamma(z));
  if (z.imag() == 0.0) g.imag(0.0);
  return g;
}

cplx digamma(cplx z) {
  require_finite(z, "digamma argument");
  if (is_nonpositive_integer(z))
    throw Error(ErrorKind::PoleAtNonpositiveInteger, "digamma pole at " + to_string(z));
  if (z.real() < 0.5) return digamma(1.0 - z) - pi_cot_pi(z);
  cplx acc = 0.0;
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const cplx w = 1.0 / (z * z);
  // Asymptotic series with Bernoulli numbers B_2 .. B_14.
  const cplx tail =
      w * (1.0 / 12 -
           w * (1.0 / 120 -
                w * (1.0 / 252 -
                     w * (1.0 / 240 - w * (1.0 / 132 - w * (691.0 / 32760 - w * (1.0 / 12)))))));
  return acc + std::log(z) - 0.5 / z - tail;
}

}  // namespace harmonia
