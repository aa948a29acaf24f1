#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "harmonia/numerics.hpp"

namespace harmonia {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kMaxTerms = 100000;
// Above this ratio of largest term to result, the alternative path is tried.
constexpr double kCondSwitch = 1e4;
// Series / transformation switchover.
constexpr double kSeriesRadius = 0.8;
// c - a - b within this distance of an integer (but not on it) is handled by
// averaging over a small circle in c, where the transformation is well conditioned.
constexpr double kNearDegenerate = 0.05;
constexpr int kCirclePoints = 32;

struct Eval {
  cplx value;
  double cond;  // max |partial term| / |value|; 1 means no cancellation
};

double cond_of(double largest, cplx value) {
  const double v = std::abs(value);
  if (v == 0.0) return largest == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return std::max(1.0, largest / v);
}

// Degree of the polynomial when a or b is a nonpositive integer.
bool terminating_degree(cplx a, cplx b, long& degree) {
  long ma = 0, mb = 0;
  const bool ta = near_integer(a, ma) && ma <= 0;
  const bool tb = near_integer(b, mb) && mb <= 0;
  if (!ta && !tb) return false;
  degree = std::min(ta ? -ma : std::numeric_limits<long>::max(), tb ? -mb : std::numeric_limits<long>::max());
  return true;
}

bool is_terminating(cplx a) {
  long m = 0;
  return near_integer(a, m) && m <= 0;
}

cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  for (cplx d : den)
    if (is_nonpositive_integer(d)) return 0.0;
  cplx lg = 0.0;
  for (cplx x : num) lg += lgamma(x);
  for (cplx d : den) lg -= lgamma(d);
  return std::exp(lg);
}

// Gauss series; exact finite sum when a or b is a nonpositive integer.
Eval series(cplx a, cplx b, cplx c, double z) {
  long degree = 0;
  const bool term = terminating_degree(a, b, degree);
  if (term) {
    long m = 0;
    if (near_integer(a, m) && m <= 0 && -m == degree) a = static_cast<double>(m);
    else if (near_integer(b, m) && m <= 0 && -m == degree) b = static_cast<double>(m);
  } else if (!(std::abs(z) < 1.0)) {
    throw Error(ErrorKind::SeriesNonConvergence, "power series outside the unit disc");
  }
  cplx sum = 1.0, t = 1.0;
  double largest = 1.0;
  for (long k = 0;; ++k) {
    if (term && k == degree) break;
    if (k >= kMaxTerms) throw Error(ErrorKind::SeriesNonConvergence, "hypergeometric series budget exhausted");
    const double kk = static_cast<double>(k);
    const cplx ratio = (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    t *= ratio;
    sum += t;
    largest = std::max(largest, std::abs(t));
    if (!term) {
      const double r = std::abs(ratio);
      if (r < 1.0 && std::abs(t) * r / (1.0 - r) <= 0.5 * kEps * std::abs(sum)) break;
      if (t == 0.0) break;
    }
  }
  return {sum, cond_of(largest, sum)};
}

// A&S 15.3.6 for non-integer s = c - a - b.
Eval one_minus_generic(cplx a, cplx b, cplx c, double zc) {
  const cplx s = c - a - b;
  cplx t1 = 0.0, t2 = 0.0;
  double w1 = 0.0, w2 = 0.0;
  const cplx g1 = gamma_ratio({c, s}, {c - a, c - b});
  if (g1 != 0.0) {
    const Eval e = series(a, b, 1.0 - s, zc);
    t1 = g1 * e.value;
    w1 = std::abs(t1) * e.cond;
  }
  const cplx g2 = gamma_ratio({c, -s}, {a, b});
  if (g2 != 0.0) {
    const Eval e = series(c - a, c - b, 1.0 + s, zc);
    t2 = std::exp(s * std::log(zc)) * g2 * e.value;
    w2 = std::abs(t2) * e.cond;
  }
  const cplx v = t1 + t2;
  return {v, cond_of(w1 + w2, v)};
}

// A&S 15.3.10 / 15.3.11: c = a + b + m with integer m >= 0, a and b not
// nonpositive integers.
Eval one_minus_log(cplx a, cplx b, long m, double zc) {
  const cplx c = a + b + static_cast<double>(m);
  cplx part1 = 0.0;
  double w1 = 0.0;
  if (m >= 1) {
    const cplx pref = gamma_ratio({cplx(static_cast<double>(m)), c}, {a + static_cast<double>(m), b + static_cast<double>(m)});
    if (pref != 0.0) {
      cplx sum = 1.0, t = 1.0;
      double largest = 1.0;
      for (long k = 0; k + 1 < m; ++k) {
        const double kk = static_cast<double>(k);
        t *= (a + kk) * (b + kk) / ((kk + 1.0) * (1.0 - static_cast<double>(m) + kk)) * zc;
        sum += t;
        largest = std::max(largest, std::abs(t));
      }
      part1 = pref * sum;
      w1 = std::abs(pref) * largest;
    }
  }

  const double mm = static_cast<double>(m);
  const cplx pref2 = -std::pow(-zc, static_cast<int>(m)) * gamma(c) * rgamma(a) * rgamma(b);
  cplx part2 = 0.0;
  double w2 = 0.0;
  if (pref2 != 0.0) {
    const double logzc = std::log(zc);
    double mfact = 1.0;
    for (long j = 2; j <= m; ++j) mfact *= static_cast<double>(j);
    cplx u = 1.0 / mfact;
    double hk = 0.0, hkm = 0.0;  // harmonic numbers H_k and H_{k+m}
    for (long j = 1; j <= m; ++j) hkm += 1.0 / static_cast<double>(j);
    cplx psi_a = digamma(a + mm), psi_b = digamma(b + mm);
    cplx sum = 0.0;
    double largest = 0.0;
    for (long k = 0;; ++k) {
      if (k >= kMaxTerms) throw Error(ErrorKind::SeriesNonConvergence, "logarithmic series budget exhausted");
      const cplx bracket = logzc + 2.0 * kEulerGamma - hk - hkm + psi_a + psi_b;
      const cplx term = u * bracket;
      sum += term;
      largest = std::max(largest, std::abs(term));
      const double kk = static_cast<double>(k);
      const cplx ratio = (a + mm + kk) * (b + mm + kk) / ((kk + 1.0) * (kk + mm + 1.0)) * zc;
      psi_a += 1.0 / (a + mm + kk);
      psi_b += 1.0 / (b + mm + kk);
      hk += 1.0 / (kk + 1.0);
      hkm += 1.0 / (kk + mm + 1.0);
      u *= ratio;
      const double r = std::abs(ratio);
      if (k > 2 && r < 1.0 && std::abs(term) * r / (1.0 - r) <= 0.25 * kEps * std::abs(sum)) break;
      if (u == 0.0) break;
    }
    part2 = pref2 * sum;
    w2 = std::abs(pref2) * largest;
  }
  const cplx v = part1 + part2;
  return {v, cond_of(w1 + w2, v)};
}

double distance_to_poles(cplx c) {
  if (c.real() > 0.0) return std::abs(c);
  const double k = std::round(-c.real());
  return std::abs(c + k);
}

Eval one_minus(cplx a, cplx b, cplx c, double z, double zc);

// Mean value of F over a circle in c: F is analytic in c away from c = 0, -1, ...,
// and every node is far from the integer-s degeneracy.
Eval one_minus_circle(cplx a, cplx b, cplx c, double zc, double delta) {
  const double r = std::min(0.25, distance_to_poles(c) / 4.0);
  if (delta >= 0.5 * r) return one_minus_generic(a, b, c, zc);
  cplx sum = 0.0;
  double weight = 0.0;
  for (int j = 0; j < kCirclePoints; ++j) {
    const double ang = 2.0 * kPi * (j + 0.5) / kCirclePoints;
    const Eval e = one_minus_generic(a, b, c + r * std::polar(1.0, ang), zc);
    sum += e.value;
    weight = std::max(weight, std::abs(e.value) * e.cond);
  }
  const cplx v = sum / static_cast<double>(kCirclePoints);
  return {v, cond_of(weight, v)};
}

Eval one_minus(cplx a, cplx b, cplx c, double /*z*/, double zc) {
  const cplx s = c - a - b;
  long m = 0;
  if (near_integer(s, m)) {
    if (m >= 0) return one_minus_log(a, b, m, zc);
    // Euler: F(a,b;c;z) = (1-z)^{c-a-b} F(c-a, c-b; c; z), now with c-a-b = -m > 0.
    const cplx ap = c - a, bp = c - b;
    const double scale = std::pow(zc, static_cast<double>(m));
    if (is_terminating(ap) || is_terminating(bp)) {
      const Eval e = series(ap, bp, c, 1.0 - zc);
      return {scale * e.value, e.cond};
    }
    const Eval e = one_minus_log(ap, bp, -m, zc);
    return {scale * e.value, e.cond};
  }
  const double delta = std::abs(s - std::round(s.real()));
  if (delta < kNearDegenerate) return one_minus_circle(a, b, c, zc, delta);
  return one_minus_generic(a, b, c, zc);
}

Eval better(const Eval& x, const Eval& y) { return (y.cond < x.cond) ? y : x; }

// 0 < z < 1.
Eval eval_unit(cplx a, cplx b, cplx c, double z, double zc) {
  long degree = 0;
  if (terminating_degree(a, b, degree)) return series(a, b, c, z);
  if (z <= kSeriesRadius) {
    const Eval e = series(a, b, c, z);
    if (e.cond <= kCondSwitch || z < 0.3) return e;
    return better(e, one_minus(a, b, c, z, zc));
  }
  const Eval e = one_minus(a, b, c, z, zc);
  if (e.cond <= kCondSwitch || z > 0.995) return e;
  return better(e, series(a, b, c, z));
}

// z < 0 via Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)).
Eval pfaff(cplx a, cplx b, cplx c, double z, double zc) {
  const double w = -z / zc;
  const double wc = 1.0 / zc;
  const double logzc = std::log(zc);
  const Eval e1 = eval_unit(a, c - b, c, w, wc);
  const Eval r1{std::exp(-a * logzc) * e1.value, e1.cond};
  if (r1.cond <= kCondSwitch) return r1;
  const Eval e2 = eval_unit(c - a, b, c, w, wc);
  return better(r1, Eval{std::exp(-b * logzc) * e2.value, e2.cond});
}

Eval evaluate(cplx a, cplx b, cplx c, double z, double zc) {
  if (z == 0.0) return {1.0, 1.0};
  long degree = 0;
  if (terminating_degree(a, b, degree)) {
    if (z >= -1.0) return series(a, b, c, z);
    // Keep the terminating parameter through the Pfaff transformation.
    const double w = -z / zc;
    const double logzc = std::log(zc);
    if (is_terminating(a) && (!is_terminating(b) || -std::round(a.real()) == static_cast<double>(degree))) {
      const Eval e = series(a, c - b, c, w);
      return {std::exp(-a * logzc) * e.value, e.cond};
    }
    const Eval e = series(c - a, b, c, w);
    return {std::exp(-b * logzc) * e.value, e.cond};
  }
  if (z < 0.0) {
    if (z >= -kSeriesRadius) {
      const Eval e = series(a, b, c, z);
      if (e.cond <= kCondSwitch) return e;
      return better(e, pfaff(a, b, c, z, zc));
    }
    return pfaff(a, b, c, z, zc);
  }
  return eval_unit(a, b, c, z, zc);
}

// `z_may_round_to_one`: the caller supplies 1 - z separately, so z == 1 in
// floating point is only a rounding of a point strictly inside the domain.
void check_parameters(cplx a, cplx b, cplx c, double z, bool z_may_round_to_one = false) {
  require_finite(a, "hyp2f1 parameter a");
  require_finite(b, "hyp2f1 parameter b");
  require_finite(c, "hyp2f1 parameter c");
  if (!std::isfinite(z) || !(z < 1.0 || (z_may_round_to_one && z == 1.0)))
    throw Error(ErrorKind::InvalidArgument, "hyp2f1 argument must be a finite real below 1");
  if (is_nonpositive_integer(c))
    throw Error(ErrorKind::CLowerParameterPole, "lower parameter c is a nonpositive integer");
}

cplx finish(const Eval& e) {
  if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()))
    throw Error(ErrorKind::SeriesNonConvergence, "hypergeometric evaluation overflowed");
  return e.value;
}

}  // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, double z) { return hyp2f1(a, b, c, z, 1.0 - z); }

cplx hyp2f1(cplx a, cplx b, cplx c, double z, double one_minus_z) {
  check_parameters(a, b, c, z, true);
  if (!(one_minus_z > 0.0)) throw Error(ErrorKind::InvalidArgument, "1 - z must be positive");
  return finish(evaluate(a, b, c, z, one_minus_z));
}

cplx hyp2f1_series(cplx a, cplx b, cplx c, double z) {
  check_parameters(a, b, c, z);
  if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::InvalidArgument, "power series requires |z| < 1");
  return finish(series(a, b, c, z));
}

cplx hyp2f1_integral(cplx a, cplx b, cplx c, double z, const QuadratureSpec& spec) {
  check_parameters(a, b, c, z);
  // Number of contiguous steps needed for Re b >= 1 and Re(c - b) >= 1.
  const double need = std::max(1.0 - b.real(), 1.0 - (c - b).real());
  const int k = need > 0.0 ? static_cast<int>(std::ceil(need)) : 0;

  // coef[i] multiplies F(a + i, b + j, c + 2j) after j steps.
  std::vector<cplx> coef{1.0};
  for (int j = 0; j < k; ++j) {
    std::vector<cplx> next(coef.size() + 1, 0.0);
    const cplx bj = b + static_cast<double>(j);
    const cplx cj = c + 2.0 * j;
    if (is_nonpositive_integer(cj) || is_nonpositive_integer(cj + 1.0))
      throw Error(ErrorKind::CLowerParameterPole, "contiguous step hits a lower-parameter pole");
    for (std::size_t i = 0; i < coef.size(); ++i) {
      const cplx ai = a + static_cast<double>(i);
      // c(c+1) F(a,b;c) = c(c-a+1) F(a,b+1;c+2) + a[c-(c-b)z] F(a+1,b+1;c+2)
      next[i] += coef[i] * (cj - ai + 1.0) / (cj + 1.0);
      next[i + 1] += coef[i] * ai * (cj - (cj - bj) * z) / (cj * (cj + 1.0));
    }
    coef = std::move(next);
  }

  const cplx bk = b + static_cast<double>(k);
  const cplx ck = c + 2.0 * k;
  const cplx pref = gamma_ratio({ck}, {bk, ck - bk});
  cplx total = 0.0;
  for (std::size_t i = 0; i < coef.size(); ++i) {
    if (coef[i] == 0.0) continue;
    const cplx ai = a + static_cast<double>(i);
    const auto integrand = [&](double s) -> cplx {
      const cplx ls = std::log(s), l1s = std::log1p(-s), lz = std::log1p(-s * z);
      return std::exp((bk - 1.0) * ls + (ck - bk - 1.0) * l1s - ai * lz);
    };
    total += coef[i] * integrate_segment(integrand, 0.0, 1.0, spec).value;
  }
  return pref * total;
}

}  // namespace harmonia
