#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "harmonia/numerics.hpp"

namespace harmonia {

namespace {

// Gauss-Kronrod 10/21 abscissae and weights (QUADPACK qk21).  xgk[1], xgk[3],
// ..., xgk[9] are the 10-point Gauss nodes; the centre carries no Gauss weight.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo, hi;
  cplx value;
  double error;
  double resabs;  // integral of |f| over the panel
};

Panel gk21(const ScalarFn& f, double lo, double hi, int& evals) {
  const double centr = 0.5 * (lo + hi);
  const double hlgth = 0.5 * (hi - lo);
  const double dhlgth = std::abs(hlgth);

  std::array<cplx, 10> fv1, fv2;
  const cplx fc = f(centr);
  cplx resg = 0.0;
  cplx resk = fc * kWgk[10];
  double resabs = std::abs(fc) * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const double absc = hlgth * kXgk[j];
    const cplx f1 = f(centr - absc);
    const cplx f2 = f(centr + absc);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  evals += 21;

  const cplx reskh = resk * 0.5;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const cplx result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) abserr = std::max(50.0 * kEps * resabs, abserr);
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
    throw Error(ErrorKind::ToleranceNotMet, "non-finite integrand value on [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "]");
  return {lo, hi, result, abserr, resabs};
}

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const { return a.error < b.error; }
};

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_cutoff > 0.0) || max_subdivisions < 1)
    throw Error(ErrorKind::InvalidArgument, "quadrature tolerances, subdivision budget and tail cutoff must be positive");
}

QuadResult integrate_segment(const ScalarFn& f, double lo, double hi, const QuadratureSpec& spec) {
  spec.validate();
  QuadResult out;
  if (lo == hi) return out;
  if (hi < lo) {
    QuadResult r = integrate_segment(f, hi, lo, spec);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Panel, std::vector<Panel>, ByError> work;
  std::vector<Panel> done;  // panels too narrow to split further
  int evals = 0;
  Panel first = gk21(f, lo, hi, evals);
  cplx total = first.value;
  double total_err = first.error;
  double total_abs = first.resabs;
  work.push(first);
  int subdivisions = 0;

  // Cancellation floor: an integral much smaller than int |f| cannot be resolved below
  // the rounding level of the panel sums.
  auto target = [&](cplx value) {
    return std::max({spec.abs_tol, spec.rel_tol * std::abs(value), 100.0 * kEps * total_abs});
  };
  auto converged = [&] { return total_err <= target(total); };

  while (!converged() && !work.empty()) {
    if (subdivisions >= spec.max_subdivisions) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "error estimate %.3g after %d subdivisions on [%.6g, %.6g]", total_err,
                    subdivisions, lo, hi);
      throw Error(ErrorKind::ToleranceNotMet, buf);
    }
    Panel p = work.top();
    work.pop();
    const double mid = 0.5 * (p.lo + p.hi);
    if (!(mid > p.lo && mid < p.hi) || (p.hi - p.lo) <= 64.0 * kEps * std::max(std::abs(p.lo), std::abs(p.hi))) {
      done.push_back(p);
      continue;
    }
    Panel left = gk21(f, p.lo, mid, evals);
    Panel right = gk21(f, mid, p.hi, evals);
    ++subdivisions;
    total += (left.value + right.value) - p.value;
    total_err += (left.error + right.error) - p.error;
    total_abs += (left.resabs + right.resabs) - p.resabs;
    work.push(left);
    work.push(right);
  }

  // Deterministic summation: accumulate in position order.
  while (!work.empty()) {
    done.push_back(work.top());
    work.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  cplx sum = 0.0;
  double err = 0.0;
  for (const Panel& p : done) {
    sum += p.value;
    err += p.error;
  }
  if (!converged() && err > target(sum)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "error estimate %.3g could not be reduced on [%.6g, %.6g]", err, lo, hi);
    throw Error(ErrorKind::ToleranceNotMet, buf);
  }
  out.value = sum;
  out.error = err;
  out.evaluations = evals;
  out.subdivisions = subdivisions;
  return out;
}

QuadResult integrate_halfline(const ScalarFn& f, double decay_rate, const QuadratureSpec& spec, double lo) {
  spec.validate();
  if (!(decay_rate > 0.0)) throw Error(ErrorKind::InvalidArgument, "decay rate hint must be positive");

  const double chunk = std::clamp(5.0 / decay_rate, 0.5, 25.0);
  const double limit = lo + spec.tail_cutoff;
  constexpr int kSamples = 9;

  // Envelope of |f| over the right half of [a, b].
  auto envelope = [&](double a, double b) {
    double m = 0.0;
    for (int j = 0; j < kSamples; ++j) {
      const double t = b - 0.5 * (b - a) * j / (kSamples - 1);
      m = std::max(m, std::abs(f(t)));
    }
    return m;
  };

  QuadResult out;
  double a = lo;
  double prev_env = -1.0;
  int stalled = 0;
  while (true) {
    const double b = a + chunk;
    const QuadResult piece = integrate_segment(f, a, b, spec);
    out.value += piece.value;
    out.error += piece.error;
    out.evaluations += piece.evaluations;
    out.subdivisions += piece.subdivisions;

    const double env = envelope(a, b);
    out.evaluations += kSamples;
    const double tail_bound = env / decay_rate;
    const double target = std::max(spec.abs_tol, 0.1 * spec.rel_tol * std::abs(out.value));
    if (tail_bound <= target) {
      out.error += tail_bound;
      return out;
    }
    // The envelope must shrink at (at least half) the hinted rate.
    if (prev_env >= 0.0 && env > prev_env * std::exp(-0.5 * decay_rate * chunk)) {
      if (++stalled >= 3) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "envelope %.3g at t=%.4g is not decaying at rate %.4g", env, b, decay_rate);
        throw Error(ErrorKind::TailNotDecaying, buf);
      }
    } else {
      stalled = 0;
    }
    prev_env = env;
    a = b;
    if (a >= limit) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "tail bound %.3g still above %.3g at cutoff t=%.4g", tail_bound, target, a);
      throw Error(ErrorKind::TailNotDecaying, buf);
    }
  }
}

QuadResult mean_over_circle(const ScalarFn& f, const QuadratureSpec& spec) {
  spec.validate();
  constexpr int kMaxNodes = 1 << 17;
  int n = 8;
  cplx sum = 0.0;
  for (int j = 0; j < n; ++j) sum += f(2.0 * kPi * j / n);
  cplx mean = sum / static_cast<double>(n);
  QuadResult out;
  out.evaluations = n;
  while (true) {
    cplx odd = 0.0;
    for (int j = 0; j < n; ++j) odd += f(2.0 * kPi * (j + 0.5) / n);
    out.evaluations += n;
    sum += odd;
    n *= 2;
    const cplx next = sum / static_cast<double>(n);
    const double diff = std::abs(next - mean);
    mean = next;
    if (n >= 16 && diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(mean))) {
      out.value = mean;
      out.error = diff;
      return out;
    }
    if (n >= kMaxNodes) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "periodic rule not converged with %d nodes (last change %.3g)", n, diff);
      throw Error(ErrorKind::ToleranceNotMet, buf);
    }
  }
}

}  // namespace harmonia
