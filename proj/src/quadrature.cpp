#include "conicrect/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "conicrect/errors.hpp"

namespace conicrect {
namespace {

// Kronrod 15-point abscissae and weights; the odd entries plus the centre
// form the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kTanhSinhTmax = 6.0;
constexpr int kTanhSinhMinLevel = 3;
constexpr int kTanhSinhMaxLevel = 12;

enum class Rule { gauss_kronrod, tanh_sinh };

struct Panel {
  double a, b;
  Rule rule;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

class Evaluator {
 public:
  Evaluator(const Integrand& f, double lo, double hi) : f_(f), lo_(lo), hi_(hi) {}

  double operator()(double x, double from_lo, double to_hi) {
    ++count;
    double v = f_(QuadPoint{x, from_lo, to_hi});
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "integrand returned " << v << " at x = " << x;
      throw IntegrandError(os.str(), x);
    }
    return v;
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  long count = 0;

 private:
  const Integrand& f_;
  double lo_, hi_;
};

Panel gauss_kronrod(Evaluator& ev, double a, double b) {
  const double half = 0.5 * (b - a);
  const double c = a + half;
  const double base_lo = a - ev.lo();
  const double base_hi = ev.hi() - b;

  const double fc = ev(c, base_lo + half, base_hi + half);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double near = half * (1.0 - kXgk[j]);
    const double far = half * (1.0 + kXgk[j]);
    const double f1 = ev(c - dx, base_lo + near, base_hi + far);
    const double f2 = ev(c + dx, base_lo + far, base_hi + near);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, Rule::gauss_kronrod, resk * half, std::fabs(resk - resg) * half};
}

// tanh-sinh on [a, b]: x = c + half * tanh(pi/2 sinh t).  Distances to the
// panel ends are formed from exp(-2|u|) directly so nodes crowding an
// endpoint keep full relative precision.
Panel tanh_sinh(Evaluator& ev, double a, double b, const Tolerance& tol, double share) {
  const double half = 0.5 * (b - a);
  const double base_lo = a - ev.lo();
  const double base_hi = ev.hi() - b;
  constexpr double pi_2 = std::numbers::pi / 2.0;

  auto weighted = [&](double t) -> double {
    const double u = pi_2 * std::sinh(t);
    const double e = std::exp(-2.0 * std::fabs(u));
    if (e < 1e-280) return 0.0;
    const double d = half * 2.0 * e / (1.0 + e);
    const double w = half * pi_2 * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    const double rest = 2.0 * half - d;
    if (t < 0.0) return w * ev(a + d, base_lo + d, base_hi + rest);
    return w * ev(b - d, base_lo + rest, base_hi + d);
  };

  double h = 1.0;
  double sum = half * pi_2 * ev(a + half, base_lo + half, base_hi + half);
  for (int k = 1; k * h <= kTanhSinhTmax; ++k) sum += weighted(k * h) + weighted(-k * h);
  double estimate = h * sum;
  double error = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= kTanhSinhMaxLevel; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTanhSinhTmax; t += 2.0 * h) sum += weighted(t) + weighted(-t);
    const double next = h * sum;
    error = std::fabs(next - estimate);
    estimate = next;
    if (level >= kTanhSinhMinLevel && error <= 0.5 * share * tol.target(estimate)) break;
    if (ev.count >= tol.max_iter) break;
  }
  return {a, b, Rule::tanh_sinh, estimate, error};
}

bool splittable(const Panel& p) {
  const double mid = 0.5 * (p.a + p.b);
  const double scale = std::fmax(std::fabs(p.a), std::fabs(p.b));
  return mid > p.a && mid < p.b &&
         (p.b - p.a) > 16.0 * std::numeric_limits<double>::epsilon() * scale;
}

Singular swap_ends(Singular s) {
  switch (s) {
    case Singular::lo: return Singular::hi;
    case Singular::hi: return Singular::lo;
    default: return s;
  }
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double lo, double hi, const Tolerance& tol,
                           Singular singular) {
  tol.validate();
  detail::require(std::isfinite(lo), "integrate", "finite lower limit", lo);
  detail::require(std::isfinite(hi), "integrate", "finite upper limit", hi);
  if (lo == hi) return {};
  if (lo > hi) {
    QuadratureResult r = integrate(f, hi, lo, tol, swap_ends(singular));
    r.value = -r.value;
    return r;
  }

  const bool sing_lo = singular == Singular::lo || singular == Singular::both;
  const bool sing_hi = singular == Singular::hi || singular == Singular::both;
  const double width = hi - lo;
  Evaluator ev(f, lo, hi);

  auto make = [&](double a, double b, bool de) {
    return de ? tanh_sinh(ev, a, b, tol, (b - a) / width) : gauss_kronrod(ev, a, b);
  };

  std::priority_queue<Panel> queue;
  std::vector<Panel> frozen;
  queue.push(make(lo, hi, sing_lo || sing_hi));
  double total = queue.top().value;
  double total_error = queue.top().error;

  bool converged = true;
  while (total_error > tol.target(total)) {
    if (ev.count >= tol.max_iter || queue.empty()) {
      converged = false;
      break;
    }
    Panel worst = queue.top();
    queue.pop();
    if (!splittable(worst)) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const bool de = worst.rule == Rule::tanh_sinh;
    Panel left = make(worst.a, mid, de && sing_lo && worst.a == lo);
    Panel right = make(mid, worst.b, de && sing_hi && worst.b == hi);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum from the panels so running-update drift does not leak into the result.
  QuadratureResult result;
  double comp = 0.0;
  auto add = [&](const Panel& p) {
    const double y = p.value - comp;
    const double s = result.value + y;
    comp = (s - result.value) - y;
    result.value = s;
    result.error_estimate += p.error;
  };
  for (const Panel& p : frozen) add(p);
  while (!queue.empty()) {
    add(queue.top());
    queue.pop();
  }
  result.evaluations = ev.count;
  result.converged = converged;
  return result;
}

double integrate_value(const Integrand& f, double lo, double hi, const Tolerance& tol,
                       Singular singular) {
  QuadratureResult r = integrate(f, lo, hi, tol, singular);
  if (!r.converged) {
    std::ostringstream os;
    os.precision(6);
    os << "quadrature on [" << lo << ", " << hi << "] did not converge: error estimate "
       << r.error_estimate << " after " << r.evaluations << " evaluations";
    throw ConvergenceError(os.str());
  }
  return r.value;
}

}  // namespace conicrect
