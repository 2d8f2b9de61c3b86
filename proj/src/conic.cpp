#include "conicrect/conic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "conicrect/detail/elliptic_kernels.hpp"
#include "conicrect/detail/excess_kernels.hpp"
#include "conicrect/elliptic.hpp"
#include "conicrect/errors.hpp"
#include "conicrect/quadrature.hpp"

namespace conicrect {

using detail::require;

namespace {

constexpr double kGuard = 1e-8;

void require_pedal(const char* op, const Hyperbola& h, double p) {
  require(p > 0.0 && p <= h.a(), op, "0 < p <= a", p);
}

double positive_finite(double v) { return std::isfinite(v) && v > 0.0 ? v : -1.0; }

}  // namespace

Hyperbola::Hyperbola(double a, double b) : a_(a), b_(b), c_(std::hypot(a, b)) {
  require(positive_finite(a) > 0.0, "hyperbola", "a > 0", a);
  require(positive_finite(b) > 0.0, "hyperbola", "b > 0", b);
}

Ellipse::Ellipse(double a, double b) : a_(a), b_(b) {
  require(positive_finite(a) > 0.0, "ellipse", "a > 0", a);
  require(positive_finite(b) > 0.0, "ellipse", "b > 0", b);
}

LandenPair::LandenPair(double m, double n) : m_(m), n_(n) {
  require(positive_finite(n) > 0.0, "landen pair", "n > 0", n);
  require(std::isfinite(m) && m >= n, "landen pair", "m >= n", m);
}

Hyperbola LandenPair::hyperbola() const { return {m_ - n_, 2.0 * std::sqrt(m_ * n_)}; }
Ellipse LandenPair::ellipse1() const { return {m_ + n_, 2.0 * std::sqrt(m_ * n_)}; }
Ellipse LandenPair::ellipse2() const { return {m_, n_}; }

LandenPair semiaxes_to_pair(double a, double b) {
  const Hyperbola h(a, b);
  const double s = h.focal() + a;
  return {0.5 * s, b * b / (2.0 * s)};
}

Semiaxes pair_to_semiaxes(const LandenPair& pair) {
  const Hyperbola h = pair.hyperbola();
  return {h.a(), h.b()};
}

double hyperbola_radius_from_pedal(const Hyperbola& h, double p) {
  require_pedal("hyperbola_radius_from_pedal", h, p);
  const double a = h.a(), b = h.b();
  return std::sqrt(a * a + b * b * (a - p) * (a + p) / (p * p));
}

Point hyperbola_point_from_pedal(const Hyperbola& h, double p) {
  require_pedal("hyperbola_point_from_pedal", h, p);
  const double a = h.a(), b = h.b();
  const double s = b * std::sqrt((a - p) * (a + p)) / (p * h.focal());
  return {a * std::sqrt(1.0 + s * s), b * s};
}

double hyperbola_tangent_length(const Hyperbola& h, double p) {
  require_pedal("hyperbola_tangent_length", h, p);
  const double a = h.a(), b = h.b();
  return std::sqrt((a - p) * (a + p) * (p * p + b * b)) / p;
}

PedalPoint hyperbola_pedal_point(const Hyperbola& h, double p) {
  return {hyperbola_radius_from_pedal(h, p), p, hyperbola_tangent_length(h, p)};
}

double hyperbola_pedal_from_point(const Hyperbola& h, Point pt) {
  const double a2 = h.a() * h.a(), b2 = h.b() * h.b();
  return 1.0 / std::hypot(pt.x / a2, pt.y / b2);
}

double ellipse_tangent_length(const Ellipse& e2, double x) {
  const double m = e2.a();
  require(m >= e2.b(), "ellipse_tangent_length", "m >= n", e2.b());
  require(x >= 0.0 && x <= m, "ellipse_tangent_length", "0 <= x <= m", x);
  const double g = e2.g();
  return g * x * std::sqrt((m - x) * (m + x) / (m * m - g * x * x));
}

TangentAbscissae abscissae_from_tangent(const LandenPair& pair, double t) {
  const double m = pair.m(), n = pair.n();
  require(m > n, "abscissae_from_tangent", "m > n", m);
  require(t >= 0.0 && t <= m - n, "abscissae_from_tangent", "0 <= t <= m - n", t);
  const double g = pair.ellipse2().g();
  const double rad = (m - n - t) * (m - n + t) * (m + n - t) * (m + n + t);
  const double s = t * t + g * m * m + std::sqrt(std::max(0.0, rad));
  const double x_plus = std::min(m, std::sqrt(s / (2.0 * g)));
  const double x_minus = std::min(x_plus, t * m * std::sqrt(2.0 / (g * s)));
  return {x_minus, x_plus};
}

double ellipse_arc(const Ellipse& e, double x0, double x1) {
  const double a = e.a(), b = e.b();
  require(x0 >= 0.0 && x0 <= x1, "ellipse_arc", "0 <= x0 <= x1", x0);
  require(x1 <= a, "ellipse_arc", "x1 <= semiaxis a", x1);
  if (x0 == x1) return 0.0;
  const double th0 = std::asin(x0 / a);
  const double th1 = std::asin(x1 / a);
  if (a >= b) {
    const Modulus k = Modulus::from_complement(b / a);
    return a * (incomplete_E(Amplitude(th1), k) - incomplete_E(Amplitude(th0), k));
  }
  // Parametrize from the x-axis end instead so the modulus stays below one.
  const Modulus k = Modulus::from_complement(a / b);
  const double half_pi = std::numbers::pi / 2;
  return b * (incomplete_E(Amplitude(half_pi - th0), k) -
              incomplete_E(Amplitude(half_pi - th1), k));
}

double hyperbola_arc(const Hyperbola& h, double p_lo) {
  require_pedal("hyperbola_arc", h, p_lo);
  if (p_lo == h.a()) return 0.0;
  // In the rotated frame put x = x_A e^(-s), x_A = ab/c the rotated vertex.
  // The arclength factor sqrt(c^4x^4 - 2a^2b^2(a^2-b^2)x^2 + a^4b^4)/(2abx^2) dx
  // becomes sqrt(c^2 sinh^2 s + b^2) ds, and the far end is s = asinh(S)
  // with S the sinh of the branch parameter at pedal distance p_lo.
  const double a = h.a(), b = h.b(), c = h.focal();
  const double big_s = b * std::sqrt((a - p_lo) * (a + p_lo)) / (p_lo * c);
  auto f = [b, c](double s) {
    const double sh = c * std::sinh(s);
    return std::sqrt(sh * sh + b * b);
  };
  return integrate_value(f, 0.0, std::asinh(big_s), Tolerance::quadrature_tight());
}

double hyperbola_arc_pedal(const Hyperbola& h, double p_lo) {
  require_pedal("hyperbola_arc_pedal", h, p_lo);
  if (p_lo == h.a()) return 0.0;
  const double a = h.a(), b = h.b();
  const double ab2 = a * a * b * b;
  auto f = [=](const QuadPoint& q) {
    const double p = q.x;
    return ab2 / (p * p * std::sqrt(q.to_hi * (a + p) * (p * p + b * b)));
  };
  return integrate_value(f, p_lo, a, Tolerance::quadrature_tight(), Singular::hi);
}

double excess_finite(const Hyperbola& h, double p) {
  require_pedal("excess_finite", h, p);
  if (p == h.a()) return 0.0;
  return hyperbola_tangent_length(h, p) - hyperbola_arc(h, p);
}

double excess_infinity_closed(const Hyperbola& h) {
  return detail::excess_closed<double>(h.a(), h.b());
}

double excess_infinity_series(const Hyperbola& h, int terms) {
  require(terms >= 1 && terms <= 3, "excess_infinity_series", "1 <= terms <= 3", terms);
  return detail::excess_series<double>(h.a(), h.b(), terms);
}

double excess_series_bound(const Hyperbola& h, int terms) {
  require(terms >= 1 && terms <= 3, "excess_series_bound", "1 <= terms <= 3", terms);
  return detail::excess_series_bound<double>(h.a(), h.b(), terms);
}

namespace {

struct Quadrants {
  double s1, s2;
};

Quadrants ellipse_quadrants(const LandenPair& pair) {
  const double m = pair.m(), n = pair.n();
  const double sum = m + n;
  const Modulus k1 = Modulus::with_complement((m - n) / sum, 2.0 * std::sqrt(m * n) / sum);
  const Modulus k2 = Modulus::from_complement(n / m);
  return {sum * complete_E(k1), m * complete_E(k2)};
}

}  // namespace

double excess_infinity_landen(const LandenPair& pair) {
  const Quadrants q = ellipse_quadrants(pair);
  return 2.0 * q.s2 - q.s1;
}

double maclaurin_excess_integrand(const Hyperbola& h, double p) {
  const double a = h.a(), b = h.b();
  require(p > 0.0 && p < a, "maclaurin_excess_integrand", "0 < p < a", p);
  return -p * p / std::sqrt((a - p) * (a + p) * (b * b + p * p));
}

bool pedal_near_degenerate(const Hyperbola& h, double p) { return p < kGuard * h.a(); }

bool tangent_near_maximum(const LandenPair& pair, double t) {
  return t > (pair.m() - pair.n()) * (1.0 - kGuard);
}

namespace {

// ds/dx on the ellipse (m, n): sqrt((m^2 - g x^2) / (m^2 - x^2)).
Integrand ellipse2_arc_integrand(const LandenPair& pair, double hi) {
  const double m = pair.m();
  const double g = pair.ellipse2().g();
  const double gap = m - hi;
  return [=](const QuadPoint& q) {
    const double x = q.x;
    return std::sqrt((m * m - g * x * x) / ((gap + q.to_hi) * (m + x)));
  };
}

}  // namespace

LandenCheck landen_theorem_check(const LandenPair& pair, double t) {
  const double m = pair.m(), n = pair.n();
  require(m > n, "landen_theorem_check", "m > n", m);
  const double a = m - n;
  require(t >= 0.0 && t < a, "landen_theorem_check", "0 <= t < m - n", t);

  const Hyperbola h = pair.hyperbola();
  const double p = std::sqrt((a - t) * (a + t));
  LandenCheck out;
  ExcessBreakdown& bd = out.breakdown;
  bd.t = t;
  bd.hyp_arc = hyperbola_arc(h, p);
  bd.t_hyp = t * std::hypot(p, h.b()) / p;

  const double sum = m + n;
  const double gap = a - t;
  auto eta1 = [=](const QuadPoint& q) {
    const double tau = q.x;
    return std::sqrt((sum - tau) * (sum + tau) / ((gap + q.to_hi) * (a + tau)));
  };
  bd.eta1 = integrate_value(eta1, 0.0, t, Tolerance::quadrature(), Singular::hi);

  const double x_minus = abscissae_from_tangent(pair, t).x_minus;
  bd.eta2 = integrate_value(ellipse2_arc_integrand(pair, x_minus), 0.0, x_minus);

  const Quadrants q = ellipse_quadrants(pair);
  bd.s1 = q.s1;
  bd.s2 = q.s2;
  bd.limit_L = 2.0 * q.s2 - q.s1;
  if (pedal_near_degenerate(h, p)) bd.flags.emplace_back("pedal distance inside guard band");
  if (tangent_near_maximum(pair, t)) bd.flags.emplace_back("tangent length near maximum m-n");

  out.report = make_residual("landen-theorem", {{"m", m}, {"n", n}, {"t", t}}, bd.hyp_arc,
                             bd.t_hyp + 2.0 * t + bd.eta1 - 4.0 * bd.eta2);
  return out;
}

ResidualReport fagnano_check(const LandenPair& pair, double t) {
  const double m = pair.m(), n = pair.n();
  require(m > n, "fagnano_check", "m > n", m);
  require(t >= 0.0 && t <= m - n, "fagnano_check", "0 <= t <= m - n", t);
  const TangentAbscissae xs = abscissae_from_tangent(pair, t);
  const double near_minor = integrate_value(ellipse2_arc_integrand(pair, xs.x_minus), 0.0,
                                            xs.x_minus);
  const double near_major = integrate_value(ellipse2_arc_integrand(pair, m), xs.x_plus, m,
                                            Tolerance::quadrature(), Singular::hi);
  return make_residual("fagnano", {{"m", m}, {"n", n}, {"t", t}}, near_minor - near_major, t);
}

double simpson_arc(const Hyperbola& h, double u0, double u1) {
  require(u0 > 0.0, "simpson_arc", "u0 > 0", u0);
  require(u0 <= u1 && u1 <= 1.0, "simpson_arc", "u0 <= u1 <= 1", u1);
  if (u0 == u1) return 0.0;
  const double c = h.focal();
  const double d = h.modulus();
  const double gap = 1.0 - u1;
  auto f = [=](const QuadPoint& q) {
    const double u = q.x;
    const double du = d * u;
    return c * std::sqrt((1.0 - du) * (1.0 + du)) / (u * u * std::sqrt((gap + q.to_hi) * (1.0 + u)));
  };
  return integrate_value(f, u0, u1, Tolerance::quadrature_tight(), Singular::hi);
}

double pedal_from_reciprocal_abscissa(const Hyperbola& h, double u) {
  require(u > 0.0 && u <= 1.0, "pedal_from_reciprocal_abscissa", "0 < u <= 1", u);
  const double a = h.a(), b = h.b();
  return u / std::sqrt(1.0 / (a * a) + (1.0 - u) * (1.0 + u) / (b * b));
}

}  // namespace conicrect
