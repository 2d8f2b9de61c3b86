#pragma once

#include <string>
#include <vector>

#include "conicrect/residual.hpp"

namespace conicrect {

struct Point {
  double x;
  double y;
};

/// x^2/a^2 - y^2/b^2 = 1.
class Hyperbola {
 public:
  Hyperbola(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double focal() const { return c_; }  // sqrt(a^2 + b^2)
  double eccentricity() const { return c_ / a_; }
  /// a (1 - e^2/2) = (a^2 - b^2) / (2a)
  double epsilon() const { return (a_ - b_) * (a_ + b_) / (2.0 * a_); }
  /// a / sqrt(a^2 + b^2)
  double modulus() const { return a_ / c_; }

 private:
  double a_, b_, c_;
};

/// x^2/a^2 + y^2/b^2 = 1, a along x.
class Ellipse {
 public:
  Ellipse(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  /// (a^2 - b^2) / a^2
  double g() const { return (a_ - b_) * (a_ + b_) / (a_ * a_); }

 private:
  double a_, b_;
};

/// Coefficients (m, n) tying the hyperbola (m-n, 2 sqrt(mn)) to the ellipses
/// (m+n, 2 sqrt(mn)) and (m, n).
class LandenPair {
 public:
  LandenPair(double m, double n);

  double m() const { return m_; }
  double n() const { return n_; }
  Hyperbola hyperbola() const;
  Ellipse ellipse1() const;
  Ellipse ellipse2() const;

 private:
  double m_, n_;
};

LandenPair semiaxes_to_pair(double a, double b);

struct Semiaxes {
  double a;
  double b;
};
Semiaxes pair_to_semiaxes(const LandenPair& pair);

struct PedalPoint {
  double r;
  double p;
  double t;
};

/// r^2 = a^2 - b^2 + a^2 b^2 / p^2 for 0 < p <= a.
double hyperbola_radius_from_pedal(const Hyperbola& h, double p);

/// Point on the upper right branch whose tangent lies at distance p from the
/// centre.  Closed form: sinh^2(u) = b^2 (a^2 - p^2) / (p^2 (a^2 + b^2)).
Point hyperbola_point_from_pedal(const Hyperbola& h, double p);

PedalPoint hyperbola_pedal_point(const Hyperbola& h, double p);

/// Tangent segment from the point with pedal distance p to the foot of the
/// perpendicular from the centre: sqrt((a^2 - p^2)(p^2 + b^2)) / p.
double hyperbola_tangent_length(const Hyperbola& h, double p);

/// Distance from the centre to the tangent at (x0, y0) on the hyperbola.
double hyperbola_pedal_from_point(const Hyperbola& h, Point pt);

/// t = g x sqrt((m^2 - x^2) / (m^2 - g x^2)) on the ellipse (m, n), m >= n.
double ellipse_tangent_length(const Ellipse& e2, double x);

struct TangentAbscissae {
  double x_minus;
  double x_plus;
};

/// The two abscissae on ellipse2 whose tangent length is t, 0 <= t <= m - n.
TangentAbscissae abscissae_from_tangent(const LandenPair& pair, double t);

/// Arc of the ellipse between abscissae 0 <= x0 <= x1 <= a (upper half).
double ellipse_arc(const Ellipse& e, double x0, double x1);

/// Arc from the vertex to the point with pedal distance p_lo, integrated in
/// the frame rotated so the tangent foot moves along an axis.
double hyperbola_arc(const Hyperbola& h, double p_lo);

/// Same arc integrated in pedal form ds = a^2 b^2 dp / (p^2 sqrt((a^2-p^2)(p^2+b^2))).
double hyperbola_arc_pedal(const Hyperbola& h, double p_lo);

/// Tangent segment minus arc, for the point with pedal distance p.
double excess_finite(const Hyperbola& h, double p);

/// Limit of excess_finite as p -> 0: c E(k) - (b^2/c) K(k), k = a/c.
double excess_infinity_closed(const Hyperbola& h);

/// Small a/b expansion (pi a^2 / 2b)(1/2 - 3x/16 + 15x^2/128), x = (a/b)^2,
/// truncated to `terms` (1..3) terms.
double excess_infinity_series(const Hyperbola& h, int terms);

/// Magnitude of the first omitted term of excess_infinity_series.
double excess_series_bound(const Hyperbola& h, int terms);

/// 2 S2 - S1 with S2 = m E(sqrt(m^2-n^2)/m) and S1 = (m+n) E((m-n)/(m+n)).
double excess_infinity_landen(const LandenPair& pair);

/// -p^2 / sqrt(a^2 b^2 + 2 eps a p^2 - p^4), the p-derivative of the excess.
double maclaurin_excess_integrand(const Hyperbola& h, double p);

struct ExcessBreakdown {
  double hyp_arc = 0.0;
  double t_hyp = 0.0;
  double t = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double limit_L = 0.0;
  std::vector<std::string> flags;
};

struct LandenCheck {
  ExcessBreakdown breakdown;
  ResidualReport report;
};

/// Hyp = t_Hyp + 2t + eta1 - 4 eta2 with every piece by quadrature.
LandenCheck landen_theorem_check(const LandenPair& pair, double t);

/// arc(0 -> x_minus) - arc(x_plus -> m) - t on ellipse2.
ResidualReport fagnano_check(const LandenPair& pair, double t);

/// Arc in the reciprocal abscissa u = a/x:
/// (a/d) sqrt(1 - d^2 u^2) / (u^2 sqrt(1 - u^2)) du, d = a/c.
double simpson_arc(const Hyperbola& h, double u0, double u1);

/// Pedal distance of the point with reciprocal abscissa u = a/x.
double pedal_from_reciprocal_abscissa(const Hyperbola& h, double u);

/// Guard bands where quadrature conditioning degrades.
bool pedal_near_degenerate(const Hyperbola& h, double p);
bool tangent_near_maximum(const LandenPair& pair, double t);

namespace extended {

/// Long double evaluations for comparisons finer than double resolution.
long double excess_infinity_closed(long double a, long double b);
long double excess_infinity_series(long double a, long double b, int terms);
long double excess_series_bound(long double a, long double b, int terms);

}  // namespace extended

}  // namespace conicrect
