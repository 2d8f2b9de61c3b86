#include "conicrect/construct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "conicrect/errors.hpp"

namespace conicrect {

using detail::require;

namespace {

constexpr double kPointTolerance = 1e-9;

Point foot_on_line(double nx, double ny) {
  // Foot of the perpendicular from the origin to nx*x + ny*y = 1.
  const double d = nx * nx + ny * ny;
  return {nx / d, ny / d};
}

double dist(Point u, Point v) { return std::hypot(u.x - v.x, u.y - v.y); }

}  // namespace

const Point& Construction::at(const std::string& label) const {
  for (const auto& lp : points)
    if (lp.label == label) return lp.at;
  throw DomainError("construction has no point " + label);
}

Construction build_construction(double m, double n, double t) {
  const LandenPair pair(m, n);
  require(m > n, "construct", "m > n", m);
  const double a = m - n;
  require(t >= 0.0 && t < a * (1.0 - 1e-8), "construct", "0 <= t < m - n (outside guard band)",
          t);
  const Hyperbola h = pair.hyperbola();
  const double b = h.b();
  const double p = std::sqrt((a - t) * (a + t));

  const TangentAbscissae xs = abscissae_from_tangent(pair, t);
  const double ex = xs.x_minus;
  const Point e{ex, n * std::sqrt((m - ex) * (m + ex)) / m};
  const Point f = hyperbola_point_from_pedal(h, p);

  Construction c{m, n, t, a, b, p, {}};
  c.points = {
      {"S", {0.0, 0.0}},
      {"A", {a, 0.0}},
      {"N", {a, b}},
      {"Z", {m + n, -(m - n)}},
      {"E", e},
      {"P2", foot_on_line(e.x / (m * m), e.y / (n * n))},
      {"H", {a, -t}},
      {"K", {p * p / a, -p * t / a}},
      {"F", f},
      {"P", foot_on_line(f.x / (a * a), -f.y / (b * b))},
  };
  return c;
}

double construction_residual(const Construction& c) {
  const double m = c.m, n = c.n, a = c.a, b = c.b, p = c.p, t = c.t;
  const Point S = c.at("S"), A = c.at("A"), N = c.at("N"), Z = c.at("Z"), E = c.at("E"),
              P2 = c.at("P2"), H = c.at("H"), K = c.at("K"), F = c.at("F"), P = c.at("P");
  auto hyperbola = [&](Point q) { return q.x * q.x / (a * a) - q.y * q.y / (b * b) - 1.0; };
  const double t_hyp = std::sqrt((a - p) * (a + p) * (p * p + b * b)) / p;

  const double residuals[] = {
      std::hypot(S.x, S.y),
      hyperbola(A), A.y,
      N.x - a, N.y - b / a * N.x,
      Z.x - (m + n), Z.y + (m - n),
      E.x * E.x / (m * m) + E.y * E.y / (n * n) - 1.0,
      P2.x * E.x / (m * m) + P2.y * E.y / (n * n) - 1.0,
      P2.x * E.y / (n * n) - P2.y * E.x / (m * m),
      dist(E, P2) - t,
      H.x - a, H.y + t,
      dist(K, A) - t, dist(K, {a / 2, 0.0}) - a / 2, std::hypot(K.x, K.y) - p,
      hyperbola(F), hyperbola_pedal_from_point(Hyperbola(a, b), F) - p,
      std::hypot(P.x, P.y) - p,
      P.x * F.x / (a * a) - P.y * F.y / (b * b) - 1.0,
      dist(F, P) - t_hyp,
  };
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, std::fabs(r));
  return worst;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Drawing coordinates: y flipped so the figure reads the usual way up.
std::string xy(Point q) { return fmt(q.x) + "," + fmt(-q.y); }

template <class Param>
std::string polyline(const std::string& cls, double lo, double hi, int samples, Param at) {
  std::string pts;
  for (int i = 0; i <= samples; ++i) {
    const double s = lo + (hi - lo) * i / samples;
    if (i) pts += ' ';
    pts += xy(at(s));
  }
  return "  <polyline class=\"" + cls + "\" points=\"" + pts + "\"/>\n";
}

std::string line(const std::string& cls, Point u, Point v) {
  return "  <line class=\"" + cls + "\" x1=\"" + fmt(u.x) + "\" y1=\"" + fmt(-u.y) +
         "\" x2=\"" + fmt(v.x) + "\" y2=\"" + fmt(-v.y) + "\"/>\n";
}

std::string ellipse(const std::string& cls, Point centre, double rx, double ry) {
  return "  <ellipse class=\"" + cls + "\" cx=\"" + fmt(centre.x) + "\" cy=\"" +
         fmt(-centre.y) + "\" rx=\"" + fmt(rx) + "\" ry=\"" + fmt(ry) + "\"/>\n";
}

}  // namespace

std::string render_svg(const Construction& c) {
  const double worst = construction_residual(c);
  if (!(worst <= kPointTolerance)) {
    std::ostringstream os;
    os << "construct: point equations violated by " << worst;
    throw ConvergenceError(os.str());
  }

  const double m = c.m, n = c.n, a = c.a, b = c.b;
  const double half_w = 1.2 * (m + n);
  const double half_h = 1.2 * b;
  const double unit = (m + n) / 200.0;  // stroke and label scale in user units

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(-half_w)
     << " " << fmt(-half_h) << " " << fmt(2 * half_w) << " " << fmt(2 * half_h)
     << "\" data-m=\"" << fmt17(m) << "\" data-n=\"" << fmt17(n) << "\" data-t=\""
     << fmt17(c.t) << "\">\n";
  os << "  <style>\n"
     << "    * { fill: none; stroke-width: " << fmt(unit) << "; }\n"
     << "    .hyperbola { stroke: #b03020; } .ellipse1 { stroke: #2050b0; }\n"
     << "    .ellipse2 { stroke: #208040; } .aux { stroke: #888888; }\n"
     << "    .tangent { stroke: #000000; } .point { fill: #000000; stroke: none; }\n"
     << "    text { fill: #000000; stroke: none; font-size: " << fmt(6 * unit) << "px; }\n"
     << "  </style>\n";

  // Hyperbola upper branch out to the frame edge, in the branch parameter.
  const double u_max = std::acosh(std::max(1.0, half_w / a));
  os << polyline("hyperbola", 0.0, u_max, 200,
                 [&](double u) { return Point{a * std::cosh(u), b * std::sinh(u)}; });
  os << ellipse("ellipse1", {0, 0}, m + n, b);
  os << ellipse("ellipse2", {0, 0}, m, n);
  const double asy_x = std::min(half_w, half_h * a / b);
  os << line("aux asymptote", {0, 0}, {asy_x, b / a * asy_x});
  os << line("aux vert-tan", {a, -half_h}, {a, half_h});
  os << ellipse("aux half-circle", {a / 2, 0}, a / 2, a / 2);
  os << ellipse("aux pedal-circle", {0, 0}, c.p, c.p);
  os << ellipse("aux t-circle", {a, 0}, c.t, c.t);
  os << line("aux t-axis", {0, 0}, c.at("Z"));

  const Point F = c.at("F"), P = c.at("P"), E = c.at("E"), P2 = c.at("P2");
  auto extend = [&](Point u, Point v) {
    const double dx = v.x - u.x, dy = v.y - u.y, len = std::hypot(dx, dy);
    if (len == 0.0) return std::pair{u, v};
    const double s = 2.0 * half_w / len;
    return std::pair{Point{u.x - s * dx, u.y - s * dy}, Point{v.x + s * dx, v.y + s * dy}};
  };
  if (dist(F, P) > 0.0) {
    auto [u, v] = extend(P, F);
    os << line("tangent tan-ob", u, v);
  }
  if (dist(E, P2) > 0.0) {
    auto [u, v] = extend(P2, E);
    os << line("tangent ellipse2-tangent", u, v);
  }
  os << line("aux", {0, 0}, P);
  os << line("aux", {0, 0}, P2);

  for (const auto& lp : c.points) {
    os << "  <circle class=\"point\" data-label=\"" << lp.label << "\" data-x=\""
       << fmt17(lp.at.x) << "\" data-y=\"" << fmt17(lp.at.y) << "\" cx=\"" << fmt(lp.at.x)
       << "\" cy=\"" << fmt(-lp.at.y) << "\" r=\"" << fmt(1.5 * unit) << "\"/>\n";
    os << "  <text x=\"" << fmt(lp.at.x + 2 * unit) << "\" y=\"" << fmt(-lp.at.y - 2 * unit)
       << "\">" << lp.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace conicrect
