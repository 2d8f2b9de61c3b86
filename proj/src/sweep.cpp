#include "conicrect/sweep.hpp"

#include <cmath>

#include "conicrect/conic.hpp"
#include "conicrect/elliptic.hpp"
#include "conicrect/errors.hpp"
#include "conicrect/landen.hpp"
#include "conicrect/parallel.hpp"

namespace conicrect {

using detail::require;

namespace {

constexpr long kMaxSweepPoints = 1'000'000;

int as_count(const char* op, double v) {
  require(v == std::floor(v) && v >= 1.0 && v <= 1e6, op, "a positive integer count", v);
  return static_cast<int>(v);
}

std::vector<double> residual_row(const ResidualReport& r) { return {r.lhs, r.rhs, r.residual}; }

std::vector<SweepOp> build_ops() {
  std::vector<SweepOp> ops;
  auto add = [&](std::string name, std::vector<std::string> params, ParamMap defaults,
                 std::vector<std::string> outputs,
                 std::function<std::vector<double>(const ParamMap&)> eval) {
    ops.push_back({std::move(name), std::move(params), std::move(defaults), std::move(outputs),
                   std::move(eval)});
  };
  const std::vector<std::string> lhs_rhs = {"lhs", "rhs", "residual"};

  add("K", {"k"}, {}, {"K"},
      [](const ParamMap& v) { return std::vector{complete_K(Modulus(v.at("k")))}; });
  add("E", {"k"}, {}, {"E"},
      [](const ParamMap& v) { return std::vector{complete_E(Modulus(v.at("k")))}; });
  add("F", {"phi", "k"}, {}, {"F"}, [](const ParamMap& v) {
    return std::vector{incomplete_F(Amplitude(v.at("phi")), Modulus(v.at("k")))};
  });
  add("Einc", {"phi", "k"}, {}, {"E"}, [](const ParamMap& v) {
    return std::vector{incomplete_E(Amplitude(v.at("phi")), Modulus(v.at("k")))};
  });
  for (auto [name, kind] : {std::pair{"series-K", SeriesKind::K}, {"series-E", SeriesKind::E}}) {
    add(name, {"k", "terms"}, {{"terms", 40}}, {"value", "bound"}, [kind](const ParamMap& v) {
      const Modulus k(v.at("k"));
      const int terms = as_count("series", v.at("terms"));
      return std::vector{series_KE(kind, k, terms), series_KE_bound(kind, k, terms)};
    });
  }
  add("agm", {"p", "q"}, {}, {"limit", "iterations"}, [](const ParamMap& v) {
    const AgmSequence s = agm(v.at("p"), v.at("q"));
    return std::vector{s.limit, static_cast<double>(s.iterations)};
  });
  add("lemniscate", {"radius"}, {}, {"quarter_arc", "full_arc", "gauss_constant"},
      [](const ParamMap& v) {
        const Lemniscate l = lemniscate(v.at("radius"));
        return std::vector{l.quarter_arc, l.full_arc, l.gauss_constant};
      });
  add("excess-closed", {"a", "b"}, {}, {"excess"}, [](const ParamMap& v) {
    return std::vector{excess_infinity_closed(Hyperbola(v.at("a"), v.at("b")))};
  });
  add("excess-series", {"a", "b", "terms"}, {{"terms", 3}}, {"excess", "bound"},
      [](const ParamMap& v) {
        const Hyperbola h(v.at("a"), v.at("b"));
        const int terms = as_count("excess-series", v.at("terms"));
        return std::vector{excess_infinity_series(h, terms), excess_series_bound(h, terms)};
      });
  add("excess-landen", {"m", "n"}, {}, {"excess"}, [](const ParamMap& v) {
    return std::vector{excess_infinity_landen(LandenPair(v.at("m"), v.at("n")))};
  });
  add("excess-finite", {"a", "b", "p"}, {}, {"excess"}, [](const ParamMap& v) {
    return std::vector{excess_finite(Hyperbola(v.at("a"), v.at("b")), v.at("p"))};
  });
  add("hyperbola-arc", {"a", "b", "p"}, {}, {"rotated", "pedal"}, [](const ParamMap& v) {
    const Hyperbola h(v.at("a"), v.at("b"));
    return std::vector{hyperbola_arc(h, v.at("p")), hyperbola_arc_pedal(h, v.at("p"))};
  });
  add("tangent-length", {"m", "n", "x"}, {}, {"t"}, [](const ParamMap& v) {
    return std::vector{ellipse_tangent_length(Ellipse(v.at("m"), v.at("n")), v.at("x"))};
  });
  add("gleichung", {"phi", "k"}, {}, lhs_rhs, [](const ParamMap& v) {
    return residual_row(check_gleichung(Amplitude(v.at("phi")), Modulus(v.at("k"))));
  });
  add("borwein", {"k"}, {}, lhs_rhs,
      [](const ParamMap& v) { return residual_row(check_borwein(Modulus(v.at("k")))); });
  add("agm-invariance", {"x", "p", "q"}, {}, lhs_rhs, [](const ParamMap& v) {
    return residual_row(check_agm_invariance(v.at("x"), v.at("p"), v.at("q")));
  });
  add("landen-theorem", {"m", "n", "t"}, {},
      {"hyp_arc", "t_hyp", "eta1", "eta2", "residual"}, [](const ParamMap& v) {
        const LandenCheck c = landen_theorem_check(LandenPair(v.at("m"), v.at("n")), v.at("t"));
        const ExcessBreakdown& b = c.breakdown;
        return std::vector{b.hyp_arc, b.t_hyp, b.eta1, b.eta2, c.report.residual};
      });
  add("fagnano", {"m", "n", "t"}, {}, lhs_rhs, [](const ParamMap& v) {
    return residual_row(fagnano_check(LandenPair(v.at("m"), v.at("n")), v.at("t")));
  });
  return ops;
}

struct Prepared {
  const SweepOp* op;
  std::vector<ParamMap> points;
  SweepTable table;
};

Prepared prepare(const SweepRequest& req) {
  const SweepOp& op = find_sweep_op(req.op);
  bool sweep_known = false;
  for (const auto& p : op.params) sweep_known = sweep_known || p == req.sweep;
  if (!sweep_known) throw DomainError("table: op '" + op.name + "' has no parameter '" +
                                      req.sweep + "' to sweep");

  ParamMap base = op.defaults;
  for (const auto& [k, v] : req.fixed) base[k] = v;
  for (const auto& p : op.params) {
    if (p != req.sweep && !base.count(p))
      throw DomainError("table: op '" + op.name + "' needs --" + p);
  }

  Prepared out{&op, {}, {op.name, req.sweep, {}, {}}};
  for (const double x : sweep_points(req.from, req.to, req.step)) {
    ParamMap point;
    for (const auto& p : op.params) point[p] = p == req.sweep ? x : base.at(p);
    out.points.push_back(std::move(point));
  }
  out.table.columns = op.params;
  out.table.columns.insert(out.table.columns.end(), op.outputs.begin(), op.outputs.end());
  return out;
}

SweepTable assemble(Prepared&& prep, const std::vector<std::vector<double>>& results) {
  for (size_t i = 0; i < prep.points.size(); ++i) {
    std::vector<double> row;
    for (const auto& p : prep.op->params) row.push_back(prep.points[i].at(p));
    row.insert(row.end(), results[i].begin(), results[i].end());
    prep.table.rows.push_back(std::move(row));
  }
  return std::move(prep.table);
}

}  // namespace

const std::vector<SweepOp>& sweep_ops() {
  static const std::vector<SweepOp> ops = build_ops();
  return ops;
}

const SweepOp& find_sweep_op(const std::string& name) {
  for (const auto& op : sweep_ops())
    if (op.name == name) return op;
  throw DomainError("table: unknown op '" + name + "'");
}

std::vector<double> sweep_points(double from, double to, double step) {
  require(std::isfinite(from), "table", "finite --from", from);
  require(std::isfinite(to) && to >= from, "table", "--to >= --from", to);
  require(std::isfinite(step) && step > 0.0, "table", "--step > 0", step);
  const double span = (to - from) / step;
  require(span < kMaxSweepPoints, "table", "fewer than 1e6 sweep points", span);
  const long n = static_cast<long>(std::floor(span * (1.0 + 1e-12) + 1e-9)) + 1;
  std::vector<double> xs;
  xs.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) xs.push_back(std::fmin(from + static_cast<double>(i) * step, to));
  return xs;
}

SweepTable run_sweep(const SweepRequest& request) {
  Prepared prep = prepare(request);
  const SweepOp* op = prep.op;
  auto results = parallel_map(prep.points, [op](const ParamMap& v) { return op->eval(v); });
  return assemble(std::move(prep), results);
}

SweepTable run_sweep_serial(const SweepRequest& request) {
  Prepared prep = prepare(request);
  const SweepOp* op = prep.op;
  auto results = serial_map(prep.points, [op](const ParamMap& v) { return op->eval(v); });
  return assemble(std::move(prep), results);
}

}  // namespace conicrect
