#include "conicrect/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "CLI11.hpp"
#include "conicrect/conic.hpp"
#include "conicrect/construct.hpp"
#include "conicrect/elliptic.hpp"
#include "conicrect/errors.hpp"
#include "conicrect/landen.hpp"
#include "conicrect/report.hpp"
#include "conicrect/sweep.hpp"

namespace conicrect::cli {
namespace {

RunReport make_report(std::string op, NamedValues inputs, NamedValues values) {
  RunReport r;
  r.op = std::move(op);
  r.inputs = std::move(inputs);
  r.values = std::move(values);
  return r;
}

void emit(std::ostream& out, const RunReport& r, bool json) {
  out << (json ? to_json(r) + "\n" : to_plain(r));
}

RunReport residual_report(const ResidualReport& rr, double tol) {
  RunReport r;
  r.op = "check " + rr.name;
  r.inputs = rr.inputs;
  r.values = {{"lhs", rr.lhs}, {"rhs", rr.rhs}};
  r.residual = rr.residual;
  r.tolerance = tol;
  return r;
}

int finish_check(std::ostream& out, RunReport r, bool json) {
  const bool pass = *r.residual <= *r.tolerance;
  r.passed = pass;
  emit(out, r, json);
  return pass ? kSuccess : kCheckFailed;
}

struct Options {
  // agm
  double p = 0, q = 0, tol = 0;
  // ellint / excess / checks
  std::string kind;
  double k = 0.6, phi = std::numbers::pi / 2;
  double a = 0, b = 0, m = 2, n = 1, t = 0.5, x = 0.25, pedal = 0;
  int terms = 3, steps = 1;
  double radius = 1;
  // table
  std::string op, sweep, format = "csv";
  double from = 0, to = 0, step = 0;
  std::string out_path;
  bool json = false;
};

int dispatch(CLI::App& app, Options& o, std::ostream& out) {
  auto* cmd = app.get_subcommands().front();
  const std::string verb = cmd->get_name();
  auto given = [cmd](const char* flag) { return cmd->count(flag) > 0; };

  if (verb == "agm") {
    Tolerance tol = Tolerance::agm();
    if (given("--tol")) tol.abs_tol = o.tol;
    const AgmSequence s = agm(o.p, o.q, tol);
    RunReport r = make_report("agm", {{"p", o.p}, {"q", o.q}}, {{"limit", s.limit}});
    if (given("--tol")) r.inputs.emplace_back("tol", o.tol);
    r.iterations = s.iterations;
    r.iterates = s.iterates;
    if (s.swapped) r.flags.emplace_back("inputs swapped so that p0 >= q0");
    emit(out, r, o.json);
    return kSuccess;
  }

  if (verb == "ellint") {
    const Modulus k(o.k);
    RunReport r = make_report("ellint " + o.kind, {{"k", o.k}}, {});
    if (o.kind == "K") {
      r.values = {{"K", complete_K(k)}};
    } else if (o.kind == "E") {
      r.values = {{"E", complete_E(k)}};
    } else {
      if (!given("--phi")) throw DomainError("ellint " + o.kind + ": requires --phi");
      r.inputs.emplace_back("phi", o.phi);
      const Amplitude phi(o.phi);
      if (o.kind == "F")
        r.values = {{"F", incomplete_F(phi, k)}};
      else
        r.values = {{"E", incomplete_E(phi, k)}};
    }
    emit(out, r, o.json);
    return kSuccess;
  }

  if (verb == "excess") {
    const bool semi = given("--a") || given("--b");
    const bool coeff = given("--m") || given("--n");
    if (semi == coeff) throw DomainError("excess: requires exactly one of (--a, --b) or (--m, --n)");
    if (semi && !(given("--a") && given("--b"))) throw DomainError("excess: requires both --a and --b");
    if (coeff && !(given("--m") && given("--n"))) throw DomainError("excess: requires both --m and --n");
    RunReport r = make_report("excess " + o.kind, {}, {});
    double a = o.a, b = o.b;
    if (semi) {
      r.inputs = {{"a", a}, {"b", b}};
    } else {
      r.inputs = {{"m", o.m}, {"n", o.n}};
      const Semiaxes s = pair_to_semiaxes(LandenPair(o.m, o.n));
      a = s.a;
      b = s.b;
    }
    if (o.kind == "landen") {
      const LandenPair pair = semi ? semiaxes_to_pair(a, b) : LandenPair(o.m, o.n);
      r.values = {{"excess", excess_infinity_landen(pair)}};
    } else {
      const Hyperbola h(a, b);
      if (o.kind == "closed") {
        r.values = {{"excess", excess_infinity_closed(h)}};
      } else if (o.kind == "series") {
        r.inputs.emplace_back("terms", o.terms);
        r.values = {{"excess", excess_infinity_series(h, o.terms)},
                    {"first_omitted_term", excess_series_bound(h, o.terms)}};
      } else {
        if (!given("--p")) throw DomainError("excess finite: requires --p");
        r.inputs.emplace_back("p", o.pedal);
        r.values = {{"excess", excess_finite(h, o.pedal)}};
        if (pedal_near_degenerate(h, o.pedal))
          r.flags.emplace_back("pedal distance below 1e-8 a; quadrature conditioning degraded");
      }
    }
    emit(out, r, o.json);
    return kSuccess;
  }

  if (verb == "check") {
    auto* sub = cmd->get_subcommands().front();
    const std::string name = sub->get_name();
    auto tol_or = [&](double fallback) { return sub->count("--tol") ? o.tol : fallback; };
    if (name == "gleichung") {
      const auto rr = check_gleichung(Amplitude(o.phi), Modulus(o.k), o.steps);
      return finish_check(out, residual_report(rr, tol_or(o.steps > 1 ? 1e-11 : 1e-12)), o.json);
    }
    if (name == "borwein") {
      const auto rr = check_borwein(Modulus(o.k));
      return finish_check(out, residual_report(rr, tol_or(o.k <= 0.9 ? 1e-12 : 1e-11)), o.json);
    }
    if (name == "agm-invariance") {
      const auto rr = check_agm_invariance(o.x, o.p, o.q, o.steps);
      return finish_check(out, residual_report(rr, tol_or(1e-10)), o.json);
    }
    if (name == "landen-theorem") {
      const LandenCheck c = landen_theorem_check(LandenPair(o.m, o.n), o.t);
      RunReport r = residual_report(c.report, tol_or(1e-9));
      const ExcessBreakdown& bd = c.breakdown;
      r.values = {{"hyp_arc", bd.hyp_arc}, {"t_hyp", bd.t_hyp}, {"t", bd.t},
                  {"eta1", bd.eta1},       {"eta2", bd.eta2},   {"s1", bd.s1},
                  {"s2", bd.s2},           {"limit_L", bd.limit_L}, {"rhs", c.report.rhs}};
      r.flags = bd.flags;
      return finish_check(out, r, o.json);
    }
    const auto rr = fagnano_check(LandenPair(o.m, o.n), o.t);
    return finish_check(out, residual_report(rr, tol_or(1e-9)), o.json);
  }

  if (verb == "lemniscate") {
    const Lemniscate l = lemniscate(o.radius);
    RunReport r = make_report("lemniscate", {{"radius", o.radius}},
                              {{"quarter_arc", l.quarter_arc},
                               {"full_arc", l.full_arc},
                               {"gauss_constant", l.gauss_constant}});
    emit(out, r, o.json);
    return kSuccess;
  }

  if (verb == "table") {
    SweepRequest req{o.op, o.sweep, o.from, o.to, o.step, {}};
    const std::pair<const char*, double> params[] = {
        {"k", o.k}, {"phi", o.phi}, {"p", o.p}, {"q", o.q}, {"x", o.x}, {"a", o.a},
        {"b", o.b}, {"m", o.m},     {"n", o.n}, {"t", o.t}, {"radius", o.radius},
        {"terms", static_cast<double>(o.terms)}};
    for (const auto& [name, value] : params)
      if (given((std::string("--") + name).c_str())) req.fixed[name] = value;
    const SweepTable table = run_sweep(req);
    out << (o.format == "csv" ? table_to_csv(table) : table_to_json(table) + "\n");
    return kSuccess;
  }

  // construct
  const Construction c = build_construction(o.m, o.n, o.t);
  const std::string svg = render_svg(c);
  if (o.out_path == "-") {
    out << svg;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw DomainError("construct: cannot open --out " + o.out_path);
    file << svg;
    if (!file) throw DomainError("construct: failed writing " + o.out_path);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic integrals, AGM and conic rectification", "conicrect"};
  app.require_subcommand(1);
  Options o;

  auto* agm_cmd = app.add_subcommand("agm", "arithmetic-geometric mean with iterate history");
  agm_cmd->add_option("--p", o.p, "first mean")->required();
  agm_cmd->add_option("--q", o.q, "second mean")->required();
  agm_cmd->add_option("--tol", o.tol, "absolute stopping tolerance on |p - q|");
  agm_cmd->add_flag("--json", o.json);

  auto* ell = app.add_subcommand("ellint", "complete and incomplete elliptic integrals");
  ell->add_option("kind", o.kind)->required()->check(CLI::IsMember({"K", "E", "F", "Einc"}));
  ell->add_option("--k", o.k, "modulus")->required();
  ell->add_option("--phi", o.phi, "amplitude in radians (F, Einc)");
  ell->add_flag("--json", o.json);

  auto* exc = app.add_subcommand("excess", "hyperbolic excess at infinity or at finite p");
  exc->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"closed", "series", "landen", "finite"}));
  exc->add_option("--a", o.a);
  exc->add_option("--b", o.b);
  exc->add_option("--m", o.m);
  exc->add_option("--n", o.n);
  exc->add_option("--terms", o.terms)->check(CLI::Range(1, 3));
  exc->add_option("--p", o.pedal, "pedal distance (finite)");
  exc->add_flag("--json", o.json);

  auto* chk = app.add_subcommand("check", "residual of one identity");
  chk->require_subcommand(1);
  auto add_check = [&](const char* name, const char* desc) {
    auto* c = chk->add_subcommand(name, desc);
    c->add_option("--tol", o.tol, "pass threshold on the residual")
        ->check(CLI::NonNegativeNumber);
    c->add_flag("--json", o.json);
    return c;
  };
  auto* gl = add_check("gleichung", "F(phi,k) = 2/(1+k) F(phi_hat, k_hat)");
  gl->add_option("--phi", o.phi)->capture_default_str();
  gl->add_option("--k", o.k)->capture_default_str();
  gl->add_option("--steps", o.steps)->check(CLI::Range(1, 2));
  auto* bw = add_check("borwein", "E(k) = (1+k)/2 E(k_hat) + (1-k^2)/2 K(k)");
  bw->add_option("--k", o.k);
  auto* ai = add_check("agm-invariance", "Lagrange integral across one AGM step");
  ai->add_option("--x", o.x);
  ai->add_option("--p", o.p);
  ai->add_option("--q", o.q);
  ai->add_option("--steps", o.steps)->check(CLI::Range(1, 2));
  auto* lt = add_check("landen-theorem", "Hyp = t_Hyp + 2t + eta1 - 4 eta2");
  auto* fg = add_check("fagnano", "arc difference of two points with equal tangent length");
  for (auto* c : {lt, fg}) {
    c->add_option("--m", o.m);
    c->add_option("--n", o.n);
    c->add_option("--t", o.t);
  }

  auto* lem = app.add_subcommand("lemniscate", "lemniscate arcs and Gauss's constant");
  lem->add_option("--radius", o.radius)->required();
  lem->add_flag("--json", o.json);

  auto* tab = app.add_subcommand("table", "sweep one parameter of an operation");
  tab->add_option("--op", o.op)->required();
  tab->add_option("--sweep", o.sweep)->required();
  tab->add_option("--from", o.from)->required();
  tab->add_option("--to", o.to)->required();
  tab->add_option("--step", o.step)->required();
  tab->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  for (auto [flag, ptr] : {std::pair{"--k", &o.k}, {"--phi", &o.phi}, {"--p", &o.p},
                           {"--q", &o.q}, {"--x", &o.x}, {"--a", &o.a}, {"--b", &o.b},
                           {"--m", &o.m}, {"--n", &o.n}, {"--t", &o.t}, {"--radius", &o.radius}})
    tab->add_option(flag, *ptr, "fixed parameter");
  tab->add_option("--terms", o.terms, "fixed parameter");

  auto* con = app.add_subcommand("construct", "SVG of the Landen construction");
  con->add_option("--m", o.m)->required();
  con->add_option("--n", o.n)->required();
  con->add_option("--t", o.t)->required();
  con->add_option("--out", o.out_path, "output path, - for stdout")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  // borwein and agm-invariance share flags with other verbs but use their own defaults.
  if (bw->parsed() && !bw->count("--k")) o.k = 1.0 / 9.0;
  if (ai->parsed()) {
    if (!ai->count("--p")) o.p = 2.0;
    if (!ai->count("--q")) o.q = 1.0;
  }

  try {
    return dispatch(app, o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const IntegrandError& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace conicrect::cli
