// Command-line front end: limit, scan, delta, comb.
//
// Exit status: 0 success, 1 failed check or mismatch, 2 bad input.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fvlab/deltalab.hpp"
#include "fvlab/errors.hpp"
#include "fvlab/exponents.hpp"
#include "fvlab/expr.hpp"
#include "fvlab/io.hpp"
#include "fvlab/singular.hpp"
#include "svg.hpp"

using namespace fvlab;
using nlohmann::json;

namespace {

struct ScheduleFlags {
  double eps0 = 0x1p-4;
  double ratio = 0.5;
  int steps = 30;

  void add(CLI::App* cmd) {
    cmd->add_option("--eps0", eps0, "First step (power of two)")->capture_default_str();
    cmd->add_option("--ratio", ratio, "Step ratio (power of two below 1)")->capture_default_str();
    cmd->add_option("--steps", steps, "Number of steps")->capture_default_str();
  }
  EpsSchedule build() const { return make_schedule(eps0, ratio, steps); }
};

struct Outputs {
  std::string csv;
  std::string json_path;
  std::string svg;

  void add(CLI::App* cmd, const char* csv_help) {
    cmd->add_option("--csv", csv, csv_help);
    cmd->add_option("--json", json_path, "Write the summary JSON here as well");
    cmd->add_option("--svg", svg, "Render a basic plot to this file");
  }
};

std::string tag_color(LimitTag t) {
  switch (t) {
    case LimitTag::Zero: return "#9ecae1";
    case LimitTag::Finite: return "#a1d99b";
    case LimitTag::DivergesPlus: return "#fc9272";
    case LimitTag::DivergesMinus: return "#fdae6b";
    case LimitTag::Indeterminate: return "#bdbdbd";
  }
  return "#bdbdbd";
}

void emit(const json& summary, const Outputs& out) {
  std::string text = json_text(summary);
  std::cout << text;
  if (!out.json_path.empty()) write_file(out.json_path, text);
}

// limit ---------------------------------------------------------------

struct LimitArgs {
  std::string fn;
  double x = 0.0;
  double beta = 0.5;
  std::string side = "forward";
  ScheduleFlags sched;
  Outputs out;
};

int run_limit(const LimitArgs& a) {
  RealFunction f = parse_function(a.fn);
  Side side = a.side == "backward" ? Side::Backward : Side::Forward;
  VariationTrace t = trace(f, a.x, a.beta, side, a.sched.build());
  LimitVerdict v = classify(t);
  if (!a.out.csv.empty()) write_file(a.out.csv, trace_csv(t));
  if (!a.out.svg.empty()) {
    svg::Series s;
    for (auto smp : t.samples) {
      s.x.push_back(smp.eps);
      s.y.push_back(smp.value);
    }
    s.color = "#3182bd";
    write_file(a.out.svg, svg::loglog_scatter({s}, a.fn + " at x=" + format_double(a.x)));
  }
  emit(verdict_json(v), a.out);
  return 0;
}

// scan ----------------------------------------------------------------

struct ScanArgs {
  std::string family = "pow";
  std::vector<double> alphas, betas, xs;
  ScheduleFlags sched;
  Outputs out;
  unsigned threads = 0;
};

int run_scan(ScanArgs a) {
  int sign = +1;
  if (a.family == "powneg") {
    sign = -1;
    if (a.alphas.empty()) a.alphas = {0.3, 0.7};
    if (a.betas.empty()) a.betas = {0.5, 1.0};
  } else {
    if (a.alphas.empty()) a.alphas = {0.3, 0.5, 0.7, 1.0, 1.5};
    if (a.betas.empty()) a.betas = {0.3, 0.5, 0.7, 1.0};
  }
  if (a.xs.empty()) a.xs = {-0.5, 0.0, 0.5};
  for (double al : a.alphas) {
    if (!(al > 0)) throw BadParameter("alphas must be positive");
  }
  PowerTableReport rep =
      verify_power_table(power_grid(a.alphas, a.betas, a.xs, sign), a.sched.build(), a.threads);

  std::vector<std::vector<std::string>> rows;
  for (const auto& c : rep.cells) {
    rows.push_back({format_double(c.cell.alpha), format_double(c.cell.beta),
                    format_double(c.cell.x), std::string(tag_name(c.predicted.tag)),
                    std::string(tag_name(c.observed.tag)),
                    c.observed.value ? format_double(*c.observed.value) : "",
                    format_double(c.observed.slope)});
  }
  if (!a.out.csv.empty()) {
    write_file(a.out.csv,
               csv_text({"alpha", "beta", "x", "predicted", "observed", "value", "slope"}, rows));
  }
  if (!a.out.svg.empty()) {
    std::vector<svg::Cell> cells;
    std::vector<std::string> cols, rlabels;
    for (double al : a.alphas)
      for (double x : a.xs) cols.push_back("a=" + format_double(al) + " x=" + format_double(x));
    for (double b : a.betas) rlabels.push_back("beta=" + format_double(b));
    const int nx = static_cast<int>(a.xs.size()), nb = static_cast<int>(a.betas.size());
    for (std::size_t i = 0; i < rep.cells.size(); ++i) {
      int ia = static_cast<int>(i) / (nb * nx), ib = (static_cast<int>(i) / nx) % nb,
          ix = static_cast<int>(i) % nx;
      const auto& c = rep.cells[i];
      cells.push_back({ia * nx + ix, ib, std::string(tag_name(c.observed.tag)) + (c.match ? "" : "!"),
                       tag_color(c.observed.tag)});
    }
    write_file(a.out.svg, svg::tile_grid(cells, cols, rlabels, a.family + " limit verdicts"));
  }
  json summary;
  summary["family"] = a.family;
  summary["cells"] = rep.cells.size();
  summary["mismatches"] = rep.mismatches;
  emit(summary, a.out);
  return rep.mismatches == 0 ? 0 : 1;
}

// delta ---------------------------------------------------------------

struct DeltaArgs {
  std::string kind = "rect";
  double beta = 0.5;
  int nmin = 4;
  int nmax = 20;
  double u0 = 1.0;
  std::optional<double> p;
  double k = 1.0;
  ScheduleFlags sched;
  Outputs out;
};

int run_delta(const DeltaArgs& a) {
  if (a.kind == "smooth") {
    ScaleSubstitution sub{a.p.value_or(1.0), a.k, a.beta};
    SEpsScan scan = s_eps_scan(SmoothPrototype::cauchy(), sub, a.sched.build());
    std::vector<std::vector<std::string>> rows;
    svg::Series s;
    for (auto r : scan.rows) {
      rows.push_back({format_double(r.eps), format_double(r.s), format_double(r.upsilon)});
      s.x.push_back(r.eps);
      s.y.push_back(r.upsilon);
    }
    if (!a.out.csv.empty()) write_file(a.out.csv, csv_text({"eps", "s", "upsilon"}, rows));
    if (!a.out.svg.empty()) {
      s.color = "#756bb1";
      write_file(a.out.svg, svg::loglog_scatter({s}, "s/eps scan"));
    }
    json summary;
    summary["slope"] = number_or_null(scan.slope);
    summary["admissible"] = scan.admissible;
    bool ok = true;
    if (sub.p == 1.0 && sub.k == 1.0) {
      ok = std::fabs(scan.slope + (1.0 + a.beta)) <= 0.05;
      summary["expected_slope"] = -(1.0 + a.beta);
      summary["passed"] = ok;
    }
    emit(summary, a.out);
    return ok ? 0 : 1;
  }

  DeltaKind kind;
  if (a.kind == "rect") {
    kind = DeltaKind::Rectangular;
  } else if (a.kind == "tri") {
    kind = DeltaKind::Triangular;
  } else {
    throw BadParameter("kind must be rect, tri or smooth");
  }
  DeltaScaling sc = delta_scaling_check(kind, a.beta, a.nmin, a.nmax, a.u0);
  std::vector<std::vector<std::string>> rows;
  svg::Series s;
  for (const auto& r : sc.rows) {
    rows.push_back({std::to_string(r.n), format_double(r.eps), format_double(r.x),
                    format_double(r.value)});
    s.x.push_back(r.eps);
    s.y.push_back(r.value);
  }
  if (!a.out.csv.empty()) write_file(a.out.csv, csv_text({"n", "eps", "x", "value"}, rows));
  if (!a.out.svg.empty()) {
    s.color = "#e6550d";
    write_file(a.out.svg, svg::loglog_scatter({s}, a.kind + " delta sequence shell values"));
  }
  bool ok = sc.sign_ok && std::fabs(sc.slope + (1.0 + a.beta)) <= 0.02;
  json summary;
  summary["slope"] = number_or_null(sc.slope);
  summary["expected_slope"] = -(1.0 + a.beta);
  summary["sign_ok"] = sc.sign_ok;
  summary["passed"] = ok;
  emit(summary, a.out);
  return ok ? 0 : 1;
}

// comb ----------------------------------------------------------------

struct CombArgs {
  std::string fn;
  double lo = 0.0;
  double hi = 6.3;
  double pitch = 0.05;
  double beta = 0.5;
  ScheduleFlags sched;
  Outputs out;
  unsigned threads = 0;
};

int run_comb(const CombArgs& a) {
  if (!(a.lo < a.hi) || !std::isfinite(a.lo) || !std::isfinite(a.hi)) {
    throw BadParameter("interval must satisfy lo < hi");
  }
  RealFunction f = parse_function(a.fn);
  CombReport rep = comb_scan(f, a.lo, a.hi, a.pitch, a.beta, a.sched.build(), a.threads);
  json points = json::array();
  for (const auto& p : rep.points) {
    points.push_back({{"x", p.x}, {"tag", std::string(tag_name(p.tag))}});
  }
  json summary;
  summary["points"] = points;
  summary["background_zero_fraction"] = rep.background_zero_fraction;
  if (!a.out.csv.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : rep.grid) {
      rows.push_back({format_double(g.x), format_double(g.probe), g.coupled ? "1" : "0",
                      std::string(tag_name(g.verdict.tag)), format_double(g.verdict.slope)});
    }
    write_file(a.out.csv, csv_text({"x", "probe", "coupled", "tag", "slope"}, rows));
  }
  if (!a.out.svg.empty()) {
    std::vector<svg::Cell> cells;
    for (std::size_t i = 0; i < rep.grid.size(); ++i) {
      cells.push_back({static_cast<int>(i), 0, "", tag_color(rep.grid[i].verdict.tag)});
    }
    write_file(a.out.svg, svg::tile_grid(cells, {}, {"verdict"}, a.fn + " comb scan"));
  }
  emit(summary, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractal variation laboratory"};
  app.require_subcommand(1);

  LimitArgs la;
  auto* limit = app.add_subcommand("limit", "Trace and classify the variation limit at a point");
  limit->add_option("--fn", la.fn, "Function of x")->required();
  limit->add_option("--x", la.x, "Probe point")->capture_default_str();
  limit->add_option("--beta", la.beta, "Variation order")->capture_default_str();
  limit->add_option("--side", la.side, "forward or backward")
      ->check(CLI::IsMember({"forward", "backward"}))
      ->capture_default_str();
  la.sched.add(limit);
  la.out.add(limit, "Write the trace CSV (eps,value) here");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Power-law limit table: predicted against observed");
  scan->add_option("--family", sa.family, "pow (|x|^a) or powneg (|x|^-a)")
      ->check(CLI::IsMember({"pow", "powneg"}))
      ->capture_default_str();
  scan->add_option("--alphas", sa.alphas, "Comma-separated exponents")->delimiter(',');
  scan->add_option("--betas", sa.betas, "Comma-separated orders")->delimiter(',');
  scan->add_option("--xs", sa.xs, "Comma-separated probe points")->delimiter(',');
  scan->add_option("--threads", sa.threads, "Worker threads (0 = all cores)");
  sa.sched.add(scan);
  sa.out.add(scan, "Write the phase-diagram CSV here");

  DeltaArgs da;
  auto* delta = app.add_subcommand("delta", "Delta-sequence scaling and the s/eps scan");
  delta->add_option("--kind", da.kind, "rect, tri or smooth")
      ->check(CLI::IsMember({"rect", "tri", "smooth"}))
      ->capture_default_str();
  delta->add_option("--beta", da.beta, "Variation order")->capture_default_str();
  delta->add_option("--nmin", da.nmin, "First sequence index")->capture_default_str();
  delta->add_option("--nmax", da.nmax, "Last sequence index")->capture_default_str();
  delta->add_option("--u0", da.u0, "Base scale in (0, 2)")->capture_default_str();
  delta->add_option("--p", da.p, "Smooth kind: exponent in s = k eps^p (default 1)");
  delta->add_option("--k", da.k, "Smooth kind: prefactor in s = k eps^p")->capture_default_str();
  da.sched.add(delta);
  da.out.add(delta, "Write per-n (or per-eps) rows here");

  CombArgs ca;
  auto* comb = app.add_subcommand("comb", "Locate delta-comb singularities on an interval");
  comb->add_option("--fn", ca.fn, "Function of x")->required();
  comb->add_option("--lo", ca.lo, "Interval start")->capture_default_str();
  comb->add_option("--hi", ca.hi, "Interval end")->capture_default_str();
  comb->add_option("--pitch", ca.pitch, "Grid pitch")->capture_default_str();
  comb->add_option("--beta", ca.beta, "Variation order below 1")->capture_default_str();
  comb->add_option("--threads", ca.threads, "Worker threads (0 = all cores)");
  ca.sched.add(comb);
  ca.out.add(comb, "Write per-grid-point verdicts here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*limit) return run_limit(la);
    if (*scan) return run_scan(sa);
    if (*delta) return run_delta(da);
    if (*comb) return run_comb(ca);
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownIdentifier& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
