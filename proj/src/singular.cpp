#include "fvlab/singular.hpp"

#include <algorithm>
#include <cmath>

#include "fvlab/errors.hpp"
#include "fvlab/parallel.hpp"

namespace fvlab {

namespace {

std::vector<double> make_grid(double lo, double hi, double pitch) {
  std::vector<double> g;
  for (std::size_t i = 0;; ++i) {
    double x = lo + static_cast<double>(i) * pitch;
    if (!(x < hi)) break;
    g.push_back(x);
  }
  g.push_back(hi);
  return g;
}

VariationTrace coupled_trace(const RealFunction& f, double x_s, double beta,
                             const EpsSchedule& sched) {
  return trace_of(sched, beta, [&](double eps) {
    double near = f(x_s + eps);
    return Difference{f(x_s + 2.0 * eps) - near, near};
  });
}

double tail_median_abs(const VariationTrace& t, std::size_t window) {
  std::vector<double> v;
  std::size_t m = std::min(window, t.samples.size());
  for (std::size_t i = t.samples.size() - m; i < t.samples.size(); ++i) {
    v.push_back(std::fabs(t.samples[i].value));
  }
  return median(v);
}

bool diverges(LimitTag t) { return t == LimitTag::DivergesPlus || t == LimitTag::DivergesMinus; }

}  // namespace

std::vector<double> locate_poles(const RealFunction& f, double lo, double hi, double pitch) {
  std::vector<double> poles = f.domain().poles_in(lo - pitch / 2, hi + pitch / 2);
  if (!poles.empty() || f.domain().has_poles()) return poles;

  // Nothing declared: look for sign changes that blow up under bisection,
  // and for grid points where f itself is not finite.
  std::vector<double> grid = make_grid(lo, hi, pitch);
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid[i]);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(vals[i])) poles.push_back(grid[i]);
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double fa = vals[i], fb = vals[i + 1];
    if (!std::isfinite(fa) || !std::isfinite(fb) || (fa < 0) == (fb < 0)) continue;
    double a = grid[i], b = grid[i + 1];
    // A grid point can sit on the rounded pole itself, so measure the blow-up
    // against the calmer end of the bracket.
    double scale = std::min(std::fabs(fa), std::fabs(fb));
    if (scale == 0.0) continue;
    for (int it = 0; it < 200 && b - a > 0; ++it) {
      double m = a + (b - a) / 2;
      if (m == a || m == b) break;
      double fm = f(m);
      if (!std::isfinite(fm)) {
        a = b = m;
        break;
      }
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
        fb = fm;
      }
    }
    double peak = std::max(std::fabs(f(a)), std::fabs(f(b)));
    if (!std::isfinite(peak) || peak > 1e6 * scale) poles.push_back(a);
  }
  std::sort(poles.begin(), poles.end());
  poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
  return poles;
}

CombReport comb_scan(const RealFunction& f, double lo, double hi, double pitch, double beta,
                     const EpsSchedule& sched, unsigned threads, const ClassifyOptions& opt) {
  if (!(pitch > 0.0) || !std::isfinite(pitch)) throw BadPitch("pitch must be positive");
  if (!(lo < hi)) throw BadParameter("scan interval must satisfy lo < hi");
  check_order(beta);
  if (beta >= 1.0) throw BadOrder("comb scan needs beta < 1");

  std::vector<double> grid = make_grid(lo, hi, pitch);
  CombReport rep;
  rep.grid.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) rep.grid[i] = {grid[i], grid[i], false, {}, 0.0};

  for (double p : locate_poles(f, lo, hi, pitch)) {
    auto it = std::min_element(grid.begin(), grid.end(), [p](double a, double b) {
      return std::fabs(a - p) < std::fabs(b - p);
    });
    if (std::fabs(*it - p) <= pitch / 2) {
      auto& g = rep.grid[static_cast<std::size_t>(it - grid.begin())];
      g.probe = p;
      g.coupled = true;
    }
  }

  parallel_for(grid.size(), threads, [&](std::size_t i) {
    CombGridPoint& g = rep.grid[i];
    VariationTrace t = g.coupled ? coupled_trace(f, g.probe, beta, sched)
                                 : trace(f, g.x, beta, Side::Forward, sched);
    try {
      g.verdict = classify(t, opt);
      g.tail_abs = tail_median_abs(t, opt.window);
    } catch (const TooFewSamples&) {
      g.verdict.tag = LimitTag::Indeterminate;
    }
  });

  std::size_t zeros = 0;
  for (std::size_t i = 0; i < rep.grid.size();) {
    if (rep.grid[i].verdict.tag == LimitTag::Zero) ++zeros;
    if (!diverges(rep.grid[i].verdict.tag)) {
      ++i;
      continue;
    }
    std::size_t best = i;
    std::size_t j = i;
    for (; j < rep.grid.size() && diverges(rep.grid[j].verdict.tag); ++j) {
      if (rep.grid[j].tail_abs > rep.grid[best].tail_abs) best = j;
    }
    rep.points.push_back({rep.grid[best].x, rep.grid[best].verdict.tag});
    i = j;
  }
  rep.background_zero_fraction = static_cast<double>(zeros) / static_cast<double>(rep.grid.size());
  return rep;
}

CoupledSlopeResult coupled_slope_check(const RealFunction& f, double x_s,
                                       double alpha, double beta,
                                       const EpsSchedule& sched, double tol) {
  check_order(beta);
  if (!(alpha + beta > 1.0)) throw NotSingular("needs alpha + beta > 1");
  CoupledSlopeResult r{};
  r.verdict = classify(coupled_trace(f, x_s, beta, sched));
  r.slope = r.verdict.slope;
  r.passed = std::fabs(r.slope + (alpha + beta)) <= tol;
  return r;
}

}  // namespace fvlab
