#include "fvlab/exponents.hpp"

#include <cmath>

#include "fvlab/errors.hpp"
#include "fvlab/parallel.hpp"

namespace fvlab {

namespace {

struct LogSamples {
  std::vector<double> log_h;
  std::vector<double> log_v;
  std::vector<double> h;
};

ExponentEstimate fit_tail(const LogSamples& s, std::size_t window, ExponentSide side) {
  const std::size_t n = s.h.size();
  const std::size_t m = std::min(window, n);
  std::vector<double> xs(s.log_h.end() - m, s.log_h.end());
  std::vector<double> ys(s.log_v.end() - m, s.log_v.end());
  LinearFit fit = fit_line(xs, ys);
  ExponentEstimate e;
  e.alpha = fit.slope;
  e.residual = fit.rms;
  e.eps_hi = s.h[n - m];
  e.eps_lo = s.h[n - 1];
  e.samples = m;
  e.side = side;
  return e;
}

}  // namespace

ExponentEstimate holder_exponent(const RealFunction& f, double x, const EpsSchedule& sched) {
  VariationTrace t = trace(f, x, 0.0, Side::Forward, sched);
  LogSamples s;
  bool any_nonzero = false;
  for (auto smp : t.samples) {
    if (smp.value != 0.0) any_nonzero = true;
    if (smp.value == 0.0 || !std::isfinite(smp.value)) continue;
    s.h.push_back(smp.eps);
    s.log_h.push_back(std::log(smp.eps));
    s.log_v.push_back(std::log(std::fabs(smp.value)));
  }
  if (!t.samples.empty() && !any_nonzero) throw LocallyConstant();
  if (s.h.size() < 6) throw TooFewSamples(s.h.size(), 6);
  return fit_tail(s, 8, ExponentSide::Right);
}

ExponentEstimate critical_exponent(const RealFunction& g, double x_s, ExponentSide side,
                                   const EpsSchedule& sched, double bounded_tol) {
  if (side == ExponentSide::Symmetric) {
    throw BadParameter("critical exponent is one-sided");
  }
  LogSamples s;
  for (double h : sched.values()) {
    double v = side == ExponentSide::Left ? g(x_s - h) : g(x_s + h);
    if (!std::isfinite(v) || v == 0.0) continue;
    s.h.push_back(h);
    s.log_h.push_back(std::log(h));
    s.log_v.push_back(std::log(std::fabs(v)));
  }
  if (s.h.size() < 6) throw TooFewSamples(s.h.size(), 6);
  ExponentEstimate e = fit_tail(s, 8, side);
  e.alpha = -e.alpha;
  if (e.alpha <= bounded_tol) {
    e.alpha = 0.0;
    e.bounded = true;
  }
  return e;
}

RealFunction power_law(const PowerLawSpec& spec) {
  if (!(spec.alpha > 0.0)) throw BadParameter("power-law exponent must be positive");
  if (spec.sign != 1 && spec.sign != -1) throw BadParameter("power-law sign must be +1 or -1");
  const double e = spec.sign * spec.alpha;
  const double x0 = spec.shift, s = spec.scale;
  return RealFunction([=](double x) { return std::pow(std::fabs(s * (x - x0)), e); },
                      Domain::all_reals(), spec.sign > 0 ? "|s(x-x0)|^a" : "|s(x-x0)|^-a");
}

PowerVerdict predict_power_verdict(const PowerLawSpec& spec, double beta, double x) {
  check_order(beta);
  if (!(spec.alpha > 0.0)) throw BadParameter("power-law exponent must be positive");
  const double a = spec.alpha, s = spec.scale;
  if (x == spec.shift) {
    // Forward variation at the origin is |s|^a eps^(a - beta), or finite
    // minus +inf for the negative family.
    if (spec.sign < 0) return {LimitTag::DivergesMinus, std::nullopt};
    if (a == beta) return {LimitTag::Finite, std::pow(std::fabs(s), a)};
    return {a > beta ? LimitTag::Zero : LimitTag::DivergesPlus, std::nullopt};
  }
  const double u = s * (x - spec.shift);
  const double su = u > 0 ? 1.0 : -1.0;
  const double deriv = spec.sign > 0 ? s * su * a * std::pow(std::fabs(u), a - 1.0)
                                     : -s * su * a * std::pow(std::fabs(u), -a - 1.0);
  if (beta < 1.0) return {LimitTag::Zero, std::nullopt};
  if (beta == 1.0) return {LimitTag::Finite, deriv};
  return {deriv > 0 ? LimitTag::DivergesPlus : LimitTag::DivergesMinus, std::nullopt};
}

std::vector<PowerCell> power_grid(const std::vector<double>& alphas,
                                  const std::vector<double>& betas, const std::vector<double>& xs,
                                  int sign) {
  std::vector<PowerCell> out;
  for (double a : alphas)
    for (double b : betas)
      for (double x : xs) out.push_back({a, b, x, sign});
  return out;
}

PowerTableReport verify_power_table(const std::vector<PowerCell>& cells, const EpsSchedule& sched,
                                    unsigned threads, const ClassifyOptions& opt) {
  PowerTableReport rep;
  rep.cells.resize(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    const PowerCell& c = cells[i];
    PowerLawSpec spec{c.alpha, c.sign};
    PowerCellResult r{c, predict_power_verdict(spec, c.beta, c.x), {}, false};
    try {
      r.observed = classify(trace(power_law(spec), c.x, c.beta, Side::Forward, sched), opt);
    } catch (const TooFewSamples&) {
      r.observed.tag = LimitTag::Indeterminate;
    }
    r.match = r.observed.tag == r.predicted.tag;
    if (r.match && r.predicted.tag == LimitTag::Finite) {
      double p = *r.predicted.value, o = *r.observed.value;
      r.match = std::fabs(o - p) <= 1e-6 * std::fabs(p);
    }
    rep.cells[i] = r;
  });
  for (const auto& r : rep.cells) rep.mismatches += r.match ? 0 : 1;
  return rep;
}

const char* singular_class_name(SingularClass c) {
  switch (c) {
    case SingularClass::Zero: return "zero";
    case SingularClass::Finite: return "finite";
    case SingularClass::Unbounded: return "unbounded";
    case SingularClass::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SingularResult singular_variation_classify(const RealFunction& f, const RealFunction& fprime,
                                           double x_s, double beta, const EpsSchedule& sched,
                                           std::optional<double> exact_alpha,
                                           const SingularOptions& opt) {
  check_order(beta);
  if (beta >= 1.0) throw BadOrder("singular variation needs beta in [0, 1)");
  SingularResult r{};
  ExponentEstimate est = critical_exponent(fprime, x_s, ExponentSide::Left, sched);
  if (est.bounded) throw NotSingular("derivative is bounded at the probe point");
  r.alpha_hat = est.alpha;
  r.alpha_used = exact_alpha.value_or(est.alpha);

  const double threshold = std::fabs(1.0 - r.alpha_used);
  if (beta == threshold) {
    r.predicted = SingularClass::Finite;
  } else {
    r.predicted = beta < threshold ? SingularClass::Zero : SingularClass::Unbounded;
  }

  VariationTrace t = trace_of(sched, beta, [&](double eps) {
    double left = f(x_s - eps);
    return Difference{f(x_s) - left, left};
  });
  r.coupled = classify(t, opt.classify);
  switch (r.coupled.tag) {
    case LimitTag::Zero:
      r.observed = SingularClass::Zero;
      break;
    case LimitTag::Finite:
      r.observed = SingularClass::Finite;
      break;
    case LimitTag::DivergesPlus:
    case LimitTag::DivergesMinus: {
      std::vector<double> tail;
      for (std::size_t i = t.samples.size() - r.coupled.window; i < t.samples.size(); ++i) {
        tail.push_back(std::fabs(t.samples[i].value));
      }
      bool big = median(tail) > opt.unbounded_threshold;
      r.observed = big && r.coupled.slope < -opt.classify.slope_tol ? SingularClass::Unbounded
                                                                     : SingularClass::Inconclusive;
      break;
    }
    case LimitTag::Indeterminate:
      r.observed = SingularClass::Inconclusive;
      break;
  }

  EpsSchedule away = opt.away_schedule.value_or(default_schedule());
  r.away = classify(trace(f, x_s + opt.away_offset, beta, Side::Forward, away), opt.classify);
  r.away_zero = r.away.tag == LimitTag::Zero;
  r.matches = r.away_zero && r.predicted == r.observed;
  return r;
}

}  // namespace fvlab
