#include "fvlab/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fvlab/errors.hpp"

namespace fvlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_power_of_two(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) return false;
  int e = 0;
  return std::frexp(v, &e) == 0.5;
}

}  // namespace

std::vector<double> EpsSchedule::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  double e = eps0;
  for (int k = 0; k < steps; ++k) {
    out.push_back(e);
    e *= ratio;
  }
  return out;
}

EpsSchedule make_schedule(double eps0, double ratio, int steps, double min_eps) {
  if (!is_power_of_two(eps0) || eps0 > 1.0) {
    throw BadSchedule("eps0 must be a power of two not above 1");
  }
  if (!is_power_of_two(ratio) || ratio >= 1.0) {
    throw BadSchedule("ratio must be a power of two in (0, 1)");
  }
  if (steps < 8) throw BadSchedule("schedule needs at least 8 steps");
  // Compare exponents so that the check itself cannot underflow.
  int e0 = 0, er = 0;
  std::frexp(eps0, &e0);
  std::frexp(ratio, &er);
  double last_log2 = (e0 - 1) + static_cast<double>(steps - 1) * (er - 1);
  if (last_log2 < std::log2(min_eps)) {
    throw BadSchedule("schedule goes below the smallest allowed step");
  }
  return {eps0, ratio, steps, min_eps};
}

EpsSchedule default_schedule() { return make_schedule(0x1p-4, 0.5, 30); }

VariationTrace trace_of(const EpsSchedule& sched, double beta,
                        const std::function<Difference(double eps)>& diff) {
  check_order(beta);
  VariationTrace t;
  t.beta = beta;
  bool seen_nonzero = false;
  for (double eps : sched.values()) {
    Difference d = diff(eps);
    if (std::isnan(d.value)) {
      t.truncation = Truncation::Undefined;
      break;
    }
    double floor = std::isfinite(d.reference) ? 1e3 * ulp(d.reference) : 0.0;
    t.floor = std::max(t.floor, floor);
    if (std::isfinite(d.value)) {
      if (d.value == 0.0) {
        if (seen_nonzero) {
          t.truncation = Truncation::CancellationFloor;
          break;
        }
      } else {
        if (std::fabs(d.value) < floor) {
          t.truncation = Truncation::CancellationFloor;
          break;
        }
        seen_nonzero = true;
      }
    } else {
      seen_nonzero = true;
    }
    t.samples.push_back({eps, d.value / eps_pow(eps, beta)});
  }
  return t;
}

VariationTrace trace(const RealFunction& f, double x, double beta, Side side,
                     const EpsSchedule& sched) {
  double fx = f(x);
  VariationTrace t = trace_of(sched, beta, [&](double eps) {
    return Difference{side_diff(f, x, eps, side), fx};
  });
  t.description = f.description();
  t.x = x;
  t.side = side;
  return t;
}

std::string_view tag_name(LimitTag t) {
  switch (t) {
    case LimitTag::Zero: return "Zero";
    case LimitTag::Finite: return "Finite";
    case LimitTag::DivergesPlus: return "DivergesPlus";
    case LimitTag::DivergesMinus: return "DivergesMinus";
    case LimitTag::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

LimitTag parse_tag(std::string_view name) {
  for (LimitTag t : {LimitTag::Zero, LimitTag::Finite, LimitTag::DivergesPlus,
                     LimitTag::DivergesMinus, LimitTag::Indeterminate}) {
    if (tag_name(t) == name) return t;
  }
  throw BadParameter("unknown verdict tag '" + std::string(name) + "'");
}

LinearFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n < 2 || ys.size() != n) return {std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0};
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  double slope = sxy / sxx;
  double icept = my - slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = ys[i] - (slope * xs[i] + icept);
    ss += r * r;
  }
  return {slope, icept, std::sqrt(ss / n)};
}

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

LimitVerdict classify(const VariationTrace& t, const ClassifyOptions& opt) {
  const std::size_t n = t.samples.size();
  if (n < opt.min_samples) throw TooFewSamples(n, opt.min_samples);
  const std::size_t m = std::min(opt.window, n);
  std::vector<TraceSample> tail(t.samples.end() - m, t.samples.end());

  LimitVerdict v;
  v.window = m;
  v.eps_hi = tail.front().eps;
  v.eps_lo = tail.back().eps;

  bool all_zero = std::all_of(tail.begin(), tail.end(), [](auto s) { return s.value == 0.0; });
  if (all_zero) {
    v.tag = LimitTag::Zero;
    v.slope = kInf;
    return v;
  }

  int pos = 0, neg = 0;
  bool any_inf = false;
  double maxabs = 0.0;
  for (auto s : tail) {
    if (s.value > 0) ++pos;
    if (s.value < 0) ++neg;
    if (std::isinf(s.value)) any_inf = true;
    maxabs = std::max(maxabs, std::fabs(s.value));
  }
  if (any_inf) {
    v.slope = -kInf;
    if (pos > 0 && neg > 0) {
      v.tag = LimitTag::Indeterminate;
    } else {
      v.tag = pos > 0 ? LimitTag::DivergesPlus : LimitTag::DivergesMinus;
    }
    return v;
  }

  // Sign flips among values that are not negligible relative to the tail.
  const double small = opt.zero_tol * maxabs;
  int flips = 0, last_sign = 0;
  for (auto s : tail) {
    if (std::fabs(s.value) <= small) continue;
    int sg = s.value > 0 ? 1 : -1;
    if (last_sign != 0 && sg != last_sign) ++flips;
    last_sign = sg;
  }

  std::vector<double> xs, ys, vals;
  double last_nonzero = 0.0;
  for (auto s : tail) {
    vals.push_back(s.value);
    if (s.value != 0.0) {
      xs.push_back(std::log(s.eps));
      ys.push_back(std::log(std::fabs(s.value)));
      last_nonzero = s.value;
    }
  }
  if (xs.size() < 3) {
    v.tag = flips >= 2 ? LimitTag::Indeterminate : LimitTag::Zero;
    v.slope = kInf;
    return v;
  }
  LinearFit fit = fit_line(xs, ys);
  v.slope = fit.slope;
  v.residual = fit.rms;
  if (flips >= 2) {
    v.tag = LimitTag::Indeterminate;
  } else if (fit.slope > opt.slope_tol) {
    v.tag = LimitTag::Zero;
  } else if (fit.slope < -opt.slope_tol) {
    v.tag = last_nonzero > 0 ? LimitTag::DivergesPlus : LimitTag::DivergesMinus;
  } else {
    v.tag = LimitTag::Finite;
    v.value = median(vals);
  }
  return v;
}

DualityResult duality_check(const RealFunction& f, double x, double beta,
                            const EpsSchedule& sched, const ClassifyOptions& opt) {
  DualityResult r;
  r.forward = classify(trace(f, x, beta, Side::Forward, sched), opt);
  r.backward = classify(trace(f, x, beta, Side::Backward, sched), opt);
  double fx = f(x);
  VariationTrace t2 = trace_of(sched, beta, [&](double eps) {
    return Difference{second_diff(f, x, eps), fx};
  });
  r.second = classify(t2, opt);
  bool fwd_ok = r.forward.tag == LimitTag::Zero || r.forward.tag == LimitTag::Finite;
  r.hypothesis = fwd_ok && r.second.tag == LimitTag::Zero;
  r.value_gap = 0.0;
  r.agree = r.forward.tag == r.backward.tag;
  if (r.agree && r.forward.tag == LimitTag::Finite) {
    r.value_gap = std::fabs(*r.forward.value - *r.backward.value);
    r.agree = r.value_gap <= 10.0 * opt.zero_tol;
  }
  return r;
}

DerivLimitResult deriv_limit_check(const RealFunction& f, const RealFunction& fprime, double x,
                                   double beta, const EpsSchedule& sched,
                                   const ClassifyOptions& opt) {
  check_order(beta);
  if (beta == 0.0) throw BadOrder("derivative limit needs beta > 0");
  VariationTrace t = trace(f, x, beta, Side::Forward, sched);
  DerivLimitResult r{};
  r.verdict = classify(t, opt);
  const std::size_t m = std::min(opt.window, t.samples.size());
  std::vector<double> gaps;
  for (std::size_t i = t.samples.size() - m; i < t.samples.size(); ++i) {
    double eps = t.samples[i].eps;
    double model = std::pow(eps, 1.0 - beta) * fprime(x + eps) / beta;
    double gap = std::fabs(t.samples[i].value - model);
    r.max_gap = std::max(r.max_gap, gap);
    // Rounding in f(x + eps) - f(x) alone can move v by this much.
    double noise = 4.0 * ulp(std::max(std::fabs(f(x)), std::fabs(f(x + eps)))) / eps_pow(eps, beta);
    gaps.push_back(std::max(0.0, gap - noise));
  }
  r.first_gap = gaps.front();
  r.last_gap = gaps.back();
  r.passed = r.last_gap < r.first_gap || r.last_gap == 0.0;
  if (beta == 1.0) {
    double d = fprime(x);
    bool finite = r.verdict.tag == LimitTag::Finite &&
                  std::fabs(*r.verdict.value - d) <= 1e-6 * std::fabs(d);
    r.passed = r.passed && finite;
  }
  return r;
}

}  // namespace fvlab
