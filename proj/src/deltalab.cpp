#include "fvlab/deltalab.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fvlab/errors.hpp"
#include "fvlab/quadrature.hpp"

namespace fvlab {

SmoothPrototype SmoothPrototype::cauchy() {
  return {fn::cauchy_kernel(), -2.0 / std::numbers::pi, 24.0 / std::numbers::pi};
}

void SmoothPrototype::validate() const {
  if (!(b < 0.0)) throw BadPrototype("psi''(0) must be negative");
  if (!(c > 0.0)) throw BadPrototype("psi''''(0) must be positive");
  if (!(psi(0.0) > 0.0)) throw BadPrototype("psi(0) must be positive");
  for (int i = 1; i <= 64; ++i) {
    double x = i / 8.0;
    if (psi(x) != psi(-x)) throw BadPrototype("psi is not even");
  }
  double mass = 0.0;
  try {
    mass = integrate([this](double x) { return psi(x); }, -INFINITY, INFINITY,
                     geometric_breaks(1.0, 1e3))
               .value;
  } catch (const QuadratureFailure&) {
    throw BadPrototype("psi is not integrable");
  }
  if (std::fabs(mass - 1.0) > 1e-8) throw BadPrototype("psi does not integrate to 1");
}

double DeltaSeqSpec::eps() const { return std::ldexp(u0, -n); }

void DeltaSeqSpec::validate() const {
  if (!(u0 > 0.0 && u0 < 2.0)) throw BadParameter("base scale must lie in (0, 2)");
  if (n < 1) throw BadParameter("sequence index must be at least 1");
  if (kind == DeltaKind::Smooth) {
    if (!proto) throw BadParameter("smooth sequence needs a prototype");
    if (!(s > 0.0 && s <= 1.0)) throw BadParameter("kernel scale must lie in (0, 1]");
  }
}

double delta_eval(const DeltaSeqSpec& spec, double x) {
  const double e = spec.eps();
  switch (spec.kind) {
    case DeltaKind::Rectangular:
      return std::fabs(x) < e ? 1.0 / (2.0 * e) : 0.0;
    case DeltaKind::Triangular:
      return std::fabs(x) < e ? (1.0 - std::fabs(x) / e) / e : 0.0;
    case DeltaKind::Smooth:
      return spec.proto->psi(x / spec.s) / spec.s;
  }
  return 0.0;
}

double fracvar_delta_brute(const DeltaSeqSpec& spec, double x, double beta) {
  const double e = spec.eps();
  return (delta_eval(spec, x + e) - delta_eval(spec, x)) / eps_pow(e, beta);
}

double fracvar_delta_exact(const DeltaSeqSpec& spec, double x, double beta) {
  check_order(beta);
  if (beta > 1.0) throw BadOrder("delta-sequence variation needs beta <= 1");
  if (spec.kind == DeltaKind::Smooth) throw BadParameter("closed form needs rect or tri kind");
  const double e = spec.eps();
  const double p = eps_pow(e, beta);
  if (spec.kind == DeltaKind::Rectangular) {
    const double h = 1.0 / (2.0 * e);
    if (x > -2.0 * e && x <= -e) return h / p;
    if (x >= 0.0 && x < e) return -h / p;
    return 0.0;  // includes (-e, 0), where both points sit on the plateau
  }
  // Triangle: rising edge (1 + t/e)/e for t < 0, falling edge (1 - t/e)/e.
  if (x > -2.0 * e && x <= -e) return (1.0 + (x + e) / e) / e / p;
  if (x > -e && x < 0.0) return ((1.0 - (x + e) / e) / e - (1.0 + x / e) / e) / p;
  if (x >= 0.0 && x < e) return -((1.0 - x / e) / e) / p;
  return 0.0;
}

Extremum smooth_extremum(const SmoothPrototype& proto, double s) {
  if (!(proto.b < 0.0 && proto.c > 0.0)) throw BadPrototype("need psi''(0) < 0 < psi''''(0)");
  if (!(s > 0.0)) throw BadParameter("kernel scale must be positive");
  const double r = std::sqrt(-2.0 * proto.b / proto.c);
  return {r * s, (2.0 * proto.b / (3.0 * s * s)) * r};
}

DeltaScaling delta_scaling_check(DeltaKind kind, double beta, int n_lo, int n_hi, double u0,
                                 const std::optional<SmoothPrototype>& proto) {
  check_order(beta);
  if (beta > 1.0) throw BadOrder("delta-sequence variation needs beta <= 1");
  if (n_hi - n_lo + 1 < 3) throw TooFewSamples(std::max(0, n_hi - n_lo + 1), 3);
  DeltaScaling out{0.0, 0.0, true, {}};
  std::vector<double> xs, ys;
  for (int n = n_lo; n <= n_hi; ++n) {
    DeltaSeqSpec spec{kind, u0, n, std::nullopt, 0.0};
    double x = 0.0, v = 0.0;
    if (kind == DeltaKind::Smooth) {
      spec.proto = proto ? *proto : SmoothPrototype::cauchy();
      spec.s = spec.eps();
      spec.validate();
      x = smooth_extremum(*spec.proto, spec.s).x_m;
      v = fracvar_delta_brute(spec, x, beta);
    } else {
      spec.validate();
      x = spec.eps() / 2.0;
      v = fracvar_delta_exact(spec, x, beta);
    }
    out.rows.push_back({n, spec.eps(), x, v});
    if (!(v < 0.0)) out.sign_ok = false;
    if (v != 0.0 && std::isfinite(v)) {
      xs.push_back(std::log(spec.eps()));
      ys.push_back(std::log(std::fabs(v)));
    }
  }
  if (xs.size() < 3) throw TooFewSamples(xs.size(), 3);
  LinearFit fit = fit_line(xs, ys);
  out.slope = fit.slope;
  out.residual = fit.rms;
  return out;
}

double s_eps_expansion(const SmoothPrototype& proto, const ScaleSubstitution& sub, double eps) {
  const double b = proto.b, c = proto.c, k = sub.k, p = sub.p, beta = sub.beta;
  const double w = std::sqrt(-b / c);
  const double t1 = (2.0 * std::numbers::sqrt2 / 3.0) * b * w * std::pow(eps, 1.0 - 2.0 * p - beta) /
                    (k * k);
  const double t2 = c * w / (3.0 * std::numbers::sqrt2) * std::pow(eps, 3.0 - 4.0 * p - beta) /
                    std::pow(k, 4.0);
  const double t3 = c / 24.0 * std::pow(eps, 4.0 - 5.0 * p - beta) / std::pow(k, 5.0);
  return t1 + t2 + t3;
}

double s_eps_direct(const SmoothPrototype& proto, const ScaleSubstitution& sub, double eps) {
  const double s = sub.k * std::pow(eps, sub.p);
  const double xm = smooth_extremum(proto, s).x_m;
  return (proto.psi((xm + eps) / s) - proto.psi(xm / s)) / s / eps_pow(eps, sub.beta);
}

SEpsScan s_eps_scan(const SmoothPrototype& proto, const ScaleSubstitution& sub,
                    const EpsSchedule& sched) {
  if (!(proto.b < 0.0 && proto.c > 0.0)) throw BadPrototype("need psi''(0) < 0 < psi''''(0)");
  if (!(sub.k > 0.0)) throw BadParameter("prefactor k must be positive");
  check_order(sub.beta);
  SEpsScan out{0.0, sub.admissible(), {}};
  for (double eps : sched.values()) {
    out.rows.push_back({eps, sub.k * std::pow(eps, sub.p), s_eps_expansion(proto, sub, eps)});
  }
  const std::size_t m = std::min<std::size_t>(8, out.rows.size());
  std::vector<double> xs, ys;
  for (std::size_t i = out.rows.size() - m; i < out.rows.size(); ++i) {
    if (out.rows[i].upsilon == 0.0 || !std::isfinite(out.rows[i].upsilon)) continue;
    xs.push_back(std::log(out.rows[i].eps));
    ys.push_back(std::log(std::fabs(out.rows[i].upsilon)));
  }
  if (xs.size() < 3) throw TooFewSamples(xs.size(), 3);
  out.slope = fit_line(xs, ys).slope;
  return out;
}

UnitPulseReport unit_pulse_check(double alpha, double x0, double x_off, const EpsSchedule& sched) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw BadParameter("unit pulse needs 0 < alpha < 1");
  if (x_off == x0) throw BadParameter("off-pulse probe must differ from x0");
  RealFunction f = translate(fn::power_abs(alpha), -x0);
  UnitPulseReport r;
  r.at_x0 = classify(trace(f, x0, alpha, Side::Forward, sched));
  r.off = classify(trace(f, x_off, alpha, Side::Forward, sched));
  r.at_ok = r.at_x0.tag == LimitTag::Finite && std::fabs(*r.at_x0.value - 1.0) <= 1e-9;
  r.off_ok = r.off.tag == LimitTag::Zero;
  return r;
}

RealFunction scaling_map_iterate(const RealFunction& f, double a, int n, bool delta_map) {
  if (!(a > 0.0) || !std::isfinite(a)) throw BadParameter("scale factor must be positive");
  if (n < 0) throw BadParameter("iteration count must be non-negative");
  const double an = std::pow(a, n);
  if (delta_map) {
    return RealFunction::derived([f, an](double x) { return an * f(an * x); },
                                 f.domain().scaled(an), f.description());
  }
  return RealFunction::derived([f, an](double x) { return f(an * x); }, f.domain().scaled(an),
                               f.description());
}

double delta_map_integral(const SmoothPrototype& proto, double a, int n, double x, double y) {
  if (!(a > 1.0)) throw BadParameter("delta map needs a > 1");
  if (!(x < y)) throw BadParameter("integration bounds must satisfy x < y");
  RealFunction g = scaling_map_iterate(proto.psi, a, n, true);
  const double w = 1.0 / std::pow(a, n);
  const double reach = std::max(std::fabs(x), std::fabs(y));
  return integrate([&g](double t) { return g(t); }, x, y, geometric_breaks(w, reach)).value;
}

double delta_map_total(const SmoothPrototype& proto, double a, int n) {
  if (!(a > 1.0)) throw BadParameter("delta map needs a > 1");
  RealFunction g = scaling_map_iterate(proto.psi, a, n, true);
  const double w = 1.0 / std::pow(a, n);
  return integrate([&g](double t) { return g(t); }, -INFINITY, INFINITY,
                   geometric_breaks(w, 1e3 * w))
      .value;
}

EpsSchedule scale_schedule() { return make_schedule(0.25, 0.5, 20); }

ScaleDerivativeResult scale_derivative(const RealFunction& psi, double z,
                                       const EpsSchedule& a_sched, double slope_right,
                                       double slope_left, const ClassifyOptions& opt) {
  VariationTrace t = trace_of(a_sched, 1.0, [&](double a) {
    double d = psi((z + a * a / 2) / a) - psi((z - a * a / 2) / a);
    return Difference{d, psi(z / a)};
  });
  ScaleDerivativeResult r;
  r.verdict = classify(t, opt);
  if (z != 0.0) {
    r.expected = 0.0;
    r.consistent = r.verdict.tag == LimitTag::Zero;
    return r;
  }
  r.expected = (slope_right + slope_left) / 2.0;
  // An identically vanishing quotient at the origin is the constant 0.
  bool identically_zero = true;
  for (auto s : t.samples) identically_zero = identically_zero && s.value == 0.0;
  if (identically_zero) {
    r.verdict.tag = LimitTag::Finite;
    r.verdict.value = 0.0;
    r.verdict.slope = 0.0;
  }
  r.consistent = r.verdict.tag == LimitTag::Finite &&
                 std::fabs(*r.verdict.value - r.expected) <= 1e-6 * std::max(1.0, std::fabs(r.expected));
  return r;
}

}  // namespace fvlab
