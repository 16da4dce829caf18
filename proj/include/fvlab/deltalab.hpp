#pragma once

#include <optional>
#include <vector>

#include "fvlab/limits.hpp"

namespace fvlab {

/// Smooth delta prototype psi with b = psi''(0) and c = psi''''(0).
struct SmoothPrototype {
  RealFunction psi;
  double b;
  double c;

  /// 1 / (pi (1 + x^2)): b = -2/pi, c = 24/pi.
  static SmoothPrototype cauchy();

  /// Checks unit integral (1e-8), evenness on a probe grid, psi(0) > 0,
  /// b < 0 < c.  Throws BadPrototype.
  void validate() const;
};

enum class DeltaKind { Rectangular, Triangular, Smooth };

struct DeltaSeqSpec {
  DeltaKind kind;
  double u0;  // base scale in (0, 2)
  int n;      // index >= 1, eps_n = u0 * 2^-n
  std::optional<SmoothPrototype> proto;  // smooth kind
  double s = 0.0;  // smooth kind: kernel scale s_n, 0 < s <= 1

  double eps() const;
  void validate() const;
};

/// rect: 1/(2e) on |x| < e; tri: (1 - |x|/e)/e on |x| < e; smooth:
/// psi(x/s)/s.  Zero elsewhere.
double delta_eval(const DeltaSeqSpec& spec, double x);

/// Forward variation of delta_n with its own step eps_n, evaluated by
/// differencing delta_eval.
double fracvar_delta_brute(const DeltaSeqSpec& spec, double x, double beta);

/// Closed form of the same quantity by support case analysis.  With
/// e = eps_n the nonzero shells are
///   (-2e, -e]  only delta(x + e) is nonzero     -> positive
///   (-e, 0)    both nonzero (tri only; rect cancels to 0)
///   [0, e)     only delta(x) is nonzero         -> negative
/// Rectangular and triangular kinds; throws BadOrder for beta > 1.
double fracvar_delta_exact(const DeltaSeqSpec& spec, double x, double beta);

struct DeltaRow {
  int n;
  double eps;
  double x;
  double value;
};

struct DeltaScaling {
  double slope;
  double residual;
  bool sign_ok;  // value negative at every x_n > 0
  std::vector<DeltaRow> rows;
};

/// Tracks the shell point x_n = eps_n / 2 (rect, tri) or the kernel's
/// inflection x_m with step s_n = eps_n (smooth) for n in [n_lo, n_hi] and
/// fits log|v| against log eps_n.  Expected slope -(1 + beta).
DeltaScaling delta_scaling_check(DeltaKind kind, double beta, int n_lo, int n_hi,
                                 double u0 = 1.0,
                                 const std::optional<SmoothPrototype>& proto = std::nullopt);

struct Extremum {
  double x_m;
  double fprime;  // third-order Taylor value of f' at x_m, f = psi(x/s)/s
};

/// x_m = sqrt(-2b/c) s, f'(x_m) = (2b / (3 s^2)) sqrt(-2b/c).
Extremum smooth_extremum(const SmoothPrototype& proto, double s);

/// s = k eps^p.
struct ScaleSubstitution {
  double p;
  double k;
  double beta;

  bool admissible() const { return p > (1.0 - beta) / 2.0; }
};

/// Three-term Taylor expansion of the forward variation of psi(x/s)/s at
/// x_m with step eps and s = k eps^p.
double s_eps_expansion(const SmoothPrototype& proto, const ScaleSubstitution& sub, double eps);

/// Direct forward variation of psi(x/s)/s at x_m with s = k eps^p.
double s_eps_direct(const SmoothPrototype& proto, const ScaleSubstitution& sub, double eps);

struct SEpsRow {
  double eps;
  double s;
  double upsilon;
};

struct SEpsScan {
  double slope;
  bool admissible;
  std::vector<SEpsRow> rows;
};

SEpsScan s_eps_scan(const SmoothPrototype& proto, const ScaleSubstitution& sub,
                    const EpsSchedule& sched);

struct UnitPulseReport {
  LimitVerdict at_x0;
  LimitVerdict off;
  bool at_ok;   // Finite(1) within 1e-9
  bool off_ok;  // Zero
};

/// Forward variation of order alpha of |x - x0|^alpha at x0 and at x_off.
UnitPulseReport unit_pulse_check(double alpha, double x0, double x_off, const EpsSchedule& sched);

/// x -> f(a^n x), or a^n f(a^n x) when delta_map is set.
RealFunction scaling_map_iterate(const RealFunction& f, double a, int n, bool delta_map = false);

/// Integral of a^n psi(a^n t) over [x, y].
double delta_map_integral(const SmoothPrototype& proto, double a, int n, double x, double y);

/// Same integrand over the whole line.
double delta_map_total(const SmoothPrototype& proto, double a, int n);

struct ScaleDerivativeResult {
  LimitVerdict verdict;
  double expected;  // 0 off the origin, the one-sided slope average at it
  bool consistent;
};

/// Trace of [psi((z + a^2/2)/a) - psi((z - a^2/2)/a)] / a along a -> 0.
/// slope_right and slope_left are psi'(0+) and psi'(0-), used only at z = 0.
ScaleDerivativeResult scale_derivative(const RealFunction& psi, double z,
                                       const EpsSchedule& a_sched, double slope_right = 0.0,
                                       double slope_left = 0.0, const ClassifyOptions& opt = {});

/// (2^-2, 1/2, 20).
EpsSchedule scale_schedule();

}  // namespace fvlab
