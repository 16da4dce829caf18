#pragma once

#include <optional>
#include <vector>

#include "fvlab/limits.hpp"

namespace fvlab {

enum class ExponentSide { Left, Right, Symmetric };

struct ExponentEstimate {
  double alpha = 0.0;
  double residual = 0.0;  // RMS of the log-log fit
  double eps_hi = 0.0;    // window used
  double eps_lo = 0.0;
  std::size_t samples = 0;
  ExponentSide side = ExponentSide::Right;
  bool bounded = false;  // critical exponent only: g bounded near the point
};

/// Slope of log|f(x + eps) - f(x)| against log eps on the tail window.
/// Throws LocallyConstant when every difference is zero.
ExponentEstimate holder_exponent(const RealFunction& f, double x, const EpsSchedule& sched);

/// Minus the slope of log|g(x_s -/+ h)| against log h.  Slopes at or above
/// -bounded_tol are reported as alpha = 0 with the bounded flag.
ExponentEstimate critical_exponent(const RealFunction& g, double x_s, ExponentSide side,
                                   const EpsSchedule& sched, double bounded_tol = 0.05);

/// |s (x - x0)|^(sign * alpha).
struct PowerLawSpec {
  double alpha;
  int sign = +1;
  double shift = 0.0;
  double scale = 1.0;
};

RealFunction power_law(const PowerLawSpec& spec);

struct PowerVerdict {
  LimitTag tag;
  std::optional<double> value;
};

/// Analytic limit of the forward variation of the family at x.  "Origin"
/// means x equals the shift exactly.
PowerVerdict predict_power_verdict(const PowerLawSpec& spec, double beta, double x);

struct PowerCell {
  double alpha;
  double beta;
  double x;
  int sign = +1;
};

struct PowerCellResult {
  PowerCell cell;
  PowerVerdict predicted;
  LimitVerdict observed;
  bool match;
};

struct PowerTableReport {
  std::vector<PowerCellResult> cells;
  std::size_t mismatches = 0;
};

/// Tags must agree; Finite values within 1e-6 relative.
PowerTableReport verify_power_table(const std::vector<PowerCell>& cells, const EpsSchedule& sched,
                                    unsigned threads = 0, const ClassifyOptions& opt = {});

/// Cartesian product helper.
std::vector<PowerCell> power_grid(const std::vector<double>& alphas,
                                  const std::vector<double>& betas, const std::vector<double>& xs,
                                  int sign);

enum class SingularClass { Zero, Finite, Unbounded, Inconclusive };

const char* singular_class_name(SingularClass c);

struct SingularOptions {
  double away_offset = 0.5;
  std::optional<EpsSchedule> away_schedule;  // default_schedule() if unset
  double unbounded_threshold = 1e6;
  ClassifyOptions classify;
};

struct SingularResult {
  double alpha_hat;        // estimated critical exponent of f'
  double alpha_used;       // exact alpha when supplied, else alpha_hat
  SingularClass predicted;
  SingularClass observed;
  LimitVerdict coupled;    // trace at x = x_s - eps
  LimitVerdict away;       // trace at x_s + away_offset
  bool away_zero;
  bool matches;            // predicted == observed and away_zero
};

/// Coupled approach (f(x_s) - f(x_s - eps)) / eps^beta, compared with the
/// trichotomy beta <, =, > |1 - alpha|.  Throws NotSingular if f' is bounded
/// at x_s.
SingularResult singular_variation_classify(const RealFunction& f, const RealFunction& fprime,
                                           double x_s, double beta, const EpsSchedule& sched,
                                           std::optional<double> exact_alpha = std::nullopt,
                                           const SingularOptions& opt = {});

}  // namespace fvlab
