#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fvlab/fracvar.hpp"

namespace fvlab {

/// eps_k = eps0 * ratio^k, k = 0..steps-1, stopping early at min_eps.
struct EpsSchedule {
  double eps0;
  double ratio;
  int steps;
  double min_eps;

  std::vector<double> values() const;
};

/// eps0 and ratio must be powers of two, 0 < ratio < 1, steps >= 8 and
/// eps0 <= 1.  Throws BadSchedule otherwise.
EpsSchedule make_schedule(double eps0, double ratio, int steps, double min_eps = 0x1p-40);

/// The schedule used by the table checks: (2^-4, 1/2, 30).
EpsSchedule default_schedule();

enum class Truncation { None, Undefined, CancellationFloor };

struct TraceSample {
  double eps;
  double value;
};

struct VariationTrace {
  std::vector<TraceSample> samples;
  std::string description;
  double x = 0.0;
  double beta = 0.0;
  Side side = Side::Forward;
  Truncation truncation = Truncation::None;
  double floor = 0.0;  // cancellation floor on the raw difference
};

/// One raw difference and the function value whose ulp sets the
/// cancellation floor.
struct Difference {
  double value;
  double reference;
};

/// Generic driver: samples diff(eps) / eps^beta along the schedule and
/// applies the truncation rules.  A NaN difference stops the trace.  Once a
/// nonzero difference has been seen, a zero or one below 1000 ulp of the
/// reference value stops it too.
VariationTrace trace_of(const EpsSchedule& sched, double beta,
                        const std::function<Difference(double eps)>& diff);

VariationTrace trace(const RealFunction& f, double x, double beta, Side side,
                     const EpsSchedule& sched);

enum class LimitTag { Zero, Finite, DivergesPlus, DivergesMinus, Indeterminate };

std::string_view tag_name(LimitTag t);
LimitTag parse_tag(std::string_view name);

struct LimitVerdict {
  LimitTag tag = LimitTag::Indeterminate;
  std::optional<double> value;  // present iff Finite
  double slope = 0.0;           // d log|v| / d log eps on the tail
  double residual = 0.0;        // RMS of the fit
  std::size_t window = 0;       // samples in the tail window
  double eps_hi = 0.0;          // window bounds
  double eps_lo = 0.0;
};

struct ClassifyOptions {
  double slope_tol = 0.05;
  double zero_tol = 1e-9;
  std::size_t window = 8;
  std::size_t min_samples = 6;
};

/// Throws TooFewSamples when fewer than min_samples remain.
LimitVerdict classify(const VariationTrace& t, const ClassifyOptions& opt = {});

struct LinearFit {
  double slope;
  double intercept;
  double rms;
};

/// Least squares y = slope * x + intercept.
LinearFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

/// Tail median: the middle value, or the mean of the middle two.
double median(std::vector<double> v);

struct DualityResult {
  LimitVerdict forward;
  LimitVerdict backward;
  LimitVerdict second;
  bool hypothesis;  // forward Zero or Finite and second Zero
  bool agree;       // tags equal and Finite values within 10 * zero_tol
  double value_gap;  // |forward - backward| for Finite pairs, else 0
};

DualityResult duality_check(const RealFunction& f, double x, double beta,
                            const EpsSchedule& sched, const ClassifyOptions& opt = {});

struct DerivLimitResult {
  double max_gap;    // max over the tail of |v - eps^(1-beta) f'(x+eps) / beta|
  double first_gap;  // resolved gaps at the ends of the tail window
  double last_gap;
  LimitVerdict verdict;
  bool passed;
};

/// Compares the variation trace with (1/beta) eps^(1-beta) f'(x + eps).
/// Gaps are reduced by the rounding noise of the variation itself before
/// the decrease test; for beta = 1 the Finite value must match f'(x) to
/// 1e-6 relative.
DerivLimitResult deriv_limit_check(const RealFunction& f, const RealFunction& fprime, double x,
                                   double beta, const EpsSchedule& sched,
                                   const ClassifyOptions& opt = {});

}  // namespace fvlab
