#pragma once

#include <vector>

#include "fvlab/limits.hpp"

namespace fvlab {

struct CombGridPoint {
  double x;         // grid point
  double probe;     // x itself, or the pole it stands in for
  bool coupled;     // probed at probe + eps instead of x
  LimitVerdict verdict;
  double tail_abs;  // median |v| over the tail window
};

struct CombPoint {
  double x;
  LimitTag tag;  // DivergesPlus or DivergesMinus
};

struct CombReport {
  std::vector<CombPoint> points;
  double background_zero_fraction = 0.0;
  std::vector<CombGridPoint> grid;
};

/// Grid lo, lo + pitch, ... below hi, plus hi.  Each point gets the forward
/// variation trace; the grid point nearest to each pole (within pitch/2) is
/// replaced by the coupled probe (f(x_s + 2 eps) - f(x_s + eps)) / eps^beta.
/// Poles come from the domain, or from a blow-up search when none are
/// declared.  Consecutive divergent points merge into one detection at the
/// largest tail |v|.
CombReport comb_scan(const RealFunction& f, double lo, double hi, double pitch, double beta,
                     const EpsSchedule& sched, unsigned threads = 0,
                     const ClassifyOptions& opt = {});

/// Poles the scan will use for [lo, hi] at the given pitch.
std::vector<double> locate_poles(const RealFunction& f, double lo, double hi, double pitch);

struct CoupledSlopeResult {
  double slope;
  LimitVerdict verdict;
  bool passed;  // slope within tol of -(alpha + beta)
};

/// Slope of log|v| at the coupled probe x = x_s + eps.  Throws NotSingular
/// when alpha + beta <= 1.
CoupledSlopeResult coupled_slope_check(const RealFunction& f, double x_s,
                                       double alpha, double beta,
                                       const EpsSchedule& sched, double tol = 0.05);

}  // namespace fvlab
