#pragma once

#include <functional>
#include <vector>

namespace fvlab {

struct QuadResult {
  double value;
  double error;  // estimated absolute error, summed over pieces
};

/// Adaptive Gauss-Kronrod over [a, b]; either end may be infinite.  The
/// interval is split at every breakpoint strictly inside it.  Throws
/// QuadratureFailure when the summed error estimate exceeds max_error.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     std::vector<double> breaks = {}, double max_error = 1e-6);

/// Breakpoints 0, +/-w, +/-10w, +/-100w, ... up to `reach`, for integrands
/// concentrated in a region of width w around the origin.
std::vector<double> geometric_breaks(double w, double reach);

}  // namespace fvlab
