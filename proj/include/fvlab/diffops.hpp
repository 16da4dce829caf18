#pragma once

#include "fvlab/real_function.hpp"

namespace fvlab {

enum class Side { Forward, Backward };

/// Throws BadStep unless eps is finite and positive.
void check_step(double eps);

/// f(x + eps) - f(x).  Undefined (NaN) propagates, inf - inf is NaN.
double forward_diff(const RealFunction& f, double x, double eps);
/// f(x) - f(x - eps).
double backward_diff(const RealFunction& f, double x, double eps);
/// (f(x + eps) - f(x)) - (f(x) - f(x - eps)), grouped so that it equals
/// forward_diff - backward_diff bitwise.
double second_diff(const RealFunction& f, double x, double eps);

double side_diff(const RealFunction& f, double x, double eps, Side side);

/// x -> f(x + shift).
RealFunction translate(const RealFunction& f, double shift);

/// x -> side_diff(f, x, eps, side), as a function in its own right.
RealFunction difference_function(const RealFunction& f, double eps, Side side);

/// +1 for v >= 0 (including +inf and zero), -1 for v < 0.
/// Throws UndefinedSign on NaN.
int sign_of(double v);

}  // namespace fvlab
