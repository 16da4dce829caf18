#include "fvlab/diffops.hpp"

#include <cmath>
#include <string>

#include "fvlab/errors.hpp"

namespace fvlab {

void check_step(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw BadStep("step must be finite and positive, got " + std::to_string(eps));
  }
}

double forward_diff(const RealFunction& f, double x, double eps) {
  check_step(eps);
  return f(x + eps) - f(x);
}

double backward_diff(const RealFunction& f, double x, double eps) {
  check_step(eps);
  return f(x) - f(x - eps);
}

double second_diff(const RealFunction& f, double x, double eps) {
  check_step(eps);
  double fx = f(x);
  return (f(x + eps) - fx) - (fx - f(x - eps));
}

double side_diff(const RealFunction& f, double x, double eps, Side side) {
  return side == Side::Forward ? forward_diff(f, x, eps) : backward_diff(f, x, eps);
}

RealFunction translate(const RealFunction& f, double shift) {
  return RealFunction::derived([f, shift](double x) { return f(x + shift); },
                               f.domain().shifted(shift), f.description());
}

RealFunction difference_function(const RealFunction& f, double eps, Side side) {
  check_step(eps);
  return RealFunction::derived([f, eps, side](double x) { return side_diff(f, x, eps, side); },
                               f.domain(), f.description());
}

int sign_of(double v) {
  if (std::isnan(v)) throw UndefinedSign();
  return v >= 0 ? 1 : -1;
}

}  // namespace fvlab
