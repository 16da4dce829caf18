#include "fvlab/fracvar.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fvlab/errors.hpp"

namespace fvlab {

void check_order(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw BadOrder("order must be finite and non-negative, got " + std::to_string(beta));
  }
}

double eps_pow(double eps, double beta) { return std::pow(eps, beta); }

double ulp(double v) {
  double a = std::fabs(v);
  return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

double fracvar_plus(const RealFunction& f, double x, double eps, double beta) {
  check_order(beta);
  return forward_diff(f, x, eps) / eps_pow(eps, beta);
}

double fracvar_minus(const RealFunction& f, double x, double eps, double beta) {
  check_order(beta);
  return backward_diff(f, x, eps) / eps_pow(eps, beta);
}

double fracvar(const RealFunction& f, double x, double eps, double beta, Side side) {
  return side == Side::Forward ? fracvar_plus(f, x, eps, beta) : fracvar_minus(f, x, eps, beta);
}

RealFunction variation_function(const RealFunction& f, double eps, double beta, Side side) {
  check_step(eps);
  check_order(beta);
  return RealFunction::derived(
      [f, eps, beta, side](double x) { return fracvar(f, x, eps, beta, side); }, f.domain(),
      f.description());
}

namespace {

void require_finite(std::initializer_list<double> vs) {
  for (double v : vs) {
    if (!std::isfinite(v)) throw NonFiniteInput("non-finite sample in residual check");
  }
}

}  // namespace

std::pair<double, double> operator_form_residual(const RealFunction& f, double x, double eps,
                                                 double beta) {
  check_step(eps);
  check_order(beta);
  double fp = f(x + eps), f0 = f(x), fm = f(x - eps);
  require_finite({fp, f0, fm});
  double plus = fracvar_plus(f, x, eps, beta);
  double minus = fracvar_minus(f, x, eps, beta);
  double scale = eps_pow(eps, beta);
  // eps^-beta (T_eps - I)[f] and -eps^-beta (T_-eps - I)[f]
  double op_plus = (fp - f0) / scale;
  double op_minus = (fm - f0) / scale;
  return {std::fabs(plus - op_plus), std::fabs(minus + op_minus)};
}

double LinearityResidual::ulps() const { return residual / ulp(scale); }

LinearityResidual linearity_residual(const RealFunction& f, const RealFunction& g, double K,
                                     double M, double x, double eps, double beta) {
  check_step(eps);
  check_order(beta);
  double f1 = f(x + eps), f0 = f(x), g1 = g(x + eps), g0 = g(x);
  require_finite({f1, f0, g1, g0});
  RealFunction h = linear_combination(K, f, M, g);
  double lhs = fracvar_plus(h, x, eps, beta);
  double rhs = K * fracvar_plus(f, x, eps, beta) + M * fracvar_plus(g, x, eps, beta);
  require_finite({lhs, rhs});
  double scale = (std::fabs(K * f1) + std::fabs(K * f0) + std::fabs(M * g1) + std::fabs(M * g0)) /
                 eps_pow(eps, beta);
  return {std::fabs(lhs - rhs), scale};
}

double translation_commutator(const RealFunction& f, double x, double eps, double beta,
                              Side side) {
  check_step(eps);
  double shift = side == Side::Forward ? eps : -eps;
  double lhs = fracvar(translate(f, shift), x, eps, beta, side);
  double rhs = translate(variation_function(f, eps, beta, side), shift)(x);
  require_finite({lhs, rhs});
  return std::fabs(lhs - rhs);
}

namespace {

bool is_integer(double v) { return std::isfinite(v) && std::floor(v) == v; }

}  // namespace

double CompoundResiduals::max_ulps() const {
  double u = ulp(lhs);
  return std::fmax(general, std::fmax(first, second)) / u;
}

CompoundResiduals compound_residuals(const RealFunction& f, const RealFunction& y, double x,
                                     double eps, double alpha, double beta) {
  check_step(eps);
  check_order(beta);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw BadParameter("compound exponent alpha must be positive");
  }
  double y0 = y(x), y1 = y(x + eps);
  require_finite({y0, y1});
  double eta = y1 - y0;
  if (eta == 0.0) throw DegenerateEta();
  if (eta < 0.0 && (!is_integer(alpha) || !is_integer(beta))) {
    throw NegativeBase("fractional power of a negative increment");
  }
  double f0 = f(y0), f1 = f(y1);
  require_finite({f0, f1});
  double df = f1 - f0;

  double lhs = df / eps_pow(eps, beta);
  double ratio = eta / eps;  // v_1^eps[y](x)
  double general = (df / std::pow(eta, alpha)) * std::pow(ratio, alpha) *
                   (eps_pow(eps, alpha) / eps_pow(eps, beta));
  double first = (df / eta) * (eta / eps_pow(eps, beta));
  double second = (df / std::pow(eta, beta)) * std::pow(ratio, beta);
  require_finite({lhs, general, first, second});
  return {lhs, std::fabs(lhs - general), std::fabs(lhs - first), std::fabs(lhs - second)};
}

}  // namespace fvlab
