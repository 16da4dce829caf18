#pragma once

#include <utility>

#include "fvlab/diffops.hpp"

namespace fvlab {

/// Throws BadOrder unless beta is finite and beta >= 0.
void check_order(double beta);

/// eps^beta.  std::pow, so that |x|^a built on std::pow cancels exactly.
double eps_pow(double eps, double beta);

/// Forward fractal variation (f(x + eps) - f(x)) / eps^beta.
double fracvar_plus(const RealFunction& f, double x, double eps, double beta);
/// Backward fractal variation (f(x) - f(x - eps)) / eps^beta.
double fracvar_minus(const RealFunction& f, double x, double eps, double beta);
double fracvar(const RealFunction& f, double x, double eps, double beta, Side side);

/// x -> fracvar(f, x, eps, beta, side).
RealFunction variation_function(const RealFunction& f, double eps, double beta, Side side);

/// Residuals of the operator forms eps^-beta (T_eps - I) and
/// -eps^-beta (T_-eps - I) against the two variations.
std::pair<double, double> operator_form_residual(const RealFunction& f, double x, double eps,
                                                 double beta);

struct LinearityResidual {
  double residual;
  /// Magnitude scale of the computation: the sum of the absolute terms
  /// entering the combined difference, divided by eps^beta.
  double scale;
  /// residual measured in ulps of scale.
  double ulps() const;
};

/// Compares the variation of K f + M g with K v[f] + M v[g].
LinearityResidual linearity_residual(const RealFunction& f, const RealFunction& g, double K,
                                     double M, double x, double eps, double beta);

/// |v[T f](x) - T[v f](x)| with T the shift by +eps (forward) or -eps
/// (backward).
double translation_commutator(const RealFunction& f, double x, double eps, double beta, Side side);

struct CompoundResiduals {
  double lhs;
  double general;  // v_a^eta[f](y) (v_1[y](x))^a eps^(a - beta)
  double first;    // v_1^eta[f](y) v_beta[y](x)
  double second;   // v_beta^eta[f](y) (v_1[y](x))^beta
  double max_ulps() const;
};

/// Residuals of the compound variation identities for f(y(x)), the inner
/// function treated as the variable with increment eta = y(x+eps) - y(x).
CompoundResiduals compound_residuals(const RealFunction& f, const RealFunction& y, double x,
                                     double eps, double alpha, double beta);

/// Distance from |v| to the next double up.
double ulp(double v);

}  // namespace fvlab
