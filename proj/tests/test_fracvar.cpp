#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "fvlab/errors.hpp"
#include "fvlab/expr.hpp"
#include "fvlab/fracvar.hpp"

using namespace fvlab;

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_CASE("forward variation values") {
  RealFunction h = fn::power_abs(0.5);
  for (double eps : {0x1p-3, 0x1p-17, 0.1, 0.3, 1e-9}) CHECK(fracvar_plus(h, 0, eps, 0.5) == 1);
  CHECK(fracvar_plus(parse_function("x^2"), 1, 0.1, 1) == doctest::Approx(2.1).epsilon(1e-14));
  // eps^(0.3 - 0.7) with eps = 2^-20 is 2^8.
  double v = fracvar_plus(fn::power_abs(0.3), 0, 0x1p-20, 0.7);
  CHECK(std::fabs(v - 256) <= 4 * ulp(256));
}

TEST_CASE("backward variation values") {
  RealFunction s = parse_function("sin(x)");
  CHECK(same_bits(fracvar_minus(s, 0.5, 0x1p-12, 0.5), fracvar_plus(s, 0.5 - 0x1p-12, 0x1p-12, 0.5)));
  CHECK(fracvar_minus(fn::constant(4), 2, 0.3, 0.4) == 0);
  CHECK(fracvar_minus(fn::identity(), 1, 0.25, 1) == 1);
  CHECK_THROWS_AS(fracvar_minus(s, 0, 0.25, -0.1), BadOrder);
  CHECK(fracvar_plus(s, 0.2, 0.25, 0) == forward_diff(s, 0.2, 0.25));
}

TEST_CASE("operator forms are exact regroupings") {
  auto zero = std::pair<double, double>{0, 0};
  CHECK(operator_form_residual(parse_function("exp(x)"), 0, 0x1p-8, 0.5) == zero);
  CHECK(operator_form_residual(fn::power_abs(0.5), 1, 0x1p-10, 0.3) == zero);
  CHECK(operator_form_residual(parse_function("sin(x)"), std::numbers::pi / 6, 0x1p-16, 1) == zero);
  CHECK_THROWS_AS(operator_form_residual(fn::power_abs(-0.5), 0x1p-4, 0x1p-4, 0.5), NonFiniteInput);
}

TEST_CASE("linearity") {
  RealFunction s = parse_function("sin(x)"), sq = parse_function("x^2");
  CHECK(linearity_residual(s, sq, 1, 0, 0.5, 0x1p-10, 0.5).residual == 0);
  CHECK(linearity_residual(s, sq, 0, 0, 0.5, 0x1p-10, 0.5).residual == 0);
  CHECK(linearity_residual(s, sq, 2, -3, 0.5, 0x1p-10, 0.5).ulps() <= 2);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> xs(-2, 2), ks(-5, 5), bs(0.05, 1.0);
  std::uniform_int_distribution<int> ke(4, 20);
  RealFunction fs[] = {s, sq, parse_function("exp(x)"), parse_function("cos(3*x)")};
  double worst = 0;
  for (int i = 0; i < 2000; ++i) {
    const RealFunction& f = fs[rng() % 4];
    const RealFunction& g = fs[rng() % 4];
    auto r = linearity_residual(f, g, ks(rng), ks(rng), xs(rng), std::ldexp(1.0, -ke(rng)), bs(rng));
    worst = std::max(worst, r.ulps());
  }
  CHECK(worst <= 2);
}

TEST_CASE("homogeneity") {
  RealFunction s = parse_function("sin(x)");
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> xs(-2, 2), bs(0.05, 1.0);
  for (int i = 0; i < 500; ++i) {
    double x = xs(rng), eps = std::ldexp(1.0, -4 - static_cast<int>(rng() % 16)), b = bs(rng);
    double base = fracvar_plus(s, x, eps, b);
    for (double c : {0.25, 2.0, -8.0}) {
      CHECK(fracvar_plus(linear_combination(c, s, 0, s), x, eps, b) == c * base);
    }
    // c = 3 rounds; measured against the operand scale since the difference cancels.
    CHECK(linearity_residual(s, s, 3.0, 0.0, x, eps, b).ulps() <= 2);
  }
}

TEST_CASE("left/right mapping and translation commutator") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> xs(-2, 2), bs(0.05, 1.0);
  RealFunction fs[] = {parse_function("sin(x)"), parse_function("exp(x)"), fn::power_abs(0.7),
                       parse_function("x^3 - x")};
  for (int i = 0; i < 1000; ++i) {
    const RealFunction& f = fs[i % 4];
    double x = std::ldexp(std::round(std::ldexp(xs(rng), 30)), -30);
    double eps = std::ldexp(1.0, -4 - static_cast<int>(rng() % 16)), b = bs(rng);
    CHECK(same_bits(fracvar_minus(f, x, eps, b), fracvar_plus(f, x - eps, eps, b)));
    CHECK(translation_commutator(f, x, eps, b, Side::Forward) == 0);
    CHECK(translation_commutator(f, x, eps, b, Side::Backward) == 0);
  }
  CHECK(translation_commutator(parse_function("exp(x)"), 0, 0x1p-6, 0.5, Side::Forward) == 0);
  CHECK(translation_commutator(fn::power_abs(0.7), -1, 0x1p-8, 0.7, Side::Backward) == 0);
  CHECK(translation_commutator(fn::constant(2), 0.3, 0x1p-3, 0.2, Side::Forward) == 0);
}

TEST_CASE("mapping needs an exact shifted probe") {
  // x - eps rounds here, so (x - eps) + eps != x and the sides see
  // different points.
  const double x = -1 + 0x1p-53, eps = 0x1p-4;
  REQUIRE((x - eps) + eps != x);
  RealFunction f = parse_function("exp(x)");
  CHECK(!same_bits(fracvar_minus(f, x, eps, 0.5), fracvar_plus(f, x - eps, eps, 0.5)));
}

TEST_CASE("compound variation identities") {
  RealFunction u2 = parse_function("x^2"), y3 = parse_function("x^3");
  CompoundResiduals r = compound_residuals(u2, y3, 1, 0x1p-10, 0.5, 0.5);
  CHECK(r.max_ulps() <= 8);

  // Identity substitution: eta = eps.  Dyadic powers keep every term exact.
  r = compound_residuals(parse_function("sin(x)"), fn::identity(), 0.5, 0x1p-8, 0.5, 0.25);
  CHECK(r.general == 0);
  CHECK(r.first == 0);
  CHECK(r.second == 0);

  r = compound_residuals(parse_function("exp(x)"), parse_function("2*x"), 0, 0x1p-12, 1, 1);
  CHECK(r.max_ulps() <= 8);

  CHECK_THROWS_AS(compound_residuals(u2, fn::constant(1), 0, 0x1p-4, 0.5, 0.5), DegenerateEta);
  CHECK_THROWS_AS(compound_residuals(u2, parse_function("-x"), 0, 0x1p-4, 0.5, 0.5), NegativeBase);
  // Integer exponents tolerate a decreasing substitution.
  r = compound_residuals(u2, parse_function("-x"), 0.5, 0x1p-4, 2, 1);
  CHECK(r.max_ulps() <= 8);
}

TEST_CASE("compound identities on random monotone substitutions") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> xs(0.1, 2), as(0.1, 1.5), bs(0.05, 1.0);
  RealFunction fs[] = {parse_function("sin(x)"), parse_function("exp(x)"), parse_function("x^2"),
                       parse_function("cos(x)")};
  RealFunction ys[] = {parse_function("x^3"), parse_function("2*x"), parse_function("exp(x)"),
                       parse_function("x + x^3"), parse_function("sqrt(x)")};
  double worst = 0;
  for (int i = 0; i < 2000; ++i) {
    auto r = compound_residuals(fs[rng() % 4], ys[rng() % 5], xs(rng),
                                std::ldexp(1.0, -4 - static_cast<int>(rng() % 16)), as(rng), bs(rng));
    worst = std::max(worst, r.max_ulps());
  }
  CHECK(worst <= 8);
}

TEST_CASE("variation of |x|^0.7 at order 0.3 is Holder of order 0.4 in x") {
  RealFunction f = fn::power_abs(0.7);
  double worst = 0;
  for (int i = 4; i <= 20; ++i) {
    double eps = std::ldexp(1.0, -i);
    double at0 = fracvar_plus(f, 0, eps, 0.3);
    for (int j = 4; j <= 20; ++j) {
      double h = std::ldexp(1.0, -j);
      worst = std::max(worst, std::fabs(at0 - fracvar_plus(f, h, eps, 0.3)) / std::pow(h, 0.4));
    }
  }
  CHECK(std::isfinite(worst));
  CHECK(worst < 10);
}
