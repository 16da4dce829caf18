#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "fvlab/errors.hpp"
#include "fvlab/exponents.hpp"
#include "fvlab/expr.hpp"

using namespace fvlab;

namespace {

EpsSchedule deep() { return make_schedule(0x1p-4, 0x1p-10, 30, 0x1p-300); }

}  // namespace

TEST_CASE("holder exponent") {
  EpsSchedule s = default_schedule();
  CHECK(holder_exponent(fn::power_abs(0.5), 0, s).alpha == doctest::Approx(0.5).epsilon(0.02));
  CHECK(std::fabs(holder_exponent(fn::identity(), 1, s).alpha - 1) <= 0.01);
  CHECK(std::fabs(holder_exponent(parse_function("powabs(x,0.3)*(2+sin(x))"), 0, s).alpha - 0.3) <= 0.02);
  for (int i = 1; i <= 9; ++i) {
    double a = i / 10.0;
    ExponentEstimate e = holder_exponent(fn::power_abs(a), 0, s);
    CHECK(std::fabs(e.alpha - a) <= 0.01);
    CHECK(e.residual >= 0);
    CHECK(e.eps_lo < e.eps_hi);
  }
  CHECK_THROWS_AS(holder_exponent(fn::constant(2), 0.3, s), LocallyConstant);
}

TEST_CASE("critical exponent") {
  EpsSchedule s = default_schedule();
  for (auto side : {ExponentSide::Left, ExponentSide::Right}) {
    ExponentEstimate e = critical_exponent(fn::power_abs(-0.7), 0, side, s);
    CHECK(std::fabs(e.alpha - 0.7) <= 0.01);
    CHECK(!e.bounded);
  }
  ExponentEstimate t = critical_exponent(fn::tan(), std::numbers::pi / 2, ExponentSide::Left, s);
  CHECK(std::fabs(t.alpha - 1) <= 0.02);
  ExponentEstimate b = critical_exponent(parse_function("sin(x)"), 0, ExponentSide::Right, s);
  CHECK(b.bounded);
  CHECK(b.alpha == 0);
  CHECK(critical_exponent(parse_function("2+cos(x)"), 1, ExponentSide::Left, s).bounded);
}

TEST_CASE("critical exponent is shift-equivariant") {
  EpsSchedule s = default_schedule();
  RealFunction g = parse_function("powabs(x,-0.6)*(1+x)");
  for (double x0 : {0.5, -3.0, 0x1p-3}) {
    RealFunction shifted = translate(g, -x0);
    for (auto side : {ExponentSide::Left, ExponentSide::Right}) {
      ExponentEstimate a = critical_exponent(g, 0, side, s);
      ExponentEstimate b = critical_exponent(shifted, x0, side, s);
      CHECK(std::bit_cast<std::uint64_t>(a.alpha) == std::bit_cast<std::uint64_t>(b.alpha));
    }
  }
}

TEST_CASE("analytic table entries") {
  PowerVerdict v = predict_power_verdict({0.5, +1}, 0.5, 0);
  CHECK(v.tag == LimitTag::Finite);
  CHECK(*v.value == 1);

  v = predict_power_verdict({0.3, +1}, 1, 0.5);
  CHECK(v.tag == LimitTag::Finite);
  // 0.3 * 0.5^-0.7 = 0.3 * 2^0.7 = 0.487351437...
  CHECK(*v.value == doctest::Approx(0.4873514378).epsilon(1e-9));
  CHECK(*predict_power_verdict({0.3, +1}, 1, -0.5).value == doctest::Approx(-0.4873514378).epsilon(1e-9));

  CHECK(predict_power_verdict({0.5, -1}, 0.5, 0).tag == LimitTag::DivergesMinus);
  CHECK(predict_power_verdict({0.5, -1}, 0.5, 0.5).tag == LimitTag::Zero);
  CHECK(*predict_power_verdict({0.5, -1}, 1, 0.5).value ==
        doctest::Approx(-0.5 * std::pow(0.5, -1.5)));
  CHECK(predict_power_verdict({0.3, +1}, 0.7, 0).tag == LimitTag::DivergesPlus);
  CHECK(predict_power_verdict({2, +1}, 0.5, 0).tag == LimitTag::Zero);
  CHECK(predict_power_verdict({2, +1}, 0.5, 0.5).tag == LimitTag::Zero);
  CHECK(*predict_power_verdict({1, +1}, 1, 0).value == 1);
  // beta > 1: blow-up with the sign of the derivative off the origin.
  CHECK(predict_power_verdict({0.5, +1}, 1.5, 0.5).tag == LimitTag::DivergesPlus);
  CHECK(predict_power_verdict({0.5, +1}, 1.5, -0.5).tag == LimitTag::DivergesMinus);
  CHECK(predict_power_verdict({0.5, -1}, 1.5, 0.5).tag == LimitTag::DivergesMinus);
  CHECK(predict_power_verdict({0.5, -1}, 1.5, -0.5).tag == LimitTag::DivergesPlus);
  CHECK(predict_power_verdict({2, +1}, 1.5, 0).tag == LimitTag::Zero);
  CHECK(predict_power_verdict({0.5, +1, 0.25, 2}, 0.5, 0.25).value == std::sqrt(2.0));
}

TEST_CASE("table grid reproduces with zero mismatches") {
  EpsSchedule s = default_schedule();
  auto grid = power_grid({0.3, 0.5, 0.7, 1.5}, {0.3, 0.5, 0.7, 1.0}, {0, -0.5, 0.5}, +1);
  PowerTableReport rep = verify_power_table(grid, s, 2);
  CHECK(rep.mismatches == 0);
  CHECK(rep.cells.size() == grid.size());

  rep = verify_power_table(power_grid({1}, {1}, {-0.5, 0, 0.5}, +1), s);
  CHECK(rep.mismatches == 0);
  CHECK(*rep.cells[1].observed.value == 1);

  rep = verify_power_table(power_grid({2}, {0.5}, {0, 0.5}, +1), s);
  CHECK(rep.mismatches == 0);
  for (const auto& c : rep.cells) CHECK(c.observed.tag == LimitTag::Zero);

  // beta = 1.5 representatives for both families.
  rep = verify_power_table(power_grid({0.3, 0.7, 2.0}, {1.5}, {-0.5, 0, 0.5}, +1), s);
  CHECK(rep.mismatches == 0);
  rep = verify_power_table(power_grid({0.3, 0.7}, {1.5}, {-0.5, 0, 0.5}, -1), s);
  CHECK(rep.mismatches == 0);
}

TEST_CASE("parallel and serial table runs agree") {
  EpsSchedule s = default_schedule();
  auto grid = power_grid({0.3, 0.5, 1.5}, {0.3, 1.0}, {-0.5, 0, 0.5}, +1);
  PowerTableReport a = verify_power_table(grid, s, 1), b = verify_power_table(grid, s, 3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(a.cells[i].observed.tag == b.cells[i].observed.tag);
    CHECK(std::bit_cast<std::uint64_t>(a.cells[i].observed.slope) ==
          std::bit_cast<std::uint64_t>(b.cells[i].observed.slope));
  }
}

TEST_CASE("singular trichotomy") {
  // f = |x|^g with g = 1 - alpha, so the equality cell uses beta built from alpha.
  const double alpha = 0.7, g = 1 - alpha;
  RealFunction f = fn::power_abs(g);
  RealFunction fp = parse_function("0.3*powabs(x,-0.7)*sign(x)");
  SingularResult r = singular_variation_classify(f, fp, 0, std::fabs(1 - alpha), deep(), alpha);
  CHECK(r.predicted == SingularClass::Finite);
  CHECK(r.observed == SingularClass::Finite);
  CHECK(r.matches);
  CHECK(std::fabs(r.alpha_hat - 0.7) <= 0.01);

  r = singular_variation_classify(f, fp, 0, 0.1, deep(), alpha);
  CHECK(r.observed == SingularClass::Zero);
  CHECK(r.matches);
  r = singular_variation_classify(f, fp, 0, 0.6, deep(), alpha);
  CHECK(r.observed == SingularClass::Unbounded);
  CHECK(r.matches);

  CHECK_THROWS_AS(singular_variation_classify(parse_function("x^2"), parse_function("2*x"), 0, 0.5,
                                              default_schedule()),
                  NotSingular);
  CHECK_THROWS_AS(singular_variation_classify(f, fp, 0, 1.0, deep()), BadOrder);
}

TEST_CASE("singular trichotomy over the power family") {
  for (double gamma : {0.2, 0.5, 0.8}) {
    const double alpha = 1 - gamma;
    RealFunction f = fn::power_abs(gamma);
    RealFunction fp = fn::power_abs(gamma - 1);
    for (double beta : {gamma / 2, std::fabs(1 - alpha), (1 + gamma) / 2}) {
      SingularResult r = singular_variation_classify(f, fp, 0, beta, deep(), alpha);
      CAPTURE(gamma);
      CAPTURE(beta);
      CHECK(r.matches);
      CHECK(r.away_zero);
    }
  }
}
