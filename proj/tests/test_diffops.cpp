#include <doctest.h>

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "fvlab/diffops.hpp"
#include "fvlab/errors.hpp"
#include "fvlab/expr.hpp"

using namespace fvlab;

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("forward and backward differences") {
  RealFunction sq = parse_function("x^2");
  RealFunction seven = fn::constant(7);
  CHECK(forward_diff(sq, 1, 0.5) == 1.25);
  CHECK(backward_diff(sq, 1, 0.5) == 0.75);
  CHECK(forward_diff(seven, -3.1, 0.01) == 0);
  CHECK(backward_diff(seven, 12, 2) == 0);
  CHECK(forward_diff(fn::power_abs(-0.5), 0, 0.25) == -kInf);
  CHECK(backward_diff(fn::power_abs(-0.5), 0, 0.25) == kInf);

  RealFunction s = parse_function("sin(x)");
  CHECK(same_bits(backward_diff(s, 0.3, 0x1p-8), forward_diff(s, 0.3 - 0x1p-8, 0x1p-8)));
}

TEST_CASE("undefined and infinite arithmetic propagates") {
  RealFunction inv = parse_function("1/x");
  // +inf at both 0 and 1, so inf - inf is undefined.
  RealFunction both = parse_function("powabs(x*(x-1),-1)");
  CHECK(std::isnan(forward_diff(both, 0, 1)));
  CHECK(std::isnan(forward_diff(parse_function("log(x)"), -1, 0.5)));
  CHECK(forward_diff(inv, 0, 1) == -kInf);
}

TEST_CASE("second difference") {
  RealFunction sq = parse_function("x^2");
  for (int k = 1; k <= 20; ++k) {
    double eps = std::ldexp(1.0, -k);
    CHECK(second_diff(sq, 0.75, eps) == 2 * eps * eps);
  }
  CHECK(second_diff(parse_function("3*x + 1"), 0.5, 0x1p-6) == 0);
  RealFunction e = parse_function("exp(x)");
  CHECK(same_bits(second_diff(e, 0, 0x1p-10),
                  forward_diff(e, 0, 0x1p-10) - backward_diff(e, 0, 0x1p-10)));
}

TEST_CASE("second difference composes bitwise on a 100-point grid") {
  for (const char* text : {"sin(x)", "exp(x)", "powabs(x,0.5)"}) {
    RealFunction f = parse_function(text);
    for (int k : {4, 9, 14, 20}) {
      double eps = std::ldexp(1.0, -k);
      RealFunction back = difference_function(f, eps, Side::Backward);
      for (int i = 0; i < 100; ++i) {
        double x = -1.0 + i * 0x1p-5 - 0x1p-7;  // exactly representable
        double d2 = second_diff(f, x, eps);
        CHECK(same_bits(d2, forward_diff(back, x, eps)));
        CHECK(same_bits(d2, forward_diff(f, x, eps) - backward_diff(f, x, eps)));
      }
    }
  }
}

TEST_CASE("translation") {
  RealFunction s = parse_function("sin(x)");
  CHECK(translate(s, std::numbers::pi)(0) == std::sin(std::numbers::pi));
  for (const char* text : {"sin(x)", "powabs(x,0.7)", "exp(x)*cos(3*x)"}) {
    RealFunction f = parse_function(text);
    for (int k : {3, 10, 25}) {
      double eps = std::ldexp(1.0, -k);
      RealFunction round = translate(translate(f, eps), -eps);
      for (int i = 0; i < 64; ++i) {
        double x = -2.0 + i * 0x1p-4;
        CHECK(same_bits(round(x), f(x)));
      }
    }
  }
  RealFunction shifted = translate(fn::power_abs(0.5), -0.25);
  CHECK(shifted(0.25) == 0);
  CHECK(shifted(1.25) == 1);
  // Poles move with the function.
  auto poles = translate(fn::tan(), 0.5).domain().poles_in(0, 2);
  REQUIRE(poles.size() == 1);
  CHECK(poles[0] == doctest::Approx(std::numbers::pi / 2 - 0.5));
}

TEST_CASE("sign operator") {
  CHECK(sign_of(0.0) == 1);
  CHECK(sign_of(-0.0) == 1);
  CHECK(sign_of(-3.2) == -1);
  CHECK(sign_of(kInf) == 1);
  CHECK(sign_of(-kInf) == -1);
  CHECK_THROWS_AS(sign_of(std::nan("")), UndefinedSign);
}

TEST_CASE("step must be positive and finite") {
  RealFunction s = parse_function("sin(x)");
  CHECK_THROWS_AS(forward_diff(s, 0, 0), BadStep);
  CHECK_THROWS_AS(backward_diff(s, 0, -1), BadStep);
  CHECK_THROWS_AS(second_diff(s, 0, kInf), BadStep);
  CHECK_THROWS_AS(forward_diff(s, 0, std::nan("")), BadStep);
}
