#include "fvlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fvlab/errors.hpp"

namespace fvlab {

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     std::vector<double> breaks, double max_error) {
  if (!(a < b)) throw QuadratureFailure("integration bounds must satisfy a < b");
  std::vector<double> pts{a};
  std::sort(breaks.begin(), breaks.end());
  for (double p : breaks) {
    if (p > a && p < b && p != pts.back()) pts.push_back(p);
  }
  pts.push_back(b);

  QuadResult total{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i], hi = pts[i + 1];
    double err = 0.0, v = 0.0;
    if (std::isfinite(lo) && std::isfinite(hi)) {
      // Boost leaves the recursive error estimate in units of the reference
      // interval, so map onto [-1, 1] here to keep it absolute.
      const double mid = lo / 2 + hi / 2, half = hi / 2 - lo / 2;
      v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          [&](double u) { return f(mid + half * u) * half; }, -1.0, 1.0, 15, 1e-12, &err);
    } else {
      v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12, &err);
    }
    total.value += v;
    total.error += err;
  }
  if (!(total.error <= max_error) || !std::isfinite(total.value)) {
    throw QuadratureFailure("quadrature error estimate too large");
  }
  return total;
}

std::vector<double> geometric_breaks(double w, double reach) {
  std::vector<double> out{0.0};
  for (double r = w; r <= reach; r *= 10.0) {
    out.push_back(r);
    out.push_back(-r);
  }
  return out;
}

}  // namespace fvlab
