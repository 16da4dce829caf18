#include "fvlab/real_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fvlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Index of the lattice pole nearest to x.
double nearest_index(const PoleLattice& l, double x) {
  return std::round((x - l.offset) / l.period);
}

}  // namespace

Domain Domain::intervals(std::vector<Interval> parts) {
  Domain d;
  d.intervals_ = std::move(parts);
  return d;
}

Domain Domain::with_poles(std::vector<double> poles) const {
  Domain d = *this;
  d.poles_.insert(d.poles_.end(), poles.begin(), poles.end());
  std::sort(d.poles_.begin(), d.poles_.end());
  d.poles_.erase(std::unique(d.poles_.begin(), d.poles_.end()), d.poles_.end());
  return d;
}

Domain Domain::with_lattice(PoleLattice lattice) const {
  Domain d = *this;
  d.lattices_.push_back(lattice);
  return d;
}

bool Domain::is_all_reals() const {
  return intervals_.empty() && !has_poles();
}

bool Domain::contains(double x) const {
  if (std::isnan(x)) return false;
  if (!intervals_.empty()) {
    bool inside = false;
    for (const auto& iv : intervals_) {
      if (x >= iv.lo && x <= iv.hi) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  if (std::binary_search(poles_.begin(), poles_.end(), x)) return false;
  // Lattice poles are generally irrational; only the rounded pole itself is
  // excluded, neighbouring doubles evaluate normally.
  for (const auto& l : lattices_) {
    double k = nearest_index(l, x);
    if (l.offset + k * l.period == x) return false;
  }
  return true;
}

std::vector<double> Domain::poles_in(double lo, double hi) const {
  std::vector<double> out;
  for (double p : poles_) {
    if (p >= lo && p <= hi) out.push_back(p);
  }
  for (const auto& l : lattices_) {
    double k0 = std::ceil((lo - l.offset) / l.period) - 1;
    double k1 = std::floor((hi - l.offset) / l.period) + 1;
    for (double k = k0; k <= k1; k += 1) {
      double p = l.offset + k * l.period;
      if (p >= lo && p <= hi) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Domain Domain::shifted(double shift) const {
  Domain d;
  for (const auto& iv : intervals_) d.intervals_.push_back({iv.lo - shift, iv.hi - shift});
  for (double p : poles_) d.poles_.push_back(p - shift);
  for (const auto& l : lattices_) d.lattices_.push_back({l.offset - shift, l.period});
  return d;
}

Domain Domain::scaled(double a) const {
  Domain d;
  for (const auto& iv : intervals_) d.intervals_.push_back({iv.lo / a, iv.hi / a});
  for (double p : poles_) d.poles_.push_back(p / a);
  for (const auto& l : lattices_) d.lattices_.push_back({l.offset / a, l.period / a});
  return d;
}

Domain Domain::intersect(const Domain& other) const {
  Domain d;
  if (intervals_.empty()) {
    d.intervals_ = other.intervals_;
  } else if (other.intervals_.empty()) {
    d.intervals_ = intervals_;
  } else {
    for (const auto& a : intervals_) {
      for (const auto& b : other.intervals_) {
        double lo = std::max(a.lo, b.lo);
        double hi = std::min(a.hi, b.hi);
        if (lo <= hi) d.intervals_.push_back({lo, hi});
      }
    }
    if (d.intervals_.empty()) d.intervals_.push_back({kNaN, kNaN});
  }
  d.lattices_ = lattices_;
  d.lattices_.insert(d.lattices_.end(), other.lattices_.begin(), other.lattices_.end());
  return d.with_poles(poles_).with_poles(other.poles_);
}

RealFunction::RealFunction(Evaluator eval, Domain domain, std::string description)
    : impl_(std::make_shared<const Impl>(
          Impl{std::move(eval), std::move(domain), std::move(description), true})) {}

RealFunction RealFunction::derived(Evaluator eval, Domain domain, std::string description) {
  return RealFunction(std::make_shared<const Impl>(
      Impl{std::move(eval), std::move(domain), std::move(description), false}));
}

double RealFunction::operator()(double x) const {
  if (impl_->guarded && !impl_->domain.is_all_reals() && !impl_->domain.contains(x)) {
    return kNaN;
  }
  return impl_->eval(x);
}

RealFunction linear_combination(double k1, const RealFunction& f, double k2,
                                 const RealFunction& g) {
  return RealFunction::derived(
      [=](double x) { return k1 * f(x) + k2 * g(x); }, f.domain().intersect(g.domain()),
      "lincomb(" + f.description() + ", " + g.description() + ")");
}

RealFunction compose(const RealFunction& outer, const RealFunction& inner) {
  return RealFunction::derived([=](double x) { return outer(inner(x)); }, inner.domain(),
                               outer.description() + " o " + inner.description());
}

namespace fn {

RealFunction constant(double c) {
  return RealFunction([c](double) { return c; }, Domain::all_reals(), "const");
}

RealFunction identity() {
  return RealFunction([](double x) { return x; }, Domain::all_reals(), "x");
}

RealFunction power_abs(double alpha) {
  return RealFunction([alpha](double x) { return std::pow(std::fabs(x), alpha); },
                      Domain::all_reals(), "|x|^a");
}

RealFunction tan() {
  return RealFunction([](double x) { return std::tan(x); },
                      Domain::all_reals().with_lattice({std::numbers::pi / 2, std::numbers::pi}),
                      "tan(x)");
}

RealFunction cot() {
  return RealFunction([](double x) { return std::cos(x) / std::sin(x); },
                      Domain::all_reals().with_lattice({0.0, std::numbers::pi}), "cot(x)");
}

RealFunction cauchy_kernel() {
  return RealFunction([](double x) { return 1.0 / (std::numbers::pi * (1.0 + x * x)); },
                      Domain::all_reals(), "cauchy");
}

RealFunction triangle_kernel() {
  return RealFunction([](double x) { return std::max(0.0, 1.0 - std::fabs(x)); },
                      Domain::all_reals(), "triangle");
}

}  // namespace fn

}  // namespace fvlab
