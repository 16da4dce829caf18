#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace fvlab {

/// Closed interval; either bound may be infinite.
struct Interval {
  double lo;
  double hi;
};

/// Periodic pole set {offset + k * period : k integer}, period > 0.
struct PoleLattice {
  double offset;
  double period;
};

/// Where a function is defined: a union of closed intervals (empty list
/// means the whole real line) minus a set of isolated poles.
class Domain {
 public:
  static Domain all_reals() { return Domain{}; }
  static Domain intervals(std::vector<Interval> parts);

  Domain with_poles(std::vector<double> poles) const;
  Domain with_lattice(PoleLattice lattice) const;

  bool contains(double x) const;
  bool is_all_reals() const;
  bool has_poles() const { return !poles_.empty() || !lattices_.empty(); }

  /// Sorted poles within [lo, hi].
  std::vector<double> poles_in(double lo, double hi) const;

  /// Domain of x -> f(x + shift) given that this is the domain of f.
  Domain shifted(double shift) const;
  /// Domain of x -> f(a * x), a > 0.
  Domain scaled(double a) const;
  /// Domain of a pointwise combination of two functions.
  Domain intersect(const Domain& other) const;

  const std::vector<Interval>& parts() const { return intervals_; }
  const std::vector<double>& poles() const { return poles_; }
  const std::vector<PoleLattice>& lattices() const { return lattices_; }

 private:
  std::vector<Interval> intervals_;
  std::vector<double> poles_;
  std::vector<PoleLattice> lattices_;
};

/// An immutable mapping from a real argument to an extended real: a finite
/// double, +/-infinity, or NaN standing for "undefined".  Copies share the
/// evaluator, and evaluation is safe from many threads.
class RealFunction {
 public:
  using Evaluator = std::function<double(double)>;

  /// The evaluator is guarded by `domain`: arguments outside it map to NaN.
  RealFunction(Evaluator eval, Domain domain, std::string description);

  /// Wraps an evaluator that already enforces the domain of whatever it is
  /// built from (translations, combinations).  `domain` is descriptive only.
  static RealFunction derived(Evaluator eval, Domain domain,
                              std::string description);

  double operator()(double x) const;

  const Domain& domain() const { return impl_->domain; }
  const std::string& description() const { return impl_->description; }

 private:
  struct Impl {
    Evaluator eval;
    Domain domain;
    std::string description;
    bool guarded;
  };

  explicit RealFunction(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Pointwise k1 * f + k2 * g.
RealFunction linear_combination(double k1, const RealFunction& f, double k2,
                                 const RealFunction& g);

/// x -> outer(inner(x)).
RealFunction compose(const RealFunction& outer, const RealFunction& inner);

namespace fn {

RealFunction constant(double c);
RealFunction identity();
/// |x|^alpha, any real alpha (alpha < 0 gives +inf at the origin).
RealFunction power_abs(double alpha);
/// tan and cot with their pole lattices declared in the domain.
RealFunction tan();
RealFunction cot();
/// 1 / (pi (1 + x^2)).
RealFunction cauchy_kernel();
/// max(0, 1 - |x|).
RealFunction triangle_kernel();

}  // namespace fn

}  // namespace fvlab
