#ifndef MML_FUNCTIONS_HPP
#define MML_FUNCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mml/values.hpp"

namespace mml {

/// A real interval with independently open or closed ends. Infinite ends
/// are always open.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval real_line();

  bool contains(double x) const;
  bool empty() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval intersect(const Interval& a, const Interval& b);

/// A union of disjoint intervals in ascending order.
using Domain = std::vector<Interval>;

bool contains(const Domain& domain, double x);
std::string to_string(const Interval& interval);
std::string to_string(const Domain& domain);

enum class FunctionKind { Cts2Cts, CtsD2CtsD, Discrete };

/// A first-class function value. An inverse, when present, is produced on
/// demand; inverse().inverse() denotes the original function.
class Function {
 public:
  virtual ~Function() = default;

  virtual std::string name() const = 0;
  virtual FunctionKind kind() const = 0;
  virtual bool has_inverse() const { return false; }

  /// Throws NotInvertible when has_inverse() is false.
  virtual std::shared_ptr<const Function> inverse_function() const;
};

using FunctionPtr = std::shared_ptr<const Function>;

// ---------------------------------------------------------------------------

/// R -> R with derivative. The domain is a union of pieces; on each piece
/// an invertible function is continuous and strictly monotone.
class Cts2Cts : public Function {
 public:
  FunctionKind kind() const final { return FunctionKind::Cts2Cts; }

  virtual Domain domain() const = 0;
  virtual bool in_domain(double x) const { return contains(domain(), x); }

  /// Throws DomainError outside the domain.
  double apply_x(double x) const;
  /// Derivative at x; throws DomainError outside the domain.
  double d_dx(double x) const;

  /// f(d) = f(x) with AoM aom * |f'(x)|. Throws DegenerateTransform when
  /// f'(x) = 0.
  CtsDatum apply(const CtsDatum& d) const;

  virtual std::shared_ptr<const Cts2Cts> inverse() const;
  std::shared_ptr<const Function> inverse_function() const override {
    return inverse();
  }

  /// Image of an interval that lies within a single domain piece. Endpoints
  /// that are limits (e.g. log at 0) map to their limiting values.
  virtual Interval image(const Interval& piece) const = 0;

  /// The union of the images of every domain piece.
  Domain range() const;

 protected:
  virtual double value_at(double x) const = 0;
  virtual double derivative_at(double x) const = 0;
};

using CtsFn = std::shared_ptr<const Cts2Cts>;

/// outer(inner(x)) with the chain-rule derivative. Invertible iff both
/// parts are, with inverse inner^-1 . outer^-1.
CtsFn compose(CtsFn outer, CtsFn inner);

/// Preimage of `target` under f, computed through f's inverse.
Domain preimage(const Cts2Cts& f, const Domain& target);

/// Image of `source` (intersected with f's domain) under f.
Domain image(const Cts2Cts& f, const Domain& source);

// ---------------------------------------------------------------------------

/// R^D -> R^D with Jacobian and negative log |det J|.
class CtsD2CtsD : public Function {
 public:
  FunctionKind kind() const final { return FunctionKind::CtsD2CtsD; }

  virtual std::size_t dimension() const = 0;
  virtual bool in_domain(std::span<const double> v) const = 0;
  virtual std::string domain_description() const = 0;

  /// Throws DomainError on dimension mismatch or outside the domain.
  std::vector<double> apply_v(std::span<const double> v) const;
  Eigen::MatrixXd jacobian(std::span<const double> v) const;
  Eigen::MatrixXd jacobian(const VecDatum& v) const {
    return jacobian(v.components());
  }

  /// -ln |det J(v)|. Throws DegenerateTransform where det J = 0.
  double nl_jacobian_det(std::span<const double> v) const;
  double nl_jacobian_det(const VecDatum& v) const {
    return nl_jacobian_det(v.components());
  }

  /// Applies the function to a measured vector. Result AoMs take their
  /// ratios from row-wise interval propagation raw_i = sum_j |J_ij| aom_j and
  /// are then scaled by one common factor so that their product equals
  /// |det J| times the input AoM volume.
  VecDatum apply(const VecDatum& v) const;

  virtual std::shared_ptr<const CtsD2CtsD> inverse() const;
  std::shared_ptr<const Function> inverse_function() const override {
    return inverse();
  }

 protected:
  virtual std::vector<double> value_at(std::span<const double> v) const = 0;
  virtual Eigen::MatrixXd jacobian_at(std::span<const double> v) const = 0;
  /// Defaults to -ln |det jacobian_at(v)|.
  virtual double nl_det_at(std::span<const double> v) const;
};

using CtsDFn = std::shared_ptr<const CtsD2CtsD>;

// ---------------------------------------------------------------------------

/// A one-to-one map from a bounded integer space onto a same-sized space.
class DiscreteBijection : public Function {
 public:
  DiscreteBijection(DiscreteSpace domain, DiscreteSpace codomain);

  FunctionKind kind() const final { return FunctionKind::Discrete; }
  bool has_inverse() const final { return true; }

  const DiscreteSpace& domain() const { return domain_; }
  const DiscreteSpace& codomain() const { return codomain_; }

  /// Throws DomainError outside the domain.
  std::int64_t apply(std::int64_t v) const;
  DiscreteDatum apply(const DiscreteDatum& d) const;

  virtual std::shared_ptr<const DiscreteBijection> inverse() const = 0;
  std::shared_ptr<const Function> inverse_function() const override {
    return inverse();
  }

 protected:
  virtual std::int64_t value_at(std::int64_t v) const = 0;

 private:
  DiscreteSpace domain_;
  DiscreteSpace codomain_;
};

using DiscreteFn = std::shared_ptr<const DiscreteBijection>;

// ---------------------------------------------------------------------------

/// Throws NotInvertible when f declares no inverse.
CtsFn invert(const CtsFn& f);
CtsDFn invert(const CtsDFn& f);
DiscreteFn invert(const DiscreteFn& f);
FunctionPtr invert(const FunctionPtr& f);

/// Built-in functions.
namespace library {

CtsFn identity();
/// Natural log on (0, inf); inverse exp.
CtsFn log();
CtsFn exp();
/// 1/x on x != 0; its own inverse.
CtsFn inv();
/// x -> a*x + b, a != 0 (ParameterError otherwise).
CtsFn linear(double a, double b);

/// (r, theta) -> (r cos theta, r sin theta) on r > 0, theta in [0, 2 pi).
CtsDFn polar2cartesian();
/// (x, y) -> (r, theta) with theta in [0, 2 pi); the origin is excluded.
CtsDFn cartesian2polar();
/// Applies one Cts2Cts per component.
CtsDFn componentwise(std::vector<CtsFn> parts);
CtsDFn componentwise(const CtsFn& f, std::size_t dimension);
/// result[i] = v[perm[i]].
CtsDFn permute_components(std::vector<std::size_t> perm);
CtsDFn swap_components();

/// d -> lo + hi - d.
DiscreteFn reverse(DiscreteSpace space);
/// d -> lo + (d - lo + k) mod size.
DiscreteFn rotate(DiscreteSpace space, std::int64_t k);
/// d -> d + k, from `domain` onto domain shifted by k.
DiscreteFn shift(DiscreteSpace domain, std::int64_t k);

}  // namespace library

}  // namespace mml

#endif  // MML_FUNCTIONS_HPP
