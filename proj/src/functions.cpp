#include "mml/functions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "mml/error.hpp"

namespace mml {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(v);
}

/// Infinite ends are never closed.
Interval tidy(Interval i) {
  if (std::isinf(i.lo)) i.lo_closed = false;
  if (std::isinf(i.hi)) i.hi_closed = false;
  return i;
}

bool vector_in(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

// ---------------------------------------------------------------------------
// Intervals

Interval Interval::real_line() { return Interval::open(-kInf, kInf); }

bool Interval::contains(double x) const {
  bool above = lo_closed ? x >= lo : x > lo;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

bool Interval::empty() const {
  if (lo > hi) return true;
  if (lo == hi) return !(lo_closed && hi_closed);
  return false;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

bool contains(const Domain& domain, double x) {
  return std::any_of(domain.begin(), domain.end(),
                     [x](const Interval& i) { return i.contains(x); });
}

std::string to_string(const Interval& i) {
  return std::string(i.lo_closed ? "[" : "(") + num(i.lo) + ", " + num(i.hi) +
         (i.hi_closed ? "]" : ")");
}

std::string to_string(const Domain& domain) {
  if (domain.empty()) return "{}";
  std::string s;
  for (const auto& i : domain) {
    if (!s.empty()) s += " u ";
    s += to_string(i);
  }
  return s;
}

std::shared_ptr<const Function> Function::inverse_function() const {
  throw NotInvertible(name() + " has no inverse");
}

// ---------------------------------------------------------------------------
// Cts2Cts

double Cts2Cts::apply_x(double x) const {
  if (!in_domain(x)) {
    throw DomainError(name() + " is undefined at " + num(x) + " (domain " +
                      to_string(domain()) + ")");
  }
  return value_at(x);
}

double Cts2Cts::d_dx(double x) const {
  if (!in_domain(x)) {
    throw DomainError("derivative of " + name() + " is undefined at " + num(x));
  }
  return derivative_at(x);
}

CtsDatum Cts2Cts::apply(const CtsDatum& d) const {
  const double y = apply_x(d.x());
  const double slope = derivative_at(d.x());
  const double aom = d.aom() * std::fabs(slope);
  if (!(aom > 0.0) || !std::isfinite(aom)) {
    throw DegenerateTransform(name() + " has derivative " + num(slope) + " at " +
                              num(d.x()) + "; AoM would become " + num(aom));
  }
  if (!std::isfinite(y)) {
    throw DomainError(name() + "(" + num(d.x()) + ") is not finite");
  }
  return CtsDatum(y, aom);
}

std::shared_ptr<const Cts2Cts> Cts2Cts::inverse() const {
  throw NotInvertible(name() + " has no inverse");
}

Domain Cts2Cts::range() const { return mml::image(*this, domain()); }

Domain image(const Cts2Cts& f, const Domain& source) {
  Domain out;
  for (const auto& piece : f.domain()) {
    for (const auto& s : source) {
      Interval x = intersect(piece, s);
      if (x.empty()) continue;
      Interval y = tidy(f.image(x));
      if (!y.empty()) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

Domain preimage(const Cts2Cts& f, const Domain& target) {
  return image(*f.inverse(), target);
}

namespace {

class Identity final : public Cts2Cts {
 public:
  std::string name() const override { return "identity"; }
  Domain domain() const override { return {Interval::real_line()}; }
  bool in_domain(double x) const override { return std::isfinite(x); }
  bool has_inverse() const override { return true; }
  CtsFn inverse() const override { return std::make_shared<Identity>(); }
  Interval image(const Interval& p) const override { return p; }

 protected:
  double value_at(double x) const override { return x; }
  double derivative_at(double) const override { return 1.0; }
};

class Exp;

class Log final : public Cts2Cts {
 public:
  std::string name() const override { return "log"; }
  Domain domain() const override { return {Interval::open(0.0, kInf)}; }
  bool in_domain(double x) const override { return x > 0.0 && x < kInf; }
  bool has_inverse() const override { return true; }
  CtsFn inverse() const override;
  Interval image(const Interval& p) const override {
    return {std::log(p.lo), std::log(p.hi), p.lo_closed, p.hi_closed};
  }

 protected:
  double value_at(double x) const override { return std::log(x); }
  double derivative_at(double x) const override { return 1.0 / x; }
};

class Exp final : public Cts2Cts {
 public:
  std::string name() const override { return "exp"; }
  Domain domain() const override { return {Interval::real_line()}; }
  bool in_domain(double x) const override { return std::isfinite(x); }
  bool has_inverse() const override { return true; }
  CtsFn inverse() const override { return std::make_shared<Log>(); }
  Interval image(const Interval& p) const override {
    return {std::exp(p.lo), std::exp(p.hi), p.lo_closed, p.hi_closed};
  }

 protected:
  double value_at(double x) const override { return std::exp(x); }
  double derivative_at(double x) const override { return std::exp(x); }
};

CtsFn Log::inverse() const { return std::make_shared<Exp>(); }

class Inv final : public Cts2Cts {
 public:
  std::string name() const override { return "inv"; }
  Domain domain() const override {
    return {Interval::open(-kInf, 0.0), Interval::open(0.0, kInf)};
  }
  bool in_domain(double x) const override { return x != 0.0 && std::isfinite(x); }
  bool has_inverse() const override { return true; }
  CtsFn inverse() const override { return std::make_shared<Inv>(); }
  Interval image(const Interval& p) const override {
    // Decreasing on each piece, so the ends swap.
    const bool positive = p.lo >= 0.0;
    double lo = 0.0;
    double hi = 0.0;
    if (positive) {
      lo = std::isinf(p.hi) ? 0.0 : 1.0 / p.hi;
      hi = p.lo == 0.0 ? kInf : 1.0 / p.lo;
    } else {
      lo = p.hi == 0.0 ? -kInf : 1.0 / p.hi;
      hi = std::isinf(p.lo) ? 0.0 : 1.0 / p.lo;
    }
    return {lo, hi, p.hi_closed, p.lo_closed};
  }

 protected:
  double value_at(double x) const override { return 1.0 / x; }
  double derivative_at(double x) const override { return -1.0 / (x * x); }
};

/// x -> a x + b, or its inverse (x - b) / a when `inverted`; the flag keeps
/// inverse(inverse(f)) bit-identical to f.
class Linear final : public Cts2Cts {
 public:
  Linear(double a, double b, bool inverted) : a_(a), b_(b), inverted_(inverted) {}

  std::string name() const override {
    std::string base = "linear(" + num(a_) + "," + num(b_) + ")";
    return inverted_ ? base + "^-1" : base;
  }
  Domain domain() const override { return {Interval::real_line()}; }
  bool in_domain(double x) const override { return std::isfinite(x); }
  bool has_inverse() const override { return true; }
  CtsFn inverse() const override {
    return std::make_shared<Linear>(a_, b_, !inverted_);
  }
  Interval image(const Interval& p) const override {
    double lo = value_at(p.lo);
    double hi = value_at(p.hi);
    if (a_ > 0.0) return {lo, hi, p.lo_closed, p.hi_closed};
    return {hi, lo, p.hi_closed, p.lo_closed};
  }

 protected:
  double value_at(double x) const override {
    return inverted_ ? (x - b_) / a_ : a_ * x + b_;
  }
  double derivative_at(double) const override { return inverted_ ? 1.0 / a_ : a_; }

 private:
  double a_;
  double b_;
  bool inverted_;
};

class Composite final : public Cts2Cts {
 public:
  Composite(CtsFn outer, CtsFn inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {}

  std::string name() const override {
    return "compose(" + outer_->name() + "," + inner_->name() + ")";
  }

  Domain domain() const override {
    if (!inner_->has_inverse()) return inner_->domain();
    return preimage(*inner_, outer_->domain());
  }

  bool in_domain(double x) const override {
    return inner_->in_domain(x) && outer_->in_domain(inner_->apply_x(x));
  }

  bool has_inverse() const override {
    return outer_->has_inverse() && inner_->has_inverse();
  }

  CtsFn inverse() const override {
    if (!has_inverse()) throw NotInvertible(name() + " has no inverse");
    return std::make_shared<Composite>(inner_->inverse(), outer_->inverse());
  }

  Interval image(const Interval& p) const override {
    return outer_->image(tidy(inner_->image(p)));
  }

 protected:
  double value_at(double x) const override {
    return outer_->apply_x(inner_->apply_x(x));
  }
  double derivative_at(double x) const override {
    return outer_->d_dx(inner_->apply_x(x)) * inner_->d_dx(x);
  }

 private:
  CtsFn outer_;
  CtsFn inner_;
};

}  // namespace

CtsFn compose(CtsFn outer, CtsFn inner) {
  return std::make_shared<Composite>(std::move(outer), std::move(inner));
}

// ---------------------------------------------------------------------------
// CtsD2CtsD

namespace {

void check_vector(const CtsD2CtsD& f, std::span<const double> v) {
  if (v.size() != f.dimension()) {
    throw DomainError(f.name() + " expects dimension " +
                      std::to_string(f.dimension()) + ", got " +
                      std::to_string(v.size()));
  }
  if (!f.in_domain(v)) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    throw DomainError(f.name() + " is undefined at " + s + ") (domain " +
                      f.domain_description() + ")");
  }
}

}  // namespace

std::vector<double> CtsD2CtsD::apply_v(std::span<const double> v) const {
  check_vector(*this, v);
  return value_at(v);
}

Eigen::MatrixXd CtsD2CtsD::jacobian(std::span<const double> v) const {
  check_vector(*this, v);
  return jacobian_at(v);
}

double CtsD2CtsD::nl_jacobian_det(std::span<const double> v) const {
  check_vector(*this, v);
  const double n = nl_det_at(v);
  if (!std::isfinite(n)) {
    throw DegenerateTransform("Jacobian of " + name() + " is singular here");
  }
  return n;
}

double CtsD2CtsD::nl_det_at(std::span<const double> v) const {
  return -std::log(std::fabs(jacobian_at(v).determinant()));
}

VecDatum CtsD2CtsD::apply(const VecDatum& v) const {
  const auto x = v.components();
  const auto eps = v.aoms();
  const double nlj = nl_jacobian_det(x);
  const Eigen::MatrixXd j = jacobian_at(x);
  const std::size_t d = dimension();

  std::vector<double> aoms(d);
  double log_raw = 0.0;
  double log_target = -nlj;
  for (std::size_t col = 0; col < d; ++col) log_target += std::log(eps[col]);
  for (std::size_t row = 0; row < d; ++row) {
    double raw = 0.0;
    for (std::size_t col = 0; col < d; ++col) {
      raw += std::fabs(j(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col))) *
             eps[col];
    }
    if (!(raw > 0.0) || !std::isfinite(raw)) {
      throw DegenerateTransform("component " + std::to_string(row) + " of " +
                                name() + " would get zero AoM");
    }
    aoms[row] = raw;
    log_raw += std::log(raw);
  }
  const double scale = std::exp((log_target - log_raw) / static_cast<double>(d));
  double log_result = 0.0;
  for (double& a : aoms) {
    a *= scale;
    log_result += std::log(a);
  }
  if (std::fabs(std::expm1(log_result - log_target)) > 1e-9) {
    throw DegenerateTransform("AoM volume of " + name() +
                              " could not be preserved numerically");
  }
  return VecDatum(value_at(x), std::move(aoms));
}

std::shared_ptr<const CtsD2CtsD> CtsD2CtsD::inverse() const {
  throw NotInvertible(name() + " has no inverse");
}

namespace {

class Cartesian2Polar;

class Polar2Cartesian final : public CtsD2CtsD {
 public:
  std::string name() const override { return "polar2cartesian"; }
  std::size_t dimension() const override { return 2; }
  bool in_domain(std::span<const double> v) const override {
    return vector_in(v) && v[0] > 0.0 && v[1] >= 0.0 && v[1] < kTwoPi;
  }
  std::string domain_description() const override {
    return "r > 0, theta in [0, 2pi)";
  }
  bool has_inverse() const override { return true; }
  CtsDFn inverse() const override;

 protected:
  std::vector<double> value_at(std::span<const double> v) const override {
    return {v[0] * std::cos(v[1]), v[0] * std::sin(v[1])};
  }
  Eigen::MatrixXd jacobian_at(std::span<const double> v) const override {
    const double r = v[0];
    const double c = std::cos(v[1]);
    const double s = std::sin(v[1]);
    Eigen::MatrixXd j(2, 2);
    j << c, -r * s, s, r * c;
    return j;
  }
  double nl_det_at(std::span<const double> v) const override {
    return -std::log(v[0]);
  }
};

class Cartesian2Polar final : public CtsD2CtsD {
 public:
  std::string name() const override { return "cartesian2polar"; }
  std::size_t dimension() const override { return 2; }
  bool in_domain(std::span<const double> v) const override {
    return vector_in(v) && (v[0] != 0.0 || v[1] != 0.0);
  }
  std::string domain_description() const override { return "(x, y) != (0, 0)"; }
  bool has_inverse() const override { return true; }
  CtsDFn inverse() const override { return std::make_shared<Polar2Cartesian>(); }

 protected:
  std::vector<double> value_at(std::span<const double> v) const override {
    const double r = std::hypot(v[0], v[1]);
    double theta = std::atan2(v[1], v[0]);
    if (theta < 0.0) theta += kTwoPi;
    if (theta >= kTwoPi) theta = 0.0;
    return {r, theta};
  }
  Eigen::MatrixXd jacobian_at(std::span<const double> v) const override {
    const double x = v[0];
    const double y = v[1];
    const double r = std::hypot(x, y);
    const double r2 = r * r;
    Eigen::MatrixXd j(2, 2);
    j << x / r, y / r, -y / r2, x / r2;
    return j;
  }
  double nl_det_at(std::span<const double> v) const override {
    return std::log(std::hypot(v[0], v[1]));
  }
};

CtsDFn Polar2Cartesian::inverse() const { return std::make_shared<Cartesian2Polar>(); }

class Componentwise final : public CtsD2CtsD {
 public:
  explicit Componentwise(std::vector<CtsFn> parts) : parts_(std::move(parts)) {}

  std::string name() const override {
    std::string s = "componentwise(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      s += (i ? "," : "") + parts_[i]->name();
    }
    return s + ")";
  }
  std::size_t dimension() const override { return parts_.size(); }
  bool in_domain(std::span<const double> v) const override {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!parts_[i]->in_domain(v[i])) return false;
    }
    return true;
  }
  std::string domain_description() const override {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      s += (i ? " x " : "") + to_string(parts_[i]->domain());
    }
    return s;
  }
  bool has_inverse() const override {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const CtsFn& f) { return f->has_inverse(); });
  }
  CtsDFn inverse() const override {
    if (!has_inverse()) throw NotInvertible(name() + " has no inverse");
    std::vector<CtsFn> inv;
    for (const auto& f : parts_) inv.push_back(f->inverse());
    return std::make_shared<Componentwise>(std::move(inv));
  }

 protected:
  std::vector<double> value_at(std::span<const double> v) const override {
    std::vector<double> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[i]->apply_x(v[i]);
    return out;
  }
  Eigen::MatrixXd jacobian_at(std::span<const double> v) const override {
    const auto n = static_cast<Eigen::Index>(parts_.size());
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      j(i, i) = parts_[static_cast<std::size_t>(i)]->d_dx(v[static_cast<std::size_t>(i)]);
    }
    return j;
  }
  double nl_det_at(std::span<const double> v) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      s -= std::log(std::fabs(parts_[i]->d_dx(v[i])));
    }
    return s;
  }

 private:
  std::vector<CtsFn> parts_;
};

class Permutation final : public CtsD2CtsD {
 public:
  Permutation(std::vector<std::size_t> perm, std::string label)
      : perm_(std::move(perm)), label_(std::move(label)) {}

  std::string name() const override { return label_; }
  std::size_t dimension() const override { return perm_.size(); }
  bool in_domain(std::span<const double> v) const override { return vector_in(v); }
  std::string domain_description() const override {
    return "R^" + std::to_string(perm_.size());
  }
  bool has_inverse() const override { return true; }
  CtsDFn inverse() const override {
    std::vector<std::size_t> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = i;
    std::string label = inv == perm_ ? label_ : label_ + "^-1";
    if (label_.ends_with("^-1")) label = label_.substr(0, label_.size() - 3);
    return std::make_shared<Permutation>(std::move(inv), std::move(label));
  }

 protected:
  std::vector<double> value_at(std::span<const double> v) const override {
    std::vector<double> out(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) out[i] = v[perm_[i]];
    return out;
  }
  Eigen::MatrixXd jacobian_at(std::span<const double>) const override {
    const auto n = static_cast<Eigen::Index>(perm_.size());
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      j(i, static_cast<Eigen::Index>(perm_[static_cast<std::size_t>(i)])) = 1.0;
    }
    return j;
  }
  double nl_det_at(std::span<const double>) const override { return 0.0; }

 private:
  std::vector<std::size_t> perm_;
  std::string label_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Discrete bijections

DiscreteBijection::DiscreteBijection(DiscreteSpace domain, DiscreteSpace codomain)
    : domain_(domain), codomain_(codomain) {
  if (domain.lo > domain.hi || codomain.lo > codomain.hi) {
    throw BoundsError("discrete bijection over an empty space");
  }
  if (domain.size() != codomain.size()) {
    throw TransformError("discrete bijection between spaces of different size");
  }
}

std::int64_t DiscreteBijection::apply(std::int64_t v) const {
  if (!domain_.contains(v)) {
    throw DomainError(name() + " is undefined at " + std::to_string(v) +
                      " (domain [" + std::to_string(domain_.lo) + ", " +
                      std::to_string(domain_.hi) + "])");
  }
  return value_at(v);
}

DiscreteDatum DiscreteBijection::apply(const DiscreteDatum& d) const {
  return DiscreteDatum(apply(d.value()), codomain_);
}

namespace {

std::string space_str(const DiscreteSpace& s) {
  return std::to_string(s.lo) + ":" + std::to_string(s.hi);
}

class Reverse final : public DiscreteBijection {
 public:
  explicit Reverse(DiscreteSpace s) : DiscreteBijection(s, s) {}
  std::string name() const override { return "reverse[" + space_str(domain()) + "]"; }
  DiscreteFn inverse() const override { return std::make_shared<Reverse>(domain()); }

 protected:
  std::int64_t value_at(std::int64_t v) const override {
    return domain().lo + domain().hi - v;
  }
};

class Rotate final : public DiscreteBijection {
 public:
  Rotate(DiscreteSpace s, std::int64_t k)
      : DiscreteBijection(s, s), k_(((k % s.size()) + s.size()) % s.size()) {}
  std::string name() const override {
    return "rotate(" + std::to_string(k_) + ")[" + space_str(domain()) + "]";
  }
  DiscreteFn inverse() const override {
    return std::make_shared<Rotate>(domain(), domain().size() - k_);
  }

 protected:
  std::int64_t value_at(std::int64_t v) const override {
    return domain().lo + (v - domain().lo + k_) % domain().size();
  }

 private:
  std::int64_t k_;
};

class Shift final : public DiscreteBijection {
 public:
  Shift(DiscreteSpace s, std::int64_t k)
      : DiscreteBijection(s, {s.lo + k, s.hi + k}), k_(k) {}
  std::string name() const override {
    return "shift(" + std::to_string(k_) + ")[" + space_str(domain()) + "]";
  }
  DiscreteFn inverse() const override {
    return std::make_shared<Shift>(codomain(), -k_);
  }

 protected:
  std::int64_t value_at(std::int64_t v) const override { return v + k_; }

 private:
  std::int64_t k_;
};

template <typename Ptr>
Ptr checked_inverse(const Ptr& f) {
  if (!f) throw NotInvertible("null function");
  if (!f->has_inverse()) throw NotInvertible(f->name() + " has no inverse");
  return f->inverse();
}

}  // namespace

CtsFn invert(const CtsFn& f) { return checked_inverse(f); }
CtsDFn invert(const CtsDFn& f) { return checked_inverse(f); }
DiscreteFn invert(const DiscreteFn& f) { return checked_inverse(f); }

FunctionPtr invert(const FunctionPtr& f) {
  if (!f) throw NotInvertible("null function");
  if (!f->has_inverse()) throw NotInvertible(f->name() + " has no inverse");
  return f->inverse_function();
}

namespace library {

CtsFn identity() { return std::make_shared<Identity>(); }
CtsFn log() { return std::make_shared<Log>(); }
CtsFn exp() { return std::make_shared<Exp>(); }
CtsFn inv() { return std::make_shared<Inv>(); }

CtsFn linear(double a, double b) {
  if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("linear(a, b) needs finite a != 0 and finite b");
  }
  return std::make_shared<Linear>(a, b, false);
}

CtsDFn polar2cartesian() { return std::make_shared<Polar2Cartesian>(); }
CtsDFn cartesian2polar() { return std::make_shared<Cartesian2Polar>(); }

CtsDFn componentwise(std::vector<CtsFn> parts) {
  if (parts.empty()) throw ParameterError("componentwise needs at least one function");
  for (const auto& p : parts) {
    if (!p) throw ParameterError("componentwise given a null function");
  }
  return std::make_shared<Componentwise>(std::move(parts));
}

CtsDFn componentwise(const CtsFn& f, std::size_t dimension) {
  return componentwise(std::vector<CtsFn>(dimension, f));
}

CtsDFn permute_components(std::vector<std::size_t> perm) {
  std::vector<std::size_t> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) throw ParameterError("not a permutation of 0..D-1");
  }
  if (perm.empty()) throw ParameterError("empty permutation");
  std::string label = "permute(";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    label += (i ? "," : "") + std::to_string(perm[i]);
  }
  return std::make_shared<Permutation>(std::move(perm), label + ")");
}

CtsDFn swap_components() {
  return std::make_shared<Permutation>(std::vector<std::size_t>{1, 0}, "swap");
}

DiscreteFn reverse(DiscreteSpace space) { return std::make_shared<Reverse>(space); }
DiscreteFn rotate(DiscreteSpace space, std::int64_t k) {
  return std::make_shared<Rotate>(space, k);
}
DiscreteFn shift(DiscreteSpace domain, std::int64_t k) {
  return std::make_shared<Shift>(domain, k);
}

}  // namespace library

}  // namespace mml
