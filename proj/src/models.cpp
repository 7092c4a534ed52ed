#include "mml/models.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "mml/error.hpp"
#include "mml/estimation.hpp"

namespace mml {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2 pi) / 2

std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(v);
}

std::string space_str(const DiscreteSpace& s) {
  return "[" + std::to_string(s.lo) + ", " + std::to_string(s.hi) + "]";
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Discretes: return "Discretes";
    case ModelKind::Continuous: return "Continuous";
    case ModelKind::RD: return "R_D";
  }
  return "?";
}

StatParams StatParams::of_components(std::vector<StatParams> parts) {
  StatParams sp;
  sp.components = std::move(parts);
  return sp;
}

std::string StatParams::to_string() const {
  if (trivial()) return "()";
  std::string s = "<";
  bool first = true;
  for (double v : values) {
    s += (first ? "" : ", ") + num(v);
    first = false;
  }
  for (const auto& c : components) {
    s += (first ? "" : ", ") + c.to_string();
    first = false;
  }
  return s + ">";
}

// ---------------------------------------------------------------------------
// Model base behaviour

Model::Model(UPModelPtr parent, StatParams params, double msg1)
    : parent_(std::move(parent)), params_(std::move(params)), msg1_(msg1) {}

double Model::pr(const Datum& d) const { return std::exp(-nl_pr(d)); }

double DiscreteModel::nl_pr(const Datum& d) const {
  const auto* v = std::get_if<DiscreteDatum>(&d);
  if (!v) throw DomainError(name() + " expects a discrete datum");
  return nl_pr(v->value());
}

Datum DiscreteModel::random_datum(Rng& rng, double) const {
  return DiscreteDatum(sample(rng), space());
}

double ContinuousModel::pdf(double x) const { return std::exp(-nl_pdf(x)); }

double ContinuousModel::nl_pr(const Datum& d) const {
  const auto* v = std::get_if<CtsDatum>(&d);
  if (!v) throw DomainError(name() + " expects a continuous datum");
  return nl_pr(*v);
}

double ContinuousModel::pr(const CtsDatum& d) const { return std::exp(-nl_pr(d)); }

CtsDatum ContinuousModel::random(Rng& rng, double aom) const {
  return CtsDatum(sample(rng), aom);
}

Datum ContinuousModel::random_datum(Rng& rng, double aom) const {
  return random(rng, aom);
}

double RDModel::pdf(std::span<const double> v) const { return std::exp(-nl_pdf(v)); }

double RDModel::nl_pr(const VecDatum& d) const {
  double s = nl_pdf(d.components());
  for (double a : d.aoms()) s -= std::log(a);
  return s;
}

double RDModel::nl_pr(const Datum& d) const {
  const auto* v = std::get_if<VecDatum>(&d);
  if (!v) throw DomainError(name() + " expects a vector datum");
  return nl_pr(*v);
}

VecDatum RDModel::random(Rng& rng, double aom) const {
  return VecDatum(sample(rng), std::vector<double>(dimension(), aom));
}

Datum RDModel::random_datum(Rng& rng, double aom) const { return random(rng, aom); }

const DiscreteModel& as_discrete(const Model& m) {
  if (const auto* p = dynamic_cast<const DiscreteModel*>(&m)) return *p;
  throw Error(m.name() + " is not a discrete model");
}

const ContinuousModel& as_continuous(const Model& m) {
  if (const auto* p = dynamic_cast<const ContinuousModel*>(&m)) return *p;
  throw Error(m.name() + " is not a continuous model");
}

const RDModel& as_rd(const Model& m) {
  if (const auto* p = dynamic_cast<const RDModel*>(&m)) return *p;
  throw Error(m.name() + " is not an R^D model");
}

std::string describe(const Model& m) {
  std::string s;
  s += "model: " + m.name() + "\n";
  s += "problem-defining: " + m.upmodel()->problem_params() + "\n";
  s += "params: " + m.params().to_string() + "\n";
  s += "msg1: " + num(m.msg1()) + " nits\n";
  return s;
}

EstimatorPtr UPModel::estimator() const { return estimator(EstimatorParams{}); }

// ---------------------------------------------------------------------------
// Normal

namespace {

class NormalModel final : public ContinuousModel {
 public:
  NormalModel(UPModelPtr parent, StatParams sp, double msg1)
      : ContinuousModel(std::move(parent), sp, msg1),
        mu_(sp.values[0]),
        sigma_(sp.values[1]),
        log_sigma_(std::log(sp.values[1])) {}

  Domain support() const override { return {Interval::real_line()}; }

  double nl_pdf(double x) const override {
    if (!std::isfinite(x)) throw DomainError("Normal density at non-finite value");
    const double z = (x - mu_) / sigma_;
    return kHalfLog2Pi + log_sigma_ + 0.5 * z * z;
  }

  double sample(Rng& rng) const override {
    return std::normal_distribution<double>(mu_, sigma_)(rng);
  }

 private:
  double mu_;
  double sigma_;
  double log_sigma_;
};

class NormalUPM final : public ContinuousUPModel {
 public:
  std::string name() const override { return "Normal"; }

  EstimatorPtr estimator(const EstimatorParams& ps) const override {
    return make_normal_estimator(shared_from_this(), ps);
  }

 protected:
  ModelPtr make_model(const StatParams& sp, double msg1) const override {
    if (sp.values.size() != 2 || !sp.components.empty()) {
      throw ParameterError("Normal expects <mean, sd>, got " + sp.to_string());
    }
    if (!std::isfinite(sp.values[0])) {
      throw ParameterError("Normal mean must be finite");
    }
    if (!std::isfinite(sp.values[1]) || !(sp.values[1] > 0.0)) {
      throw ParameterError("Normal sd must be finite and positive, got " +
                           num(sp.values[1]));
    }
    return std::make_shared<NormalModel>(shared_from_this(), sp, msg1);
  }
};

// ---------------------------------------------------------------------------
// Discrete families

void check_in_space(const DiscreteSpace& s, std::int64_t v, const std::string& who) {
  if (!s.contains(v)) {
    throw DomainError(std::to_string(v) + " is outside the data space " +
                      space_str(s) + " of " + who);
  }
}

class UniformModel final : public DiscreteModel {
 public:
  UniformModel(UPModelPtr parent, DiscreteSpace space, double msg1)
      : DiscreteModel(std::move(parent), {}, msg1), space_(space) {}

  DiscreteSpace space() const override { return space_; }
  double pr(std::int64_t v) const override {
    check_in_space(space_, v, name());
    return 1.0 / static_cast<double>(space_.size());
  }
  std::int64_t sample(Rng& rng) const override {
    return std::uniform_int_distribution<std::int64_t>(space_.lo, space_.hi)(rng);
  }

 private:
  DiscreteSpace space_;
};

class BoundedUniformUPM final : public DiscreteUPModel {
 public:
  explicit BoundedUniformUPM(DiscreteSpace space) : space_(space) {}

  std::string name() const override { return "BoundedUniform" + space_str(space_); }
  std::string problem_params() const override { return space_str(space_); }
  DiscreteSpace space() const override { return space_; }

  EstimatorPtr estimator(const EstimatorParams& ps) const override {
    return make_uniform_estimator(shared_from_this(), ps);
  }

 protected:
  ModelPtr make_model(const StatParams& sp, double msg1) const override {
    if (!sp.trivial()) {
      throw ParameterError("BoundedUniform takes no statistical parameters, got " +
                           sp.to_string());
    }
    return std::make_shared<UniformModel>(shared_from_this(), space_, msg1);
  }

 private:
  DiscreteSpace space_;
};

class MultiStateModel final : public DiscreteModel {
 public:
  MultiStateModel(UPModelPtr parent, DiscreteSpace space, StatParams sp, double msg1)
      : DiscreteModel(std::move(parent), sp, msg1), space_(space) {
    cumulative_.reserve(sp.values.size());
    double c = 0.0;
    for (double p : sp.values) cumulative_.push_back(c += p);
  }

  DiscreteSpace space() const override { return space_; }
  double pr(std::int64_t v) const override {
    check_in_space(space_, v, name());
    return params().values[static_cast<std::size_t>(v - space_.lo)];
  }
  std::int64_t sample(Rng& rng) const override {
    const double u = std::uniform_real_distribution<double>(0.0, cumulative_.back())(rng);
    std::size_t i = 0;
    while (i + 1 < cumulative_.size() && !(u < cumulative_[i])) ++i;
    return space_.lo + static_cast<std::int64_t>(i);
  }

 private:
  DiscreteSpace space_;
  std::vector<double> cumulative_;
};

class MultiStateUPM final : public DiscreteUPModel {
 public:
  explicit MultiStateUPM(DiscreteSpace space) : space_(space) {}

  std::string name() const override { return "MultiState" + space_str(space_); }
  std::string problem_params() const override { return space_str(space_); }
  DiscreteSpace space() const override { return space_; }

  EstimatorPtr estimator(const EstimatorParams& ps) const override {
    return make_multistate_estimator(shared_from_this(), ps);
  }

 protected:
  ModelPtr make_model(const StatParams& sp, double msg1) const override {
    const auto k = static_cast<std::size_t>(space_.size());
    if (!sp.components.empty() || sp.values.size() != k) {
      throw ParameterError("MultiState" + space_str(space_) + " expects " +
                           std::to_string(k) + " probabilities, got " + sp.to_string());
    }
    double total = 0.0;
    for (double p : sp.values) {
      if (!std::isfinite(p) || p < 0.0) {
        throw ParameterError("MultiState probabilities must be non-negative");
      }
      total += p;
    }
    if (std::fabs(total - 1.0) > 1e-9) {
      throw ParameterError("MultiState probabilities sum to " + num(total) +
                           ", not 1");
    }
    return std::make_shared<MultiStateModel>(shared_from_this(), space_, sp, msg1);
  }

 private:
  DiscreteSpace space_;
};

// ---------------------------------------------------------------------------
// Independent components on R^D

class IndependentRDModel final : public RDModel {
 public:
  IndependentRDModel(UPModelPtr parent, StatParams sp, double msg1,
                     std::vector<std::shared_ptr<const ContinuousModel>> parts)
      : RDModel(std::move(parent), std::move(sp), msg1), parts_(std::move(parts)) {}

  std::size_t dimension() const override { return parts_.size(); }

  double nl_pdf(std::span<const double> v) const override {
    if (v.size() != parts_.size()) {
      throw DomainError(name() + " expects dimension " +
                        std::to_string(parts_.size()) + ", got " +
                        std::to_string(v.size()));
    }
    double s = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += parts_[i]->nl_pdf(v[i]);
    return s;
  }

  std::vector<double> sample(Rng& rng) const override {
    std::vector<double> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(p->sample(rng));
    return out;
  }

 private:
  std::vector<std::shared_ptr<const ContinuousModel>> parts_;
};

class IndependentRDUPM final : public RDUPModel {
 public:
  explicit IndependentRDUPM(std::vector<std::shared_ptr<const ContinuousUPModel>> parts)
      : parts_(std::move(parts)) {}

  std::string name() const override {
    std::string s = "R_D(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      s += (i ? "," : "") + parts_[i]->name();
    }
    return s + ")";
  }
  std::string problem_params() const override {
    return "D=" + std::to_string(parts_.size());
  }
  std::size_t dimension() const override { return parts_.size(); }

  EstimatorPtr estimator(const EstimatorParams& ps) const override {
    return make_independent_rd_estimator(shared_from_this(), parts_, ps);
  }

 protected:
  ModelPtr make_model(const StatParams& sp, double msg1) const override {
    if (!sp.values.empty() || sp.components.size() != parts_.size()) {
      throw ParameterError(name() + " expects " + std::to_string(parts_.size()) +
                           " component parameter sets, got " + sp.to_string());
    }
    std::vector<std::shared_ptr<const ContinuousModel>> models;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto m = parts_[i]->parameterise(sp.components[i]);
      models.push_back(std::static_pointer_cast<const ContinuousModel>(m));
    }
    return std::make_shared<IndependentRDModel>(shared_from_this(), sp, msg1,
                                                std::move(models));
  }

 private:
  std::vector<std::shared_ptr<const ContinuousUPModel>> parts_;
};

// ---------------------------------------------------------------------------
// Transformed models

class TransformedContinuousModel final : public ContinuousModel {
 public:
  TransformedContinuousModel(UPModelPtr parent,
                             std::shared_ptr<const ContinuousModel> base, CtsFn f)
      : ContinuousModel(std::move(parent), base->params(), base->msg1()),
        base_(std::move(base)),
        f_(std::move(f)),
        f_inv_(f_->inverse()) {}

  Domain support() const override { return image(*f_inv_, base_->support()); }

  double nl_pdf(double x) const override {
    const double y = f_->apply_x(x);
    const double slope = std::fabs(f_->d_dx(x));
    return base_->nl_pdf(y) - std::log(slope);
  }

  double sample(Rng& rng) const override { return f_inv_->apply_x(base_->sample(rng)); }

 private:
  std::shared_ptr<const ContinuousModel> base_;
  CtsFn f_;
  CtsFn f_inv_;
};

class TransformedDiscreteModel final : public DiscreteModel {
 public:
  TransformedDiscreteModel(UPModelPtr parent, std::shared_ptr<const DiscreteModel> base,
                           DiscreteFn f)
      : DiscreteModel(std::move(parent), base->params(), base->msg1()),
        base_(std::move(base)),
        f_(std::move(f)),
        f_inv_(f_->inverse()) {}

  DiscreteSpace space() const override { return f_->domain(); }
  double pr(std::int64_t v) const override { return base_->pr(f_->apply(v)); }
  std::int64_t sample(Rng& rng) const override { return f_inv_->apply(base_->sample(rng)); }

 private:
  std::shared_ptr<const DiscreteModel> base_;
  DiscreteFn f_;
  DiscreteFn f_inv_;
};

class TransformedRDModel final : public RDModel {
 public:
  TransformedRDModel(UPModelPtr parent, std::shared_ptr<const RDModel> base, CtsDFn f)
      : RDModel(std::move(parent), base->params(), base->msg1()),
        base_(std::move(base)),
        f_(std::move(f)),
        f_inv_(f_->inverse()) {}

  std::size_t dimension() const override { return f_->dimension(); }

  double nl_pdf(std::span<const double> v) const override {
    const auto y = f_->apply_v(v);
    return base_->nl_pdf(y) + f_->nl_jacobian_det(v);
  }

  std::vector<double> sample(Rng& rng) const override {
    return f_inv_->apply_v(base_->sample(rng));
  }

 private:
  std::shared_ptr<const RDModel> base_;
  CtsDFn f_;
  CtsDFn f_inv_;
};

std::string transformed_name(const UPModel& base, const Function& f) {
  return base.name() + ".transform(" + f.name() + ")";
}

class TransformedContinuousUPM final : public ContinuousUPModel {
 public:
  TransformedContinuousUPM(std::shared_ptr<const ContinuousUPModel> base, CtsFn f)
      : base_(std::move(base)), f_(std::move(f)) {}

  std::string name() const override { return transformed_name(*base_, *f_); }
  std::string problem_params() const override { return base_->problem_params(); }

  EstimatorPtr estimator(const EstimatorParams& ps) const override {
    return make_transformed_estimator(shared_from_this(), base_, f_, ps);
  }

 protected:
  ModelPtr make_model(const StatParams& sp, double msg1) const override {
    auto m = std::static_pointer_cast<const ContinuousModel>(
        base_->parameterise_estimated(sp, msg1));
    return std::make_shared<TransformedContinuousModel>(shared_from_this(), m, f_);
  }

 private:
  std::shared_ptr<const ContinuousUPModel> base_;
  CtsFn f_;
};

class TransformedDiscreteUPM final : public DiscreteUPModel {
 public:
  TransformedDiscreteUPM(std::shared_ptr<const DiscreteUPModel> base, DiscreteFn f)
      : base_(std::move(base)), f_(std::move(f)) {}

  std::string name() const override { return transformed_name(*base_, *f_); }
  std::string problem_params() const override { return space_str(space()); }
  DiscreteSpace space() const override { return f_->domain(); }

  EstimatorPtr estimator(const EstimatorParams& ps) const override {
    return make_transformed_estimator(shared_from_this(), base_, f_, ps);
  }

 protected:
  ModelPtr make_model(const StatParams& sp, double msg1) const override {
    auto m = std::static_pointer_cast<const DiscreteModel>(
        base_->parameterise_estimated(sp, msg1));
    return std::make_shared<TransformedDiscreteModel>(shared_from_this(), m, f_);
  }

 private:
  std::shared_ptr<const DiscreteUPModel> base_;
  DiscreteFn f_;
};

class TransformedRDUPM final : public RDUPModel {
 public:
  TransformedRDUPM(std::shared_ptr<const RDUPModel> base, CtsDFn f)
      : base_(std::move(base)), f_(std::move(f)) {}

  std::string name() const override { return transformed_name(*base_, *f_); }
  std::string problem_params() const override { return base_->problem_params(); }
  std::size_t dimension() const override { return base_->dimension(); }

  EstimatorPtr estimator(const EstimatorParams& ps) const override {
    return make_transformed_estimator(shared_from_this(), base_, f_, ps);
  }

 protected:
  ModelPtr make_model(const StatParams& sp, double msg1) const override {
    auto m = std::static_pointer_cast<const RDModel>(base_->parameterise_estimated(sp, msg1));
    return std::make_shared<TransformedRDModel>(shared_from_this(), m, f_);
  }

 private:
  std::shared_ptr<const RDUPModel> base_;
  CtsDFn f_;
};

void require_invertible(const FunctionPtr& f) {
  if (!f) throw TransformError("cannot transform by a null function");
  if (!f->has_inverse()) {
    throw TransformError("cannot transform by " + f->name() + ": it has no inverse");
  }
}

[[noreturn]] void kind_mismatch(const std::string& model, const Function& f) {
  throw TransformError("cannot transform " + model + " by " + f.name() +
                       ": function kind does not match the data space");
}

}  // namespace

// ---------------------------------------------------------------------------

std::shared_ptr<const UPModel> UPModel::transform(const FunctionPtr& f) const {
  require_invertible(f);
  auto self = shared_from_this();
  switch (kind()) {
    case ModelKind::Continuous:
      if (auto g = std::dynamic_pointer_cast<const Cts2Cts>(f)) {
        return std::make_shared<TransformedContinuousUPM>(
            std::static_pointer_cast<const ContinuousUPModel>(self), g);
      }
      break;
    case ModelKind::Discretes:
      if (auto g = std::dynamic_pointer_cast<const DiscreteBijection>(f)) {
        auto base = std::static_pointer_cast<const DiscreteUPModel>(self);
        if (g->codomain() != base->space()) {
          throw TransformError("cannot transform " + name() + " by " + g->name() +
                               ": its range " + space_str(g->codomain()) +
                               " is not the data space " + space_str(base->space()));
        }
        return std::make_shared<TransformedDiscreteUPM>(base, g);
      }
      break;
    case ModelKind::RD:
      if (auto g = std::dynamic_pointer_cast<const CtsD2CtsD>(f)) {
        auto base = std::static_pointer_cast<const RDUPModel>(self);
        if (g->dimension() != base->dimension()) {
          throw TransformError("cannot transform " + name() + " by " + g->name() +
                               ": dimension mismatch");
        }
        return std::make_shared<TransformedRDUPM>(base, g);
      }
      break;
  }
  kind_mismatch(name(), *f);
}

ModelPtr Model::transform(const FunctionPtr& f) const {
  auto parent = upmodel()->transform(f);
  auto self = shared_from_this();
  switch (kind()) {
    case ModelKind::Continuous:
      return std::make_shared<TransformedContinuousModel>(
          parent, std::static_pointer_cast<const ContinuousModel>(self),
          std::static_pointer_cast<const Cts2Cts>(f));
    case ModelKind::Discretes:
      return std::make_shared<TransformedDiscreteModel>(
          parent, std::static_pointer_cast<const DiscreteModel>(self),
          std::static_pointer_cast<const DiscreteBijection>(f));
    case ModelKind::RD:
      return std::make_shared<TransformedRDModel>(
          parent, std::static_pointer_cast<const RDModel>(self),
          std::static_pointer_cast<const CtsD2CtsD>(f));
  }
  kind_mismatch(name(), *f);
}

std::shared_ptr<const ContinuousUPModel> normal_upmodel() {
  static const auto instance = std::make_shared<NormalUPM>();
  return instance;
}

std::shared_ptr<const DiscreteUPModel> bounded_uniform_upmodel(std::int64_t lo,
                                                               std::int64_t hi) {
  return std::make_shared<BoundedUniformUPM>(DiscreteSpace::bounded(lo, hi));
}

std::shared_ptr<const DiscreteUPModel> multistate_upmodel(std::int64_t lo,
                                                          std::int64_t hi) {
  return std::make_shared<MultiStateUPM>(DiscreteSpace::bounded(lo, hi));
}

std::shared_ptr<const RDUPModel> independent_rd_upmodel(
    std::vector<std::shared_ptr<const ContinuousUPModel>> parts) {
  if (parts.empty()) throw ParameterError("R_D model needs at least one component");
  for (const auto& p : parts) {
    if (!p) throw ParameterError("R_D model given a null component");
  }
  return std::make_shared<IndependentRDUPM>(std::move(parts));
}

}  // namespace mml
