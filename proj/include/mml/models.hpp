#ifndef MML_MODELS_HPP
#define MML_MODELS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mml/functions.hpp"
#include "mml/values.hpp"

namespace mml {

/// Random stream passed explicitly to random(); models hold no RNG state.
using Rng = std::mt19937_64;

/// AoM attached to continuous values produced by random().
inline constexpr double kDefaultSyntheticAom = 1e-6;

enum class ModelKind { Discretes, Continuous, RD };

const char* to_string(ModelKind kind);

/// Statistical parameters: a flat list of reals, or (for composite models)
/// one StatParams per component.
struct StatParams {
  std::vector<double> values;
  std::vector<StatParams> components;

  StatParams() = default;
  StatParams(std::initializer_list<double> v) : values(v) {}
  explicit StatParams(std::vector<double> v) : values(std::move(v)) {}
  static StatParams of_components(std::vector<StatParams> parts);

  bool trivial() const { return values.empty() && components.empty(); }
  /// "<0, 1>", "<<0, 1>, <0, 1>>", or "()" when trivial.
  std::string to_string() const;

  friend bool operator==(const StatParams&, const StatParams&) = default;
};

class Model;
class Estimator;
struct EstimatorParams;

using ModelPtr = std::shared_ptr<const Model>;
using EstimatorPtr = std::shared_ptr<const Estimator>;

// ---------------------------------------------------------------------------
// Unparameterised models

/// A model family with its problem-defining parameters. Parameterising it
/// with statistical parameters gives a Model; its estimator fits one.
/// Instances are always owned by shared_ptr (see the factory functions).
class UPModel : public std::enable_shared_from_this<UPModel> {
 public:
  virtual ~UPModel() = default;

  virtual ModelKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual std::string problem_params() const { return "()"; }

  /// upm(sp), with msg1 = 0. Throws ParameterError on malformed sp.
  ModelPtr parameterise(const StatParams& sp) const { return make_model(sp, 0.0); }
  /// As parameterise, for estimators that state the parameters at cost msg1.
  ModelPtr parameterise_estimated(const StatParams& sp, double msg1) const {
    return make_model(sp, msg1);
  }

  virtual EstimatorPtr estimator(const EstimatorParams& ps) const = 0;
  EstimatorPtr estimator() const;

  /// upm.transform(f): f must be invertible and of the kind matching this
  /// model's data space. The result keeps the capability tag.
  std::shared_ptr<const UPModel> transform(const FunctionPtr& f) const;

 protected:
  virtual ModelPtr make_model(const StatParams& sp, double msg1) const = 0;
};

using UPModelPtr = std::shared_ptr<const UPModel>;

class DiscreteUPModel : public UPModel {
 public:
  ModelKind kind() const final { return ModelKind::Discretes; }
  virtual DiscreteSpace space() const = 0;
};

class ContinuousUPModel : public UPModel {
 public:
  ModelKind kind() const final { return ModelKind::Continuous; }
};

class RDUPModel : public UPModel {
 public:
  ModelKind kind() const final { return ModelKind::RD; }
  virtual std::size_t dimension() const = 0;
};

/// Normal (Gaussian); trivial problem-defining parameters, sp = <mean, sd>.
std::shared_ptr<const ContinuousUPModel> normal_upmodel();
/// Uniform over lo..hi; trivial statistical parameters.
std::shared_ptr<const DiscreteUPModel> bounded_uniform_upmodel(std::int64_t lo,
                                                               std::int64_t hi);
/// Categorical over lo..hi; sp is the full probability vector.
std::shared_ptr<const DiscreteUPModel> multistate_upmodel(std::int64_t lo,
                                                          std::int64_t hi);
/// Product of independent continuous models on R^D; sp has one component
/// per dimension.
std::shared_ptr<const RDUPModel> independent_rd_upmodel(
    std::vector<std::shared_ptr<const ContinuousUPModel>> parts);

// ---------------------------------------------------------------------------
// Parameterised models

class Model : public std::enable_shared_from_this<Model> {
 public:
  virtual ~Model() = default;

  virtual ModelKind kind() const = 0;

  const UPModelPtr& upmodel() const { return parent_; }
  const StatParams& params() const { return params_; }
  /// Cost in nits of stating the parameters; 0 when they were given.
  double msg1() const { return msg1_; }
  std::string name() const { return parent_->name(); }

  /// -ln pr(d). Throws DomainError when d is outside the data space or of
  /// the wrong kind.
  virtual double nl_pr(const Datum& d) const = 0;
  double pr(const Datum& d) const;

  virtual Datum random_datum(Rng& rng, double aom = kDefaultSyntheticAom) const = 0;

  /// m.transform(f), carrying msg1 over.
  ModelPtr transform(const FunctionPtr& f) const;

 protected:
  Model(UPModelPtr parent, StatParams params, double msg1);

 private:
  UPModelPtr parent_;
  StatParams params_;
  double msg1_;
};

class DiscreteModel : public Model {
 public:
  ModelKind kind() const final { return ModelKind::Discretes; }
  virtual DiscreteSpace space() const = 0;

  /// Probability of v; throws DomainError outside space().
  virtual double pr(std::int64_t v) const = 0;
  double nl_pr(std::int64_t v) const { return -std::log(pr(v)); }
  double nl_pr(const Datum& d) const override;
  using Model::pr;
  virtual std::int64_t sample(Rng& rng) const = 0;
  Datum random_datum(Rng& rng, double aom = kDefaultSyntheticAom) const override;

 protected:
  using Model::Model;
};

/// A model of R with a density. pr(x +/- aom/2) is approximated by
/// aom * pdf(x), so nl_pr = nl_pdf(x) - ln(aom).
class ContinuousModel : public Model {
 public:
  ModelKind kind() const final { return ModelKind::Continuous; }

  /// Union of intervals outside which the density is zero.
  virtual Domain support() const = 0;
  /// -ln pdf(x); throws DomainError outside the support.
  virtual double nl_pdf(double x) const = 0;
  double pdf(double x) const;

  double nl_pr(const CtsDatum& d) const { return nl_pdf(d.x()) - std::log(d.aom()); }
  double nl_pr(const Datum& d) const override;
  double pr(const CtsDatum& d) const;
  using Model::pr;

  virtual double sample(Rng& rng) const = 0;
  CtsDatum random(Rng& rng, double aom = kDefaultSyntheticAom) const;
  Datum random_datum(Rng& rng, double aom = kDefaultSyntheticAom) const override;

 protected:
  using Model::Model;
};

/// A model of R^D with a density; nl_pr = nl_pdf(v) - sum ln(aom_i).
class RDModel : public Model {
 public:
  ModelKind kind() const final { return ModelKind::RD; }

  virtual std::size_t dimension() const = 0;
  virtual double nl_pdf(std::span<const double> v) const = 0;
  double pdf(std::span<const double> v) const;

  double nl_pr(const VecDatum& d) const;
  double nl_pr(const Datum& d) const override;
  using Model::pr;

  virtual std::vector<double> sample(Rng& rng) const = 0;
  VecDatum random(Rng& rng, double aom = kDefaultSyntheticAom) const;
  Datum random_datum(Rng& rng, double aom = kDefaultSyntheticAom) const override;

 protected:
  using Model::Model;
};

/// Typed views; throw Error when the model is of another kind.
const DiscreteModel& as_discrete(const Model& m);
const ContinuousModel& as_continuous(const Model& m);
const RDModel& as_rd(const Model& m);

/// Plain-text parameter report: name, problem-defining params, sp, msg1.
std::string describe(const Model& m);

}  // namespace mml

#endif  // MML_MODELS_HPP
