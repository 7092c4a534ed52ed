#include "mml/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mml/error.hpp"

namespace mml {

MessageLengths msg_components(const FitResult& fr) {
  return {fr.msg1, fr.msg2, fr.msg()};
}

double total_nl_pr(const Model& m, const DataSet& ds) {
  double s = 0.0;
  switch (ds.kind()) {
    case DataKind::Continuous: {
      const auto& cm = as_continuous(m);
      for (const auto& d : ds.cts()) s += cm.nl_pr(d);
      break;
    }
    case DataKind::Vector: {
      const auto& rm = as_rd(m);
      for (const auto& d : ds.vec()) s += rm.nl_pr(d);
      break;
    }
    case DataKind::Discrete: {
      const auto& dm = as_discrete(m);
      for (const auto& d : ds.discrete()) s += dm.nl_pr(d.value());
      break;
    }
  }
  return s;
}

FitResult estimate(const Estimator& est, const DataSet& ds) { return est.estimate(ds); }

namespace {

void require_nonempty(const DataSet& ds, const std::string& who) {
  if (ds.empty()) throw EstimationError(who + " cannot estimate from an empty data set");
}

void require_kind(const DataSet& ds, DataKind want, const std::string& who) {
  if (ds.kind() != want) {
    throw DomainError(who + " expects " + std::string(to_string(want)) +
                      " data, got " + to_string(ds.kind()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Normal

ResolvedNormalPrior NormalEstimator::resolve_prior(
    const std::vector<CtsDatum>& data) const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double min_aom = lo;
  double sum_aom = 0.0;
  for (const auto& d : data) {
    lo = std::min(lo, d.x());
    hi = std::max(hi, d.x());
    min_aom = std::min(min_aom, d.aom());
    sum_aom += d.aom();
  }
  double range = hi - lo;
  if (!(range > 0.0)) range = sum_aom / static_cast<double>(data.size());

  const auto& given = params().normal;
  ResolvedNormalPrior p{
      given.mu_lo.value_or(lo - 0.05 * range),
      given.mu_hi.value_or(hi + 0.05 * range),
      given.sigma_lo.value_or(min_aom / 10.0),
      given.sigma_hi.value_or(10.0 * range),
  };
  if (!(p.mu_hi > p.mu_lo) || !std::isfinite(p.mu_hi - p.mu_lo)) {
    throw EstimationError("Normal prior needs a finite mean range with lo < hi");
  }
  if (!(p.sigma_lo > 0.0) || !(p.sigma_hi > p.sigma_lo) || !std::isfinite(p.sigma_hi)) {
    throw EstimationError("Normal prior needs 0 < sigma_lo < sigma_hi < inf");
  }
  return p;
}

namespace {

double normal_msg1(std::size_t n, double mu, double sigma, const ResolvedNormalPrior& p) {
  if (mu < p.mu_lo || mu > p.mu_hi || sigma < p.sigma_lo || sigma > p.sigma_hi) {
    return std::numeric_limits<double>::infinity();
  }
  const double log_n = std::log(static_cast<double>(n));
  const double log_sigma = std::log(sigma);
  const double neg_log_prior =
      std::log(p.mu_hi - p.mu_lo) + log_sigma + std::log(std::log(p.sigma_hi / p.sigma_lo));
  // 1/2 ln |F| with |F| = 2 N^2 / sigma^4
  const double half_log_fisher = 0.5 * std::numbers::ln2 + log_n - 2.0 * log_sigma;
  return neg_log_prior + half_log_fisher + 1.0 + std::log(kLatticeConstant2);
}

}  // namespace

FitResult NormalEstimator::estimate(const DataSet& ds) const {
  require_kind(ds, DataKind::Continuous, upmodel()->name());
  require_nonempty(ds, upmodel()->name());
  const auto& data = ds.cts();
  const auto n = static_cast<double>(data.size());

  double mean = 0.0;
  double mean_aom = 0.0;
  for (const auto& d : data) {
    mean += d.x();
    mean_aom += d.aom();
  }
  mean /= n;
  mean_aom /= n;
  double ss = 0.0;
  for (const auto& d : data) ss += (d.x() - mean) * (d.x() - mean);
  double sigma = data.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  sigma = std::max(sigma, mean_aom / std::sqrt(12.0));

  const auto prior = resolve_prior(data);
  const double msg1 = normal_msg1(data.size(), mean, sigma, prior);
  if (!std::isfinite(msg1)) {
    throw EstimationError("Normal estimate <" + std::to_string(mean) + ", " +
                          std::to_string(sigma) + "> lies outside the prior's support");
  }
  auto model = upmodel()->parameterise_estimated({mean, sigma}, msg1);
  return {model, msg1, total_nl_pr(*model, ds)};
}

FitResult NormalEstimator::evaluate(const DataSet& ds, const StatParams& sp) const {
  require_kind(ds, DataKind::Continuous, upmodel()->name());
  require_nonempty(ds, upmodel()->name());
  auto probe = upmodel()->parameterise(sp);  // validates sp
  const auto prior = resolve_prior(ds.cts());
  const double msg1 = normal_msg1(ds.size(), sp.values[0], sp.values[1], prior);
  auto model = upmodel()->parameterise_estimated(sp, msg1);
  return {model, msg1, total_nl_pr(*model, ds)};
}

EstimatorPtr make_normal_estimator(UPModelPtr parent, EstimatorParams ps) {
  return std::make_shared<NormalEstimator>(std::move(parent), std::move(ps));
}

// ---------------------------------------------------------------------------
// Discrete families

namespace {

class UniformEstimator final : public Estimator {
 public:
  using Estimator::Estimator;

  FitResult estimate(const DataSet& ds) const override {
    require_kind(ds, DataKind::Discrete, upmodel()->name());
    require_nonempty(ds, upmodel()->name());
    auto model = upmodel()->parameterise_estimated({}, 0.0);
    return {model, 0.0, total_nl_pr(*model, ds)};
  }
};

/// MML87 multistate: p_i = (n_i + 1/2) / (N + k/2) and
///   msg1 = (k-1)/2 (ln(N * c) + 1) - 1/2 sum ln p_i + ln(prior volume),
/// c the lattice constant; floored at 0.
class MultiStateEstimator final : public Estimator {
 public:
  using Estimator::Estimator;

  FitResult estimate(const DataSet& ds) const override {
    require_kind(ds, DataKind::Discrete, upmodel()->name());
    require_nonempty(ds, upmodel()->name());
    const auto& upm = static_cast<const DiscreteUPModel&>(*upmodel());
    const DiscreteSpace space = upm.space();
    const auto k = static_cast<std::size_t>(space.size());

    std::vector<double> counts(k, 0.0);
    for (const auto& d : ds.discrete()) {
      if (!space.contains(d.value())) {
        throw DomainError(std::to_string(d.value()) + " is outside the data space of " +
                          upm.name());
      }
      counts[static_cast<std::size_t>(d.value() - space.lo)] += 1.0;
    }
    const double n = static_cast<double>(ds.size());
    const double kd = static_cast<double>(k);
    std::vector<double> p(k);
    double sum_log_p = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      p[i] = (counts[i] + 0.5) / (n + 0.5 * kd);
      sum_log_p += std::log(p[i]);
    }

    double msg1 = 0.0;
    if (k > 1) {
      const auto& opt = params().multistate;
      const double log_volume = opt.log_prior_volume.value_or(-std::lgamma(kd));
      msg1 = 0.5 * (kd - 1.0) * (std::log(n * opt.lattice_constant) + 1.0) -
             0.5 * sum_log_p + log_volume;
      msg1 = std::max(0.0, msg1);
    }
    auto model = upm.parameterise_estimated(StatParams(p), msg1);
    return {model, msg1, total_nl_pr(*model, ds)};
  }
};

// ---------------------------------------------------------------------------

class IndependentRDEstimator final : public Estimator {
 public:
  IndependentRDEstimator(UPModelPtr parent,
                         std::vector<std::shared_ptr<const ContinuousUPModel>> parts,
                         EstimatorParams ps)
      : Estimator(std::move(parent), std::move(ps)), parts_(std::move(parts)) {}

  FitResult estimate(const DataSet& ds) const override {
    require_kind(ds, DataKind::Vector, upmodel()->name());
    require_nonempty(ds, upmodel()->name());
    const auto& items = ds.vec();
    if (items.front().dimension() != parts_.size()) {
      throw DomainError(upmodel()->name() + " expects dimension " +
                        std::to_string(parts_.size()) + ", got " +
                        std::to_string(items.front().dimension()));
    }
    std::vector<StatParams> sps;
    double msg1 = 0.0;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      std::vector<CtsDatum> column;
      column.reserve(items.size());
      for (const auto& v : items) column.emplace_back(v.components()[j], v.aoms()[j]);
      const auto fr = parts_[j]->estimator(params())->estimate(DataSet(std::move(column)));
      sps.push_back(fr.model->params());
      msg1 += fr.msg1;
    }
    auto model = upmodel()->parameterise_estimated(StatParams::of_components(sps), msg1);
    return {model, msg1, total_nl_pr(*model, ds)};
  }

 private:
  std::vector<std::shared_ptr<const ContinuousUPModel>> parts_;
};

class TransformedEstimator final : public Estimator {
 public:
  TransformedEstimator(UPModelPtr parent, UPModelPtr base, FunctionPtr f,
                       EstimatorParams ps)
      : Estimator(std::move(parent), std::move(ps)),
        base_(std::move(base)),
        f_(std::move(f)) {}

  FitResult estimate(const DataSet& ds) const override {
    require_nonempty(ds, upmodel()->name());
    const DataSet mapped = map_dataset(ds, *f_);
    const FitResult inner = base_->estimator(params())->estimate(mapped);
    auto model = upmodel()->parameterise_estimated(inner.model->params(), inner.msg1);
    return {model, inner.msg1, total_nl_pr(*model, ds)};
  }

 private:
  UPModelPtr base_;
  FunctionPtr f_;
};

}  // namespace

EstimatorPtr make_uniform_estimator(UPModelPtr parent, EstimatorParams ps) {
  return std::make_shared<UniformEstimator>(std::move(parent), std::move(ps));
}

EstimatorPtr make_multistate_estimator(UPModelPtr parent, EstimatorParams ps) {
  return std::make_shared<MultiStateEstimator>(std::move(parent), std::move(ps));
}

EstimatorPtr make_independent_rd_estimator(
    UPModelPtr parent, std::vector<std::shared_ptr<const ContinuousUPModel>> parts,
    EstimatorParams ps) {
  return std::make_shared<IndependentRDEstimator>(std::move(parent), std::move(parts),
                                                  std::move(ps));
}

EstimatorPtr make_transformed_estimator(UPModelPtr parent, UPModelPtr base,
                                        FunctionPtr f, EstimatorParams ps) {
  return std::make_shared<TransformedEstimator>(std::move(parent), std::move(base),
                                                std::move(f), std::move(ps));
}

}  // namespace mml
