#ifndef MML_ESTIMATION_HPP
#define MML_ESTIMATION_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "mml/models.hpp"
#include "mml/values.hpp"

namespace mml {

/// Quantizing-lattice constant for two parameters (hexagonal lattice).
inline const double kLatticeConstant2 = 5.0 / (36.0 * std::sqrt(3.0));

inline double nits_to_bits(double nits) { return nits / std::numbers::ln2; }

/// Prior for the Normal estimator: uniform mean over [mu_lo, mu_hi] and
/// 1/sigma over [sigma_lo, sigma_hi]. Unset bounds are derived from the data:
/// the data range widened by 10% for the mean, and
/// [min AoM / 10, 10 * range] for sigma.
struct NormalPrior {
  std::optional<double> mu_lo;
  std::optional<double> mu_hi;
  std::optional<double> sigma_lo;
  std::optional<double> sigma_hi;
};

struct MultiStateOptions {
  /// Quantizing-lattice constant used per free parameter.
  double lattice_constant = 1.0 / 12.0;
  /// ln of the prior's volume over the probability simplex; defaults to
  /// ln(1 / (k-1)!), the uniform prior.
  std::optional<double> log_prior_volume;
};

/// Estimator parameters `ps`. Both sides of a transformed-estimation
/// comparison must receive the same value.
struct EstimatorParams {
  NormalPrior normal;
  MultiStateOptions multistate;
};

/// An estimated model with its two-part message length in nits.
struct FitResult {
  ModelPtr model;
  double msg1 = 0.0;
  double msg2 = 0.0;

  double msg() const { return msg1 + msg2; }
};

struct MessageLengths {
  double msg1;
  double msg2;
  double msg;

  MessageLengths in_bits() const {
    return {nits_to_bits(msg1), nits_to_bits(msg2), nits_to_bits(msg)};
  }
};

MessageLengths msg_components(const FitResult& fr);

/// Sum of nl_pr over the data set (msg2 of `ds` under `m`).
double total_nl_pr(const Model& m, const DataSet& ds);

/// Maps a data set to a fitted model.
class Estimator {
 public:
  Estimator(UPModelPtr parent, EstimatorParams ps)
      : parent_(std::move(parent)), ps_(std::move(ps)) {}
  virtual ~Estimator() = default;

  const UPModelPtr& upmodel() const { return parent_; }
  const EstimatorParams& params() const { return ps_; }

  /// Throws EstimationError on an empty data set and DomainError /
  /// Error when the data do not belong to the model's data space.
  virtual FitResult estimate(const DataSet& ds) const = 0;

 private:
  UPModelPtr parent_;
  EstimatorParams ps_;
};

FitResult estimate(const Estimator& est, const DataSet& ds);

// ---------------------------------------------------------------------------

struct ResolvedNormalPrior {
  double mu_lo;
  double mu_hi;
  double sigma_lo;
  double sigma_hi;
};

/// Wallace-Freeman message length for the Normal model:
///   msg1 = ln(mu_hi - mu_lo) + ln(sigma) + ln ln(sigma_hi / sigma_lo)
///          + 1/2 ln(2 N^2 / sigma^4) + 1 + ln(kappa_2)
///   msg2 = sum of nl_pr.
/// The estimate is the mean and sqrt(S / (N - 1)), which minimises msg
/// exactly; sigma is floored at (mean AoM) / sqrt(12).
class NormalEstimator final : public Estimator {
 public:
  using Estimator::Estimator;

  FitResult estimate(const DataSet& ds) const override;

  /// Message length of `ds` with the parameters stated at `sp`, under the
  /// prior this estimator would use for `ds`. msg1 is infinite when sp is
  /// outside the prior's support.
  FitResult evaluate(const DataSet& ds, const StatParams& sp) const;

  ResolvedNormalPrior resolve_prior(const std::vector<CtsDatum>& data) const;
};

/// Factories used by the model families.
EstimatorPtr make_normal_estimator(UPModelPtr parent, EstimatorParams ps);
EstimatorPtr make_uniform_estimator(UPModelPtr parent, EstimatorParams ps);
EstimatorPtr make_multistate_estimator(UPModelPtr parent, EstimatorParams ps);
EstimatorPtr make_independent_rd_estimator(
    UPModelPtr parent, std::vector<std::shared_ptr<const ContinuousUPModel>> parts,
    EstimatorParams ps);
/// Estimator of upm.transform(f): maps the data by f, hands them to the
/// base estimator, and transforms the fitted model by f.
EstimatorPtr make_transformed_estimator(UPModelPtr parent, UPModelPtr base,
                                        FunctionPtr f, EstimatorParams ps);

}  // namespace mml

#endif  // MML_ESTIMATION_HPP
