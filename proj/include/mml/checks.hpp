#ifndef MML_CHECKS_HPP
#define MML_CHECKS_HPP

#include <string>
#include <vector>

namespace mml::checks {

/// One assertion of an invariant suite: the worst observed error against
/// its tolerance.
struct Outcome {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double tolerance = 0.0;
};

/// commute-sp, commute-est, info, jacobian, normalize, aom.
const std::vector<std::string>& suite_names();

/// Runs a suite with fixed seeds. Throws mml::Error for an unknown name.
std::vector<Outcome> run_suite(const std::string& name);

}  // namespace mml::checks

#endif  // MML_CHECKS_HPP
