#include "mml/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "mml/error.hpp"
#include "mml/estimation.hpp"
#include "mml/functions.hpp"
#include "mml/models.hpp"
#include "mml/numerics.hpp"

namespace mml::checks {

namespace {

using numerics::relative_error;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Outcome outcome(std::string name, double worst, double tolerance) {
  return {std::move(name), worst <= tolerance, worst, tolerance};
}

/// A library function with a sampler for points well inside its domain.
struct Sampled {
  CtsFn f;
  std::function<double(Rng&)> point;
};

double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

std::vector<Sampled> scalar_library() {
  auto anywhere = [](Rng& rng) {
    return std::uniform_real_distribution<double>(-20.0, 20.0)(rng);
  };
  auto positive = [](Rng& rng) { return log_uniform(rng, 1e-2, 1e2); };
  auto nonzero = [](Rng& rng) {
    double m = log_uniform(rng, 1e-1, 1e2);
    return std::bernoulli_distribution(0.5)(rng) ? m : -m;
  };
  using namespace library;
  return {
      {identity(), anywhere},
      {log(), positive},
      {exp(), anywhere},
      {inv(), nonzero},
      {linear(2.0, 1.0), anywhere},
      {linear(-0.5, 3.0), anywhere},
      {linear(2.0, 1.0)->inverse(), anywhere},
      {compose(linear(2.0, 0.0), log()), positive},
      {compose(exp(), linear(0.5, -1.0)), anywhere},
  };
}

struct SampledD {
  CtsDFn f;
  std::function<std::vector<double>(Rng&)> point;
};

std::vector<SampledD> vector_library() {
  auto polar = [](Rng& rng) {
    return std::vector<double>{log_uniform(rng, 1e-3, 1e3),
                               std::uniform_real_distribution<double>(0.0, kTwoPi)(rng)};
  };
  auto plane = [](Rng& rng) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    return std::vector<double>{u(rng), u(rng)};
  };
  auto pos_any = [](Rng& rng) {
    return std::vector<double>{log_uniform(rng, 1e-2, 1e2),
                               std::uniform_real_distribution<double>(-5.0, 5.0)(rng)};
  };
  using namespace library;
  return {
      {polar2cartesian(), polar},
      {cartesian2polar(), plane},
      {componentwise({log(), exp()}), pos_any},
      {swap_components(), plane},
      {componentwise(identity(), 2), plane},
  };
}

// ---------------------------------------------------------------------------

std::vector<Outcome> commute_sp() {
  std::vector<Outcome> out;
  auto upm = normal_upmodel();
  const std::vector<StatParams> sps = {{0.0, 1.0}, {2.0, 0.5}, {-1.0, 3.0}};
  const std::vector<CtsFn> fns = {library::log(), library::linear(2.0, 1.0)};
  Rng rng(4);
  for (const auto& f : fns) {
    for (const auto& sp : sps) {
      auto lhs = upm->parameterise(sp)->transform(f);
      auto rhs = upm->transform(f)->parameterise(sp);
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) {
        const CtsDatum d = as_continuous(*rhs).random(rng, 1e-3);
        worst = std::max(worst, std::fabs(lhs->nl_pr(d) - rhs->nl_pr(d)));
      }
      out.push_back(outcome("upm(" + sp.to_string() + ").transform(" + f->name() +
                                ") = upm.transform(" + f->name() + ")(sp) [nlPr]",
                            worst, 1e-9));
    }
  }
  return out;
}

struct EstimationCase {
  CtsFn f;
  DataSet ds;          // base space
  DataSet held_out;    // transformed space
};

std::vector<EstimationCase> estimation_cases() {
  const std::vector<CtsFn> fns = {library::log(), library::exp(),
                                  library::linear(3.0, -2.0)};
  std::vector<EstimationCase> cases;
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto& f = fns[static_cast<std::size_t>(i) % fns.size()];
    const auto f_inv = f->inverse();
    const bool positive = f->name() == "exp";
    const double mu = positive ? 6.0 + 0.1 * i : -1.0 + 0.25 * i;
    const double sigma = 0.5 + 0.05 * i;
    const std::size_t n = 10 + static_cast<std::size_t>(490 * i / 19);
    std::normal_distribution<double> g(mu, sigma);
    auto draw = [&] {
      double x = g(rng);
      while (positive && !(x > 0.0)) x = g(rng);
      return x;
    };
    std::vector<CtsDatum> items;
    for (std::size_t k = 0; k < n; ++k) items.emplace_back(draw(), 1e-3);
    std::vector<CtsDatum> held;
    for (int k = 0; k < 100; ++k) held.push_back(f_inv->apply(CtsDatum(draw(), 1e-3)));
    cases.push_back({f, DataSet(std::move(items)), DataSet(std::move(held))});
  }
  return cases;
}

std::vector<Outcome> estimation_suite(bool information) {
  std::vector<Outcome> out;
  auto upm = normal_upmodel();
  const EstimatorParams ps{};
  int index = 0;
  for (const auto& c : estimation_cases()) {
    const FitResult lhs_fit = upm->estimator(ps)->estimate(c.ds);
    const DataSet mapped = map_dataset(c.ds, *c.f->inverse());
    const FitResult rhs_fit = upm->transform(c.f)->estimator(ps)->estimate(mapped);
    const std::string tag = "dataset " + std::to_string(index++) + " (n=" +
                            std::to_string(c.ds.size()) + ", f=" + c.f->name() + ")";
    if (information) {
      out.push_back(outcome(tag + ": msg(ds) = msg(ds.map(f^-1)) [nits]",
                            std::fabs(lhs_fit.msg() - rhs_fit.msg()), 1e-9));
    } else {
      const auto lhs = lhs_fit.model->transform(c.f);
      double worst = 0.0;
      for (const auto& d : c.held_out.cts()) {
        worst = std::max(worst, std::fabs(lhs->nl_pr(d) - rhs_fit.model->nl_pr(d)));
      }
      out.push_back(outcome(tag + ": estimate.transform = transform.estimate [nlPr]",
                            worst, 1e-9));
    }
  }
  return out;
}

std::vector<Outcome> jacobian_suite() {
  std::vector<Outcome> out;
  Rng rng(6);
  const auto pc = library::polar2cartesian();
  const auto cp = library::cartesian2polar();
  double worst_id = 0.0;
  double worst_pc = 0.0;
  double worst_cp = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = log_uniform(rng, 1e-3, 1e3);
    const double theta = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
    const std::vector<double> polar{r, theta};
    const auto cart = pc->apply_v(polar);
    const Eigen::MatrixXd prod = pc->jacobian(cp->apply_v(cart)) * cp->jacobian(cart);
    worst_id = std::max(worst_id, (prod - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff());
    worst_pc = std::max(worst_pc, relative_error(std::fabs(pc->jacobian(polar).determinant()), r));
    worst_cp = std::max(worst_cp,
                        relative_error(std::fabs(cp->jacobian(cart).determinant()), 1.0 / r));
  }
  out.push_back(outcome("J_pc x J_cp = I [max entry error]", worst_id, 1e-9));
  out.push_back(outcome("|det J_pc| = r [relative]", worst_pc, 1e-9));
  out.push_back(outcome("|det J_cp| = 1/r [relative]", worst_cp, 1e-9));

  for (const auto& s : scalar_library()) {
    double worst = 0.0;
    const auto& f = s.f;
    for (int i = 0; i < 100; ++i) {
      const double x = s.point(rng);
      const double fd =
          numerics::central_difference([&](double t) { return f->apply_x(t); }, x);
      worst = std::max(worst, relative_error(f->d_dx(x), fd));
    }
    out.push_back(outcome("d/dx " + f->name() + " vs finite difference", worst, 1e-6));
  }
  for (const auto& s : vector_library()) {
    double worst = 0.0;
    const auto& f = s.f;
    for (int i = 0; i < 100; ++i) {
      const auto v = s.point(rng);
      const Eigen::MatrixXd j = f->jacobian(v);
      const double scale = j.cwiseAbs().maxCoeff();
      for (std::size_t col = 0; col < v.size(); ++col) {
        const double h = 1e-6 * std::max(1.0, std::fabs(v[col]));
        auto up = v;
        auto down = v;
        up[col] += h;
        down[col] -= h;
        const auto fu = f->apply_v(up);
        const auto fdn = f->apply_v(down);
        for (std::size_t row = 0; row < v.size(); ++row) {
          const double fd = (fu[row] - fdn[row]) / (2.0 * h);
          const double exact = j(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
          const double denom = std::max(std::fabs(exact), 1e-6 * scale);
          worst = std::max(worst, denom == 0.0 ? std::fabs(fd) : std::fabs(fd - exact) / denom);
        }
      }
    }
    out.push_back(outcome("Jacobian of " + f->name() + " vs finite difference", worst, 1e-5));
  }
  return out;
}

std::vector<Outcome> normalize_suite() {
  std::vector<Outcome> out;
  auto normal = normal_upmodel();
  {
    auto ln = normal->transform(library::log())->parameterise({0.0, 1.0});
    const auto& m = as_continuous(*ln);
    const auto breaks = numerics::decade_breakpoints(-8, 6);
    const double total = numerics::integrate([&](double x) { return m.pdf(x); }, breaks);
    out.push_back(outcome("integral of logNormal(<0, 1>) pdf over (0, 1e6)",
                          std::fabs(total - 1.0), 1e-4));
  }
  {
    auto upmc = independent_rd_upmodel({normal, normal});
    auto upmp = upmc->transform(library::polar2cartesian());
    auto mp = upmp->parameterise(StatParams::of_components({{0.0, 1.0}, {0.0, 1.0}}));
    const auto& m = as_rd(*mp);
    const std::vector<double> r_breaks{0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 20.0};
    const double total = numerics::integrate_2d(
        [&](double r, double theta) {
          const double v[] = {r, theta};
          return m.pdf(v);
        },
        r_breaks, 0.0, kTwoPi);
    out.push_back(outcome("integral of bivariate normal through polar2cartesian",
                          std::fabs(total - 1.0), 1e-3));
  }
  {
    auto ms = multistate_upmodel(0, 4)->parameterise({0.1, 0.2, 0.3, 0.25, 0.15});
    const auto space = DiscreteSpace::bounded(0, 4);
    const std::vector<DiscreteFn> fns = {library::reverse(space), library::rotate(space, 2),
                                         library::shift(DiscreteSpace::bounded(-3, 1), 3)};
    for (const auto& f : fns) {
      auto mf = ms->transform(f);
      const auto& dm = as_discrete(*mf);
      double total = 0.0;
      bool exact = true;
      for (auto d = f->domain().lo; d <= f->domain().hi; ++d) {
        total += dm.pr(d);
        exact = exact && dm.pr(d) == as_discrete(*ms).pr(f->apply(d));
      }
      out.push_back(outcome("sum of pr after " + f->name(), std::fabs(total - 1.0), 1e-12));
      out.push_back(outcome("pr_mf(d) = pr_m(f(d)) under " + f->name(), exact ? 0.0 : 1.0, 0.0));
    }
  }
  return out;
}

std::vector<Outcome> aom_suite() {
  std::vector<Outcome> out;
  Rng rng(7);
  for (const auto& s : scalar_library()) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const CtsDatum d(s.point(rng), log_uniform(rng, 1e-6, 1e-1));
      const CtsDatum r = s.f->apply(d);
      worst = std::max(worst, relative_error(r.aom(), d.aom() * std::fabs(s.f->d_dx(d.x()))));
    }
    out.push_back(outcome("AoM of " + s.f->name() + "(d) = aom |f'(x)|", worst, 1e-12));
  }
  for (const auto& s : vector_library()) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto v = s.point(rng);
      const VecDatum d(v, {log_uniform(rng, 1e-6, 1e-1), log_uniform(rng, 1e-6, 1e-1)});
      const VecDatum r = s.f->apply(d);
      const double det = std::fabs(s.f->jacobian(v).determinant());
      worst = std::max(worst, relative_error(r.aom_volume(), det * d.aom_volume()));
    }
    out.push_back(outcome("AoM volume of " + s.f->name() + "(v) = |det J| x volume", worst,
                          1e-9));
  }
  auto normal = normal_upmodel();
  const std::vector<ModelPtr> models = {
      normal->parameterise({0.0, 1.0}),
      normal->transform(library::log())->parameterise({0.0, 1.0}),
  };
  for (const auto& m : models) {
    const auto& cm = as_continuous(*m);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double x = cm.sample(rng);
      const double eps = log_uniform(rng, 1e-6, 1e-1);
      const double drop = cm.nl_pr(CtsDatum(x, eps)) - cm.nl_pr(CtsDatum(x, 2.0 * eps));
      worst = std::max(worst, std::fabs(drop - std::numbers::ln2));
    }
    out.push_back(outcome("doubling AoM lowers nlPr by ln 2 under " + m->name(), worst, 1e-12));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"commute-sp", "commute-est", "info",
                                                 "jacobian",   "normalize",   "aom"};
  return names;
}

std::vector<Outcome> run_suite(const std::string& name) {
  if (name == "commute-sp") return commute_sp();
  if (name == "commute-est") return estimation_suite(false);
  if (name == "info") return estimation_suite(true);
  if (name == "jacobian") return jacobian_suite();
  if (name == "normalize") return normalize_suite();
  if (name == "aom") return aom_suite();
  throw Error("unknown check suite '" + name + "'");
}

}  // namespace mml::checks
