#include <doctest.h>

#include <cmath>
#include <random>

#include "mml/error.hpp"
#include "mml/estimation.hpp"
#include "mml/models.hpp"
#include "oracles.hpp"

using namespace mml;
namespace lib = mml::library;

namespace {

const double kHalfLog2Pi = 0.5 * std::log(2.0 * oracle::kPi);

std::shared_ptr<const RDUPModel> bivariate_normal() {
  return independent_rd_upmodel({normal_upmodel(), normal_upmodel()});
}

UPModelPtr log_normal() { return normal_upmodel()->transform(lib::log()); }

}  // namespace

TEST_CASE("parameterise") {
  const auto n01_ptr = normal_upmodel()->parameterise({0.0, 1.0});
  CHECK(as_continuous(*n01_ptr).pdf(0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * oracle::kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(normal_upmodel()->parameterise({0.0, -1.0}), ParameterError);
  CHECK_THROWS_AS(normal_upmodel()->parameterise({0.0, 0.0}), ParameterError);
  CHECK_THROWS_AS(normal_upmodel()->parameterise({0.0}), ParameterError);
  CHECK_THROWS_AS(normal_upmodel()->parameterise({NAN, 1.0}), ParameterError);

  const auto u = bounded_uniform_upmodel(0, 3)->parameterise({});
  for (std::int64_t d = 0; d <= 3; ++d) CHECK(as_discrete(*u).pr(d) == 0.25);
  CHECK_THROWS_AS(bounded_uniform_upmodel(0, 3)->parameterise({1.0}), ParameterError);
}

TEST_CASE("constructors check bounds") {
  CHECK_THROWS_AS(bounded_uniform_upmodel(3, 0), BoundsError);
  CHECK_THROWS_AS(multistate_upmodel(1, 0), BoundsError);
  CHECK_THROWS_AS(independent_rd_upmodel({}), ParameterError);
}

TEST_CASE("nl_pr examples") {
  const auto n01 = normal_upmodel()->parameterise({0.0, 1.0});
  CHECK(n01->nl_pr(CtsDatum(0.0, 1.0)) == doctest::Approx(0.9189385332046727).epsilon(1e-15));
  CHECK(n01->nl_pr(CtsDatum(0.0, 2.0)) ==
        doctest::Approx(0.9189385332046727 - oracle::kLn2).epsilon(1e-15));

  const auto u = bounded_uniform_upmodel(0, 3)->parameterise({});
  CHECK(u->nl_pr(DiscreteDatum(2, {0, 3})) == doctest::Approx(std::log(4.0)));
  CHECK_THROWS_AS(u->nl_pr(DiscreteDatum(5, {0, 5})), DomainError);
  CHECK_THROWS_AS(n01->nl_pr(DiscreteDatum(2, {0, 3})), DomainError);
}

TEST_CASE("fair coin") {
  const auto coin = multistate_upmodel(0, 1)->parameterise({0.5, 0.5});
  CHECK(as_discrete(*coin).pr(0) == 0.5);
  CHECK(as_discrete(*coin).pr(1) == 0.5);
  CHECK_THROWS_AS(multistate_upmodel(0, 1)->parameterise({0.6, 0.6}), ParameterError);
  CHECK_THROWS_AS(multistate_upmodel(0, 1)->parameterise({1.2, -0.2}), ParameterError);
  CHECK_THROWS_AS(multistate_upmodel(0, 2)->parameterise({0.5, 0.5}), ParameterError);
}

TEST_CASE("random draws from N01 match the standard errors") {
  const auto n01_ptr = normal_upmodel()->parameterise({0.0, 1.0});
  const auto& n01 = as_continuous(*n01_ptr);
  Rng rng(2024);
  const int n = 100000;
  double s = 0.0, ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = n01.sample(rng);
    s += x;
    ss += x * x;
  }
  const double mean = s / n;
  const double sd = std::sqrt((ss - n * mean * mean) / (n - 1));
  CHECK(std::fabs(mean) < 3.0 / std::sqrt(n));
  CHECK(std::fabs(sd - 1.0) < 3.0 / std::sqrt(2.0 * n));
}

TEST_CASE("random draws from logNormal are positive and reproducible") {
  const auto ln_ptr = log_normal()->parameterise({0.0, 1.0});
  const auto& ln = as_continuous(*ln_ptr);
  Rng a(42), b(42);
  for (int i = 0; i < 100000; ++i) {
    const auto da = ln.random(a);
    CHECK_MESSAGE(da.x() > 0.0, "draw ", i);
    CHECK(da.aom() == kDefaultSyntheticAom);
    if (i < 1000) CHECK(ln.random(b).x() == da.x());
  }
}

TEST_CASE("transform_upmodel") {
  const auto ln = log_normal();
  CHECK(ln->kind() == ModelKind::Continuous);
  CHECK(ln->name() == "Normal.transform(log)");
  CHECK(dynamic_cast<const ContinuousUPModel*>(ln.get()) != nullptr);

  const auto m_ptr = ln->parameterise({0.0, 1.0});
  const auto& m = as_continuous(*m_ptr);
  const Domain s = m.support();
  REQUIRE(s.size() == 1);
  CHECK(s[0].lo == 0.0);
  CHECK(std::isinf(s[0].hi));

  // exp turns a model of (0, inf) into one of (-inf, inf).
  const auto back_ptr = ln->transform(lib::exp())->parameterise({0.0, 1.0});
  const auto& back = as_continuous(*back_ptr);
  REQUIRE(back.support().size() == 1);
  CHECK(back.support()[0] == Interval::real_line());
}

TEST_CASE("transform_upmodel rejects mismatched or missing functions") {
  CHECK_THROWS_AS(normal_upmodel()->transform(nullptr), TransformError);
  CHECK_THROWS_AS(normal_upmodel()->transform(lib::polar2cartesian()), TransformError);
  CHECK_THROWS_AS(normal_upmodel()->transform(lib::reverse({0, 3})), TransformError);
  CHECK_THROWS_AS(bivariate_normal()->transform(lib::log()), TransformError);
  CHECK_THROWS_AS(bivariate_normal()->transform(lib::permute_components({0, 1, 2})),
                  TransformError);
  CHECK_THROWS_AS(multistate_upmodel(0, 3)->transform(lib::reverse({0, 4})), TransformError);
  CHECK_THROWS_AS(multistate_upmodel(0, 3)->transform(lib::exp()), TransformError);
}

TEST_CASE("identity transform changes nothing") {
  const auto m = normal_upmodel()->parameterise({1.5, 0.7});
  const auto mi = normal_upmodel()->transform(lib::identity())->parameterise({1.5, 0.7});
  for (double x : {-3.0, 0.0, 1.5, 4.2}) {
    CHECK(mi->nl_pr(CtsDatum(x, 0.01)) == doctest::Approx(m->nl_pr(CtsDatum(x, 0.01))).epsilon(1e-15));
  }
}

TEST_CASE("transformed pdf matches the closed-form log-normal density") {
  const auto m_ptr = log_normal()->parameterise({0.0, 1.0});
  const auto& m = as_continuous(*m_ptr);
  CHECK(m.pdf(1.0) == doctest::Approx(0.3989422804014327).epsilon(1e-14));
  for (const auto& [mu, sigma] : {std::pair{0.0, 1.0}, {1.3, 0.4}, {-2.0, 2.5}}) {
    const auto mm_ptr = log_normal()->parameterise({mu, sigma});
    const auto& mm = as_continuous(*mm_ptr);
    for (double x = 1e-3; x < 1e3; x *= 1.7) {
      CHECK(oracle::relative_error(mm.pdf(x), oracle::lognormal_pdf(x, mu, sigma)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(m.nl_pdf(-1.0), DomainError);
  CHECK_THROWS_AS(m.nl_pr(CtsDatum(0.0, 0.1)), DomainError);
}

TEST_CASE("transformed pdf integrates to one") {
  const auto m_ptr = log_normal()->parameterise({0.0, 1.0});
  const auto& m = as_continuous(*m_ptr);
  // Substitute x = e^u so the integrand is smooth on a finite interval.
  const double total = oracle::simpson(
      [&](double u) { return m.pdf(std::exp(u)) * std::exp(u); }, std::log(1e-12),
      std::log(1e6), 20000);
  CHECK(std::fabs(total - 1.0) < 1e-4);
}

TEST_CASE("m.transform(f).transform(f^-1) equals m") {
  const auto m = normal_upmodel()->parameterise({0.3, 1.2});
  for (const auto& f : {lib::log(), lib::exp(), lib::linear(3.0, -2.0), lib::inv()}) {
    const auto round = m->transform(invert(f))->transform(f);
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
      const auto d = as_continuous(*m).random(rng, 0.01);
      if (!f->in_domain(d.x())) continue;
      CHECK(std::fabs(round->nl_pr(d) - m->nl_pr(d)) < 1e-9);
    }
  }
}

TEST_CASE("transform by f then g equals transform by compose(f, g)") {
  const auto m = normal_upmodel()->parameterise({0.5, 2.0});
  const auto f = lib::log();
  const auto g = lib::linear(2.0, 1.0);
  const auto nested = m->transform(f)->transform(g);
  const auto chained = m->transform(compose(f, g));
  for (double x : {0.1, 0.7, 3.0, 40.0}) {
    const CtsDatum d(x, 1e-3);
    CHECK(std::fabs(nested->nl_pr(d) - chained->nl_pr(d)) < 1e-9);
  }
  const auto& nc = as_continuous(*nested);
  REQUIRE(nc.support().size() == 1);
  CHECK(nc.support()[0].lo == doctest::Approx(-0.5));
}

TEST_CASE("parameterising and transforming commute") {
  for (const auto& sp : {StatParams{0.0, 1.0}, StatParams{2.0, 0.5}, StatParams{-1.0, 3.0}}) {
    for (const auto& f : {lib::log(), lib::linear(2.0, 1.0)}) {
      const auto left = normal_upmodel()->parameterise(sp)->transform(f);
      const auto right = normal_upmodel()->transform(f)->parameterise(sp);
      CHECK(left->name() == right->name());
      CHECK(left->params() == right->params());
      Rng rng(17);
      const auto& through = as_continuous(*right);
      for (int i = 0; i < 100; ++i) {
        const auto d = through.random(rng, 1e-4);
        CHECK(std::fabs(left->nl_pr(d) - right->nl_pr(d)) < 1e-9);
      }
    }
  }
}

TEST_CASE("msg1 is carried across transforms") {
  std::vector<CtsDatum> xs;
  for (int i = 1; i <= 20; ++i) xs.emplace_back(0.1 * i * i, 0.01);
  const auto fr = normal_upmodel()->estimator()->estimate(DataSet(xs));
  const auto mf = fr.model->transform(lib::exp());
  CHECK(mf->msg1() == fr.msg1);
  CHECK(mf->params() == fr.model->params());
}

TEST_CASE("discrete permutation transforms preserve probability") {
  const DiscreteSpace s{0, 4};
  const auto m = multistate_upmodel(0, 4)->parameterise({0.1, 0.15, 0.2, 0.25, 0.3});
  const auto& base = as_discrete(*m);
  for (const auto& f : {lib::reverse(s), lib::rotate(s, 2), lib::shift({-3, 1}, 3)}) {
    const auto mf_ptr = m->transform(f);
    const auto& mf = as_discrete(*mf_ptr);
    double total = 0.0;
    for (std::int64_t d = mf.space().lo; d <= mf.space().hi; ++d) {
      total += mf.pr(d);
      CHECK(mf.pr(d) == base.pr(f->apply(d)));
    }
    CHECK(std::fabs(total - 1.0) < 1e-12);
  }
  const auto ur_ptr = bounded_uniform_upmodel(0, 3)->parameterise({})->transform(
      lib::reverse({0, 3}));
  const auto& ur = as_discrete(*ur_ptr);
  for (std::int64_t d = 0; d <= 3; ++d) CHECK(ur.pr(d) == 0.25);
}

TEST_CASE("discrete sampling respects the distribution") {
  const auto m_ptr = multistate_upmodel(-1, 1)->parameterise({0.2, 0.3, 0.5})->transform(
      lib::rotate({-1, 1}, 1));
  const auto& m = as_discrete(*m_ptr);
  Rng rng(3);
  std::vector<int> counts(3, 0);
  const int n = 30000;
  for (int i = 0; i < n; ++i) ++counts[m.sample(rng) + 1];
  for (std::int64_t d = -1; d <= 1; ++d) {
    const double p = m.pr(d);
    CHECK(std::fabs(counts[d + 1] / double(n) - p) < 4.0 * std::sqrt(p * (1 - p) / n));
  }
}

TEST_CASE("bivariate normal through polar2cartesian") {
  const auto upm = bivariate_normal()->transform(lib::polar2cartesian());
  CHECK(upm->kind() == ModelKind::RD);
  const auto m = upm->parameterise(
      StatParams::of_components({StatParams{0.0, 1.0}, StatParams{0.0, 1.0}}));
  const auto& rm = as_rd(*m);
  for (double r : {0.1, 1.0, 2.5}) {
    for (double t : {0.0, 1.0, 4.0}) {
      const double want = oracle::normal_pdf(r * std::cos(t), 0, 1) *
                          oracle::normal_pdf(r * std::sin(t), 0, 1) * r;
      CHECK(oracle::relative_error(rm.pdf(std::vector{r, t}), want) < 1e-12);
    }
  }
  const double total = oracle::simpson(
      [&](double r) {
        return oracle::simpson([&](double t) { return rm.pdf(std::vector{r, t}); }, 0.0,
                               2 * oracle::kPi * (1 - 1e-15), 64);
      },
      1e-12, 20.0, 400);
  CHECK(std::fabs(total - 1.0) < 1e-3);
  CHECK_THROWS_AS(rm.nl_pdf(std::vector{-1.0, 0.0}), DomainError);
}

TEST_CASE("R^D nl_pr uses the AoM volume") {
  const auto m = bivariate_normal()->parameterise(
      StatParams::of_components({StatParams{0.0, 1.0}, StatParams{1.0, 2.0}}));
  const VecDatum v({0.5, -1.0}, {0.1, 0.3});
  const double want = oracle::normal_nl_pr(0.5, 0.1, 0, 1) + oracle::normal_nl_pr(-1.0, 0.3, 1, 2);
  CHECK(m->nl_pr(v) == doctest::Approx(want).epsilon(1e-14));
  CHECK_THROWS_AS(m->nl_pr(VecDatum({1.0}, {0.1})), DomainError);
}

TEST_CASE("describe reports the parameters") {
  const auto text = describe(*normal_upmodel()->parameterise({0.0, 1.0}));
  CHECK(text.find("model: Normal") != std::string::npos);
  CHECK(text.find("params: <0, 1>") != std::string::npos);
  CHECK(text.find("msg1: 0 nits") != std::string::npos);
}

TEST_CASE("densities of a transformed model are consistent") {
  // pdf at x equals the base density at f(x) times |f'(x)|, and adding nl_pdf
  // of the AoM gives nl_pr.
  const auto base = normal_upmodel()->parameterise({1.0, 0.5});
  const auto f = lib::inv();
  const auto mf_ptr = base->transform(f);
  const auto& mf = as_continuous(*mf_ptr);
  for (double x : {-3.0, -0.4, 0.3, 5.0}) {
    const double want = as_continuous(*base).pdf(1.0 / x) / (x * x);
    CHECK(oracle::relative_error(mf.pdf(x), want) < 1e-13);
    CHECK(mf.nl_pr(CtsDatum(x, 0.01)) ==
          doctest::Approx(mf.nl_pdf(x) - std::log(0.01)).epsilon(1e-15));
  }
  CHECK(mf.support().size() == 2);
  CHECK(std::fabs(as_continuous(*base).pdf(0.0) - oracle::normal_pdf(0.0, 1.0, 0.5)) < 1e-15);
  CHECK(kHalfLog2Pi == doctest::Approx(0.9189385332046727));
}
