#include <doctest.h>

#include <cmath>
#include <random>

#include "mml/error.hpp"
#include "mml/functions.hpp"
#include "oracles.hpp"

using namespace mml;
namespace lib = mml::library;

TEST_CASE("apply_cts propagates AoM through the derivative") {
  const auto d = lib::log()->apply(CtsDatum(8.0, 0.01));
  CHECK(d.x() == doctest::Approx(std::log(8.0)).epsilon(1e-15));
  CHECK(d.aom() == doctest::Approx(0.00125).epsilon(1e-15));

  const auto id = lib::identity()->apply(CtsDatum(3.0, 0.2));
  CHECK(id.x() == 3.0);
  CHECK(id.aom() == 0.2);

  const auto e = lib::exp()->apply(CtsDatum(0.0, 0.1));
  CHECK(e.x() == 1.0);
  CHECK(e.aom() == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("apply_cts enforces the domain") {
  CHECK_THROWS_AS(lib::log()->apply(CtsDatum(-1.0, 0.1)), DomainError);
  CHECK_THROWS_AS(lib::log()->apply(CtsDatum(0.0, 0.1)), DomainError);
  CHECK_THROWS_AS(lib::inv()->apply(CtsDatum(0.0, 0.1)), DomainError);
  CHECK_THROWS_AS(lib::log()->d_dx(-2.0), DomainError);
}

TEST_CASE("apply_cts rejects a collapsing AoM") {
  // exp(-800) underflows to 0, so the propagated AoM would vanish.
  CHECK_THROWS_AS(lib::exp()->apply(CtsDatum(-800.0, 1.0)), DegenerateTransform);
}

TEST_CASE("invert") {
  CHECK(invert(lib::log())->name() == "exp");
  CHECK(invert(invert(lib::log()))->name() == "log");
  CHECK(invert(lib::polar2cartesian())->name() == "cartesian2polar");
  CHECK(invert(lib::cartesian2polar())->name() == "polar2cartesian");
  const auto lin = lib::linear(2.0, 1.0);
  CHECK(invert(invert(lin))->name() == lin->name());
  CHECK(invert(lin)->apply_x(lin->apply_x(0.7)) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(lib::linear(0.0, 1.0), ParameterError);

  const auto r = lib::rotate(DiscreteSpace{0, 4}, 2);
  for (std::int64_t v = 0; v <= 4; ++v) CHECK(invert(r)->apply(r->apply(v)) == v);
}

TEST_CASE("invert without a declared inverse") {
  CHECK_THROWS_AS(invert(CtsFn{}), NotInvertible);
  CHECK_THROWS_AS(invert(FunctionPtr{}), NotInvertible);
}

TEST_CASE("compose") {
  const auto id = compose(lib::exp(), lib::log());
  CHECK(id->apply_x(5.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(compose(lib::linear(2.0, 0.0), lib::log())->d_dx(4.0) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(compose(lib::log(), lib::linear(1.0, -1.0))->apply_x(1.0), DomainError);
}

TEST_CASE("domains and images") {
  CHECK_FALSE(lib::log()->in_domain(0.0));
  CHECK(lib::log()->in_domain(1e-300));
  CHECK_FALSE(lib::inv()->in_domain(0.0));
  const Domain exp_range = lib::exp()->range();
  REQUIRE(exp_range.size() == 1);
  CHECK(exp_range[0].lo == 0.0);
  CHECK_FALSE(exp_range[0].lo_closed);
  CHECK(std::isinf(exp_range[0].hi));
  const Domain pre = preimage(*lib::log(), Domain{Interval::real_line()});
  REQUIRE(pre.size() == 1);
  CHECK(pre[0].lo == 0.0);
}

TEST_CASE("apply_ctsD examples") {
  const auto id = lib::componentwise(lib::identity(), 2)->apply(VecDatum({1, 2}, {0.1, 0.2}));
  CHECK(id[0] == 1.0);
  CHECK(id[1] == 2.0);
  CHECK(id.aoms()[0] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(id.aoms()[1] == doctest::Approx(0.2).epsilon(1e-15));

  const auto pc = lib::polar2cartesian()->apply(VecDatum({2.0, 0.0}, {0.1, 0.1}));
  CHECK(pc[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::fabs(pc[1]) < 1e-15);
  CHECK(pc.aoms()[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(pc.aoms()[1] == doctest::Approx(0.2).epsilon(1e-12));

  const auto sw = lib::swap_components()->apply(VecDatum({1, 2}, {0.1, 0.2}));
  CHECK(sw[0] == 2.0);
  CHECK(sw[1] == 1.0);
  CHECK(sw.aoms()[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(sw.aoms()[1] == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("jacobian examples") {
  const auto j1 = lib::polar2cartesian()->jacobian(std::vector{1.0, 0.0});
  CHECK(j1(0, 0) == doctest::Approx(1.0));
  CHECK(std::fabs(j1(0, 1)) < 1e-15);
  CHECK(std::fabs(j1(1, 0)) < 1e-15);
  CHECK(j1(1, 1) == doctest::Approx(1.0));

  const auto j2 = lib::cartesian2polar()->jacobian(std::vector{1.0, 0.0});
  CHECK(j2(0, 0) == doctest::Approx(1.0));
  CHECK(std::fabs(j2(0, 1)) < 1e-15);
  CHECK(std::fabs(j2(1, 0)) < 1e-15);
  CHECK(j2(1, 1) == doctest::Approx(1.0));

  const auto j3 = lib::polar2cartesian()->jacobian(std::vector{2.0, oracle::kPi / 2});
  CHECK(std::fabs(j3(0, 0)) < 1e-15);
  CHECK(j3(0, 1) == doctest::Approx(-2.0));
  CHECK(j3(1, 0) == doctest::Approx(1.0));
  CHECK(std::fabs(j3(1, 1)) < 1e-15);

  CHECK_THROWS_AS(lib::polar2cartesian()->jacobian(std::vector{-1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(lib::cartesian2polar()->jacobian(std::vector{0.0, 0.0}), DomainError);
}

TEST_CASE("nl_jacobian_det examples") {
  const double e = std::exp(1.0);
  CHECK(lib::polar2cartesian()->nl_jacobian_det(std::vector{1.0, 1.234}) ==
        doctest::Approx(0.0));
  CHECK(lib::polar2cartesian()->nl_jacobian_det(std::vector{e, 0.0}) ==
        doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(lib::cartesian2polar()->nl_jacobian_det(std::vector{e, 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("polar Jacobians match the closed forms and are mutual inverses") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_r(std::log(1e-3), std::log(1e3));
  std::uniform_real_distribution<double> theta(0.0, 2 * oracle::kPi);
  for (int i = 0; i < 100; ++i) {
    const double r = std::exp(log_r(rng));
    const double t = theta(rng);
    const auto jpc = lib::polar2cartesian()->jacobian(std::vector{r, t});
    const auto want = oracle::jacobian_polar_to_cartesian(r, t);
    for (int k = 0; k < 4; ++k) {
      CHECK(jpc(k / 2, k % 2) == doctest::Approx(want[k]).epsilon(1e-14).scale(r));
    }
    const auto xy = lib::polar2cartesian()->apply_v(std::vector{r, t});
    const auto jcp = lib::cartesian2polar()->jacobian(xy);
    const auto want_cp = oracle::jacobian_cartesian_to_polar(xy[0], xy[1]);
    for (int k = 0; k < 4; ++k) {
      CHECK(jcp(k / 2, k % 2) ==
            doctest::Approx(want_cp[k]).epsilon(1e-12).scale(1.0 / std::min(r, 1.0)));
    }
    const Eigen::MatrixXd prod = jpc * jcp;
    CHECK((prod - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("scalar derivatives against a five-point stencil") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (const auto& f : {lib::identity(), lib::exp(), lib::linear(-1.5, 2.0),
                        compose(lib::exp(), lib::linear(0.5, -1.0))}) {
    for (int i = 0; i < 50; ++i) {
      const double x = u(rng);
      const double fd = oracle::derivative([&](double t) { return f->apply_x(t); }, x);
      CHECK(oracle::relative_error(f->d_dx(x), fd) < 1e-8);
    }
  }
  for (const auto& f : {lib::log(), lib::inv(), compose(lib::linear(2.0, 0.0), lib::log())}) {
    for (int i = 0; i < 50; ++i) {
      const double x = std::exp(u(rng));
      const double fd = oracle::derivative([&](double t) { return f->apply_x(t); }, x);
      CHECK(oracle::relative_error(f->d_dx(x), fd) < 1e-8);
    }
  }
}

TEST_CASE("inv is defined on both half-lines") {
  CHECK(lib::inv()->apply_x(-4.0) == -0.25);
  CHECK(lib::inv()->d_dx(-2.0) == doctest::Approx(-0.25));
  CHECK(invert(lib::inv())->name() == "inv");
}

TEST_CASE("discrete bijections") {
  const DiscreteSpace s{0, 4};
  const auto rev = lib::reverse(s);
  CHECK(rev->apply(0) == 4);
  CHECK(rev->apply(4) == 0);
  const auto rot = lib::rotate(s, 2);
  CHECK(rot->apply(3) == 0);
  const auto sh = lib::shift(DiscreteSpace{-3, 1}, 3);
  CHECK(sh->apply(-3) == 0);
  CHECK(sh->codomain().lo == 0);
  CHECK(sh->codomain().hi == 4);
  CHECK(invert(sh)->apply(4) == 1);
  CHECK_THROWS_AS(rev->apply(5), DomainError);

  // Every map is a bijection of the space.
  for (const auto& f : {rev, rot, sh}) {
    std::vector<int> hits(5, 0);
    for (std::int64_t v = f->domain().lo; v <= f->domain().hi; ++v) ++hits[f->apply(v)];
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("componentwise and permutations") {
  const auto cw = lib::componentwise({lib::log(), lib::exp()});
  const auto out = cw->apply_v(std::vector{std::exp(2.0), 0.0});
  CHECK(out[0] == doctest::Approx(2.0));
  CHECK(out[1] == doctest::Approx(1.0));
  CHECK(cw->nl_jacobian_det(std::vector{std::exp(2.0), 0.0}) == doctest::Approx(2.0));
  const auto p = lib::permute_components({2, 0, 1});
  const auto v = p->apply_v(std::vector{1.0, 2.0, 3.0});
  CHECK(invert(p)->apply_v(v) == std::vector{1.0, 2.0, 3.0});
  CHECK_THROWS_AS(lib::permute_components({0, 0}), ParameterError);
}

TEST_CASE("invertible scalar functions are monotone on each domain piece") {
  std::mt19937_64 rng(13);
  for (const auto& f : {lib::identity(), lib::log(), lib::exp(), lib::inv(),
                        lib::linear(-2.0, 5.0), compose(lib::exp(), lib::inv())}) {
    for (const auto& piece : f->domain()) {
      const double lo = std::isinf(piece.lo) ? -50.0 : piece.lo;
      const double hi = std::isinf(piece.hi) ? 50.0 : piece.hi;
      std::uniform_real_distribution<double> u(lo, hi);
      int sign = 0;
      for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        if (!piece.contains(x)) continue;
        const int s = f->d_dx(x) > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        CHECK_MESSAGE(s == sign, f->name(), " changes direction at ", x);
      }
    }
  }
}
