#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "doctest.h"
#include "skqaoa/error.hpp"
#include "skqaoa/evaluator.hpp"
#include "skqaoa/fixtures.hpp"
#include "skqaoa/optimizer.hpp"

using namespace skqaoa;
using std::numbers::pi;

namespace {
bool long_tests() { return std::getenv("SKQAOA_LONG_TESTS") != nullptr; }

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}
}  // namespace

TEST_CASE("nelder_mead on smooth test functions") {
  auto rosen = [](const std::vector<double>& x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  NelderMeadOptions o;
  o.max_evals = 20000;
  const auto r = nelder_mead(rosen, {-1.2, 1.0}, o);
  CHECK(r.converged);
  CHECK(std::abs(r.x[0] - 1.0) <= 1e-4);
  CHECK(std::abs(r.x[1] - 1.0) <= 1e-4);

  auto bowl = [](const std::vector<double>& x) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1.0) * (x[i] - 0.5) * (x[i] - 0.5);
    return s;
  };
  const auto q = nelder_mead(bowl, std::vector<double>(6, 0.0));
  CHECK(q.converged);
  for (double x : q.x) CHECK(std::abs(x - 0.5) <= 1e-5);

  o.max_evals = 10;
  CHECK_FALSE(nelder_mead(rosen, {-1.2, 1.0}, o).converged);
}

TEST_CASE("extrapolate_params") {
  const auto c = extrapolate_params({{0.3, 0.3, 0.3}, {-0.2, -0.2, -0.2}});
  REQUIRE(c.depth() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(c.gamma[i] == doctest::Approx(0.3));
    CHECK(c.beta[i] == doctest::Approx(-0.2));
  }
  const auto one = extrapolate_params({{0.5}, {-0.4}});
  CHECK(one.gamma == std::vector<double>{0.5, 0.5});
  const auto two = extrapolate_params({{0.2, 0.6}, {-0.5, -0.1}});
  CHECK(two.gamma[0] == doctest::Approx(0.2));
  CHECK(two.gamma[1] == doctest::Approx(0.4));
  CHECK(two.gamma[2] == doctest::Approx(0.6));
  CHECK(two.beta[1] == doctest::Approx(-0.3));

  // Monotone input stays monotone.
  const auto t7 = find_fixture("table1", 7)->params;
  const auto g8 = extrapolate_params(t7);
  for (int i = 1; i < 8; ++i) {
    CHECK(g8.gamma[i] >= g8.gamma[i - 1]);
    CHECK(g8.beta[i] >= g8.beta[i - 1]);
  }
}

TEST_CASE("extrapolated p=1 optimum refines to the p=2 optimum") {
  const auto guess = extrapolate_params({{0.5}, {-pi / 8}});
  OptimizeOptions o;
  o.initial = guess;
  const auto r = optimize_vp(2, 1, 0, Strategy::multistart, o);
  CHECK(std::abs(r.best_value - (-0.4075)) <= 1e-4);
}

TEST_CASE("canonicalize") {
  const auto c = canonicalize({{-0.5, 0.2}, {pi / 8, 1.0}});
  CHECK(c.gamma[0] == doctest::Approx(0.5));
  CHECK(c.beta[0] == doctest::Approx(-pi / 8));
  CHECK(c.beta[1] == doctest::Approx(-1.0 + pi / 2));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 30; ++t) {
    const int p = 1 + t % 3;
    QaoaParams par;
    for (int i = 0; i < p; ++i) {
      par.gamma.push_back(u(rng));
      par.beta.push_back(u(rng));
    }
    const auto k = canonicalize(par);
    CHECK(k.gamma[0] >= 0.0);
    for (double b : k.beta) {
      CHECK(b >= -pi / 4 - 1e-12);
      CHECK(b <= pi / 4 + 1e-12);
    }
    CHECK(vp_value(k) == doctest::Approx(vp_value(par)).epsilon(1e-10));
  }
}

TEST_CASE("optimize p=1") {
  const auto r = optimize_vp(1, 10, 3, Strategy::multistart);
  CHECK(r.best_value == doctest::Approx(-0.303265).epsilon(2e-6));
  CHECK(r.best_params.gamma[0] == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(r.best_params.beta[0] == doctest::Approx(-pi / 8).epsilon(1e-4));
  CHECK(r.starts_used == 10);
  CHECK(r.converged_restarts >= 1);
  for (const auto& o : r.restarts) CHECK(r.best_value <= o.value);

  OptimizeOptions fixed;
  fixed.initial = QaoaParams{{0.4}, {-0.3}};
  const auto s = optimize_vp(1, 1, 0, Strategy::multistart, fixed);
  CHECK(s.best_params.gamma[0] == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(s.best_params.beta[0] == doctest::Approx(-pi / 8).epsilon(1e-4));
}

TEST_CASE("optimize is deterministic") {
  const auto a = optimize_vp(2, 8, 42, Strategy::multistart);
  const auto b = optimize_vp(2, 8, 42, Strategy::multistart);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_params == b.best_params);
  REQUIRE(a.restarts.size() == b.restarts.size());
  for (std::size_t k = 0; k < a.restarts.size(); ++k) CHECK(a.restarts[k].value == b.restarts[k].value);
}

TEST_CASE("optimize p=3 recovers the tabulated optimum") {
  const auto r = optimize_vp(3, 30, 7, Strategy::multistart);
  const auto row = *find_fixture("table1", 3);
  CHECK(std::abs(r.best_value - row.value) <= 5e-4);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(r.best_params.gamma[i] - row.params.gamma[i]) <= 2e-2);
    CHECK(std::abs(r.best_params.beta[i] - row.params.beta[i]) <= 2e-2);
  }
  CHECK(norm(vp_gradient(r.best_params)) <= 1e-4);
}

TEST_CASE("multistart and warmstart agree at small depth") {
  const int max_p = long_tests() ? 4 : 3;
  for (int p = 2; p <= max_p; ++p) {
    const auto m = optimize_vp(p, 200, 11, Strategy::multistart);
    const auto w = optimize_vp(p, 5, 11, Strategy::warmstart);
    CAPTURE(p);
    CHECK(std::abs(m.best_value - w.best_value) <= 1e-4);
    CHECK(norm(vp_gradient(w.best_params)) <= 1e-4);
  }
}

TEST_CASE("depth cap") {
  CHECK_THROWS_AS(optimize_vp(9, 1, 0, Strategy::multistart), Error);
  CHECK_THROWS_AS(optimize_vp(2, 0, 0, Strategy::multistart), Error);
  OptimizeOptions bad;
  bad.initial = QaoaParams{{0.1}, {0.1}};
  CHECK_THROWS_AS(optimize_vp(2, 1, 0, Strategy::multistart, bad), Error);
}

TEST_CASE("warmstart from tabulated p=7 reaches the p=8 value" * doctest::skip(!long_tests())) {
  OptimizeOptions o;
  o.warm_from = find_fixture("table1", 7)->params;
  const auto r = optimize_vp(8, 1, 0, Strategy::warmstart, o);
  CHECK(std::abs(r.best_value - (-0.6073)) <= 1e-3);
}
