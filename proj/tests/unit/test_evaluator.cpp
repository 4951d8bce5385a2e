#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skqaoa/closed_forms.hpp"
#include "skqaoa/error.hpp"
#include "skqaoa/evaluator.hpp"
#include "skqaoa/fixtures.hpp"

using namespace skqaoa;
using std::numbers::pi;

namespace {
Configuration cfg(std::initializer_list<int> spins) { return from_spins(std::vector<int>(spins)); }
constexpr cplx I{0.0, 1.0};
bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("q_amplitude p=1 values") {
  const QaoaParams par{{0.3}, {0.7}};
  const double c = std::cos(0.7), s = std::sin(0.7);
  CHECK(close(q_amplitude(cfg({1, 1}), par), c * c, 1e-15));
  CHECK(close(q_amplitude(cfg({-1, -1}), par), s * s, 1e-15));
  CHECK(close(q_amplitude(cfg({-1, 1}), par), I * s * c, 1e-15));
  CHECK(close(q_amplitude(cfg({1, -1}), par), -I * s * c, 1e-15));
}

TEST_CASE("q_amplitude matches the theta-exponent definition") {
  std::mt19937_64 rng(1);
  for (int p = 1; p <= 4; ++p) {
    const auto par = oracle::random_params(p, rng);
    for (const auto& s : oracle::all_spins(p))
      REQUIRE(close(q_amplitude(from_spins(s), par), oracle::q(s, par), 1e-14));
  }
}

TEST_CASE("Q sums to one over the mirror set") {
  std::mt19937_64 rng(2);
  for (int p = 1; p <= 6; ++p)
    for (int t = 0; t < 100; ++t) {
      const auto par = oracle::random_params(p, rng);
      cplx sum{0.0, 0.0};
      for (const auto& a : enumerate_configs(p))
        if (partition_level(a) == p + 1) sum += q_amplitude(a, par);
      REQUIRE(close(sum, 1.0, 1e-12));
    }
}

TEST_CASE("Q and W flip sign under bar") {
  std::mt19937_64 rng(3);
  for (int p = 1; p <= 4; ++p) {
    const auto par = oracle::random_params(p, rng);
    const auto w = compute_W(par);
    for (const auto& a : enumerate_configs(p)) {
      if (partition_level(a) == p + 1) {
        const cplx wa = w[a];
        CHECK(std::abs(wa.imag()) <= 1e-15);
        CHECK(wa.real() >= -1e-15);
        CHECK(wa.real() <= 1.0 + 1e-15);
        continue;
      }
      CHECK(close(q_amplitude(bar(a), par), -q_amplitude(a, par), 1e-15));
      CHECK(close(w[bar(a)], -w[a], 1e-15));
    }
  }
}

TEST_CASE("phi examples") {
  CHECK(phi(cfg({1, -1}), {0.37}) == doctest::Approx(2 * 0.37).epsilon(1e-15));
  std::mt19937_64 rng(4);
  for (int p = 1; p <= 4; ++p) {
    const auto par = oracle::random_params(p, rng, 2.0);
    for (const auto& s : oracle::all_spins(p)) {
      const auto a = from_spins(s);
      CHECK(phi(a, par.gamma) == doctest::Approx(oracle::phi(s, par.gamma)).epsilon(1e-14));
      if (partition_level(a) <= p) CHECK(std::abs(phi(product(a, bar(a)), par.gamma)) <= 1e-14);
    }
    for (const auto& a : enumerate_configs(p))
      for (const auto& b : enumerate_configs(p))
        if (partition_level(a) == p + 1 && partition_level(b) == p + 1)
          CHECK(std::abs(phi(product(a, b), par.gamma)) <= 1e-14);
  }
}

TEST_CASE("f_damping") {
  const QaoaParams par{{0.45}, {-0.2}};
  CHECK(close(f_damping(cfg({1, -1}), par), std::exp(-2 * 0.45 * 0.45), 1e-15));
  std::mt19937_64 rng(5);
  for (int p = 1; p <= 3; ++p) {
    const auto pr = oracle::random_params(p, rng);
    for (const auto& s : oracle::all_spins(p)) {
      const auto b = from_spins(s);
      CHECK(close(f_damping(b, pr), oracle::f(s, pr), 1e-13));
      if (partition_level(b) == p + 1)
        CHECK(close(f_damping(b, pr), 1.0, 1e-15));
      else
        CHECK(close(f_damping(bar(b), pr), f_damping(b, pr), 1e-14));
    }
  }
}

TEST_CASE("k_coupling p=2 values") {
  const double g1 = 0.4, g2 = 0.7, b1 = -0.5, b2 = -0.3;
  const QaoaParams par{{g1, g2}, {b1, b2}};
  const std::vector<Configuration> el = {cfg({1, 1, -1, -1}),  cfg({-1, -1, 1, 1}), cfg({1, 1, -1, 1}),
                                         cfg({-1, -1, 1, -1}), cfg({1, 1, 1, -1}),  cfg({-1, -1, -1, 1})};
  const cplx k51 = 4.0 * I * g1 * g2 * std::exp(-2 * g1 * g1) * std::sin(2 * b1) * std::pow(std::cos(b2), 2);
  const cplx k61 = 4.0 * I * g1 * g2 * std::exp(-2 * g1 * g1) * std::sin(2 * b1) * std::pow(std::sin(b2), 2);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 6; ++i) {
      cplx expect{0.0, 0.0};
      if (j == 4 && i == 0) expect = k51;
      if (j == 4 && i == 1) expect = -k51;
      if (j == 5 && i == 0) expect = k61;
      if (j == 5 && i == 1) expect = -k61;
      CAPTURE(j);
      CAPTURE(i);
      CHECK(close(k_coupling(el[j], el[i], par), expect, 1e-14));
    }
}

TEST_CASE("K vanishes for i <= j and is invariant under bar") {
  std::mt19937_64 rng(6);
  for (int p = 1; p <= 4; ++p) {
    const auto par = oracle::random_params(p, rng, 1.5);
    const auto d = build_ordered_d(p);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i; j < d.size(); ++j)
        REQUIRE(std::abs(k_coupling({d.members[i], p}, {d.members[j], p}, par)) <= 1e-13);
  }
  for (int p = 1; p <= 3; ++p) {
    const auto par = oracle::random_params(p, rng, 1.5);
    for (const auto& sb : oracle::all_spins(p))
      for (const auto& sc : oracle::all_spins(p)) {
        const auto b = from_spins(sb), c = from_spins(sc);
        if (partition_level(b) > p || partition_level(c) > p) continue;
        const cplx kbc = k_coupling(b, c, par);
        CHECK(close(kbc, oracle::k(sb, sc, par), 1e-13));
        CHECK(close(k_coupling(bar(b), c, par), kbc, 1e-13));
        CHECK(close(k_coupling(b, bar(c), par), kbc, 1e-13));
      }
  }
  CHECK_THROWS_AS(k_coupling(cfg({1, 1}), cfg({1, -1}), QaoaParams{{0.1}, {0.2}}), Error);
}

TEST_CASE("W table at p=1") {
  const double g = 0.6, b = -0.25;
  const auto w = compute_W({{g}, {b}});
  const double s = std::sin(b), c = std::cos(b);
  CHECK(close(w[cfg({1, 1})], c * c, 1e-15));
  CHECK(close(w[cfg({-1, -1})], s * s, 1e-15));
  CHECK(close(w[cfg({1, -1})], -I * s * c * std::exp(-2 * g * g), 1e-15));
  CHECK(close(w[cfg({-1, 1})], I * s * c * std::exp(-2 * g * g), 1e-15));
}

TEST_CASE("W with all beta zero is concentrated on all-plus") {
  for (int p = 1; p <= 5; ++p) {
    QaoaParams par{std::vector<double>(p, 0.3), std::vector<double>(p, 0.0)};
    const auto w = compute_W(par);
    for (std::size_t code = 0; code < w.values.size(); ++code)
      CHECK(close(w.values[code], code == 0 ? 1.0 : 0.0, 1e-15));
  }
}

TEST_CASE("W table at p=2 against the symbolic list") {
  const double g1 = 0.4, g2 = 0.7, b1 = -0.5, b2 = -0.3;
  const auto w = compute_W({{g1, g2}, {b1, b2}});
  const double lam = 4 * g1 * g2 * std::sin(2 * b1) * std::exp(-2 * g1 * g1);
  const double om = 4 * g1 * g2 * std::cos(2 * b1);
  const double s1 = std::sin(2 * b1), s2 = std::sin(2 * b2);
  const double e12 = std::exp(-2 * (g1 * g1 + g2 * g2));
  CHECK(close(w[cfg({1, 1, -1, -1})], -0.25 * std::exp(-2 * g2 * g2 + I * lam) * s1 * s2, 1e-14));
  CHECK(close(w[cfg({-1, -1, 1, 1})], -0.25 * std::exp(-2 * g2 * g2 - I * lam) * s1 * s2, 1e-14));
  CHECK(close(w[cfg({1, 1, -1, 1})], -0.5 * I * e12 * std::exp(-om) * std::pow(std::cos(b1), 2) * s2, 1e-14));
  CHECK(close(w[cfg({-1, -1, 1, -1})], 0.5 * I * e12 * std::exp(om) * std::pow(std::sin(b1), 2) * s2, 1e-14));
  CHECK(close(w[cfg({1, 1, 1, -1})], -0.5 * I * std::exp(-2 * g1 * g1) * s1 * std::pow(std::cos(b2), 2), 1e-14));
  CHECK(close(w[cfg({-1, -1, -1, 1})], 0.5 * I * std::exp(-2 * g1 * g1) * s1 * std::pow(std::sin(b2), 2), 1e-14));
}

TEST_CASE("W matches the literal procedure") {
  std::mt19937_64 rng(7);
  for (int p = 1; p <= 4; ++p)
    for (int t = 0; t < 3; ++t) {
      const auto par = oracle::random_params(p, rng, 1.2);
      const auto w = compute_W(par);
      const auto ref = oracle::literal_w(par);
      REQUIRE(ref.size() == w.values.size());
      for (const auto& [code, val] : ref) REQUIRE(close(w.values[code], val, 1e-12));
    }
}

TEST_CASE("evaluate_vp examples") {
  CHECK(evaluate_vp({{0.5}, {-pi / 8}}).v_p == doctest::Approx(-1.0 / std::sqrt(4 * std::exp(1.0))).epsilon(1e-14));
  for (int p = 1; p <= 6; ++p) {
    QaoaParams par{std::vector<double>(p, 0.0), std::vector<double>(p, 0.3)};
    CHECK(evaluate_vp(par).v_p == 0.0);
  }
  CHECK(std::abs(evaluate_vp({{0.3817, 0.6655}, {-0.4960, -0.2690}}).v_p - (-0.4075)) <= 5e-5);
  CHECK(std::abs(evaluate_vp(find_fixture("table1", 5)->params).v_p - (-0.5476)) <= 5e-5);
}

TEST_CASE("evaluate_vp rejects bad input") {
  CHECK_THROWS_AS(evaluate_vp({{0.1, 0.2}, {0.1}}), Error);
  CHECK_THROWS_AS(evaluate_vp({{}, {}}), Error);
  CHECK_THROWS_AS(evaluate_vp({{NAN}, {0.1}}), Error);
  CHECK_THROWS_AS(evaluate_vp({std::vector<double>(13, 0.1), std::vector<double>(13, 0.1)}), Error);
}

TEST_CASE("residue bound and sign symmetry") {
  std::mt19937_64 rng(8);
  for (int p = 1; p <= 6; ++p)
    for (int t = 0; t < 100; ++t) {
      const auto par = oracle::random_params(p, rng, 1.0);
      const auto r = evaluate_vp(par);
      REQUIRE(r.imag_residue <= kResidueTolerance * std::max(1.0, std::abs(r.v_p)));
      REQUIRE(std::abs(evaluate_vp(par.negated()).v_p - r.v_p) <= 1e-12);
    }
}

TEST_CASE("p=1 grid against the closed form") {
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double g = -1.0 + 2.0 * i / 20.0;
      const double b = -pi / 4 + (pi / 2) * j / 20.0;
      REQUIRE(std::abs(evaluate_vp({{g}, {b}}).v_p - v1_infinite(g, b)) <= 1e-12);
    }
}

TEST_CASE("p=2 random draws against the closed form") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto par = oracle::random_params(2, rng, 1.0);
    REQUIRE(std::abs(evaluate_vp(par).v_p - v2_infinite(par)) <= 1e-10);
  }
}

TEST_CASE("second moment is the square of the first") {
  CHECK(second_moment_infinite({{0.5}, {-pi / 8}}) == doctest::Approx(1.0 / (4 * std::exp(1.0))).epsilon(1e-13));
  CHECK(second_moment_infinite({{0.0, 0.0}, {0.2, 0.1}}) == 0.0);
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    const auto par = oracle::random_params(1 + t % 4, rng);
    const double v = vp_value(par);
    CHECK(second_moment_infinite(par) == doctest::Approx(v * v).epsilon(1e-12));
  }
}

TEST_CASE("truncated series at p=1 is exact") {
  const QaoaParams par{{0.7}, {0.3}};
  const auto w = compute_W(par);
  const auto u = cfg({1, -1}), v = cfg({-1, 1});
  for (auto [a, b] : {std::pair{u, u}, std::pair{u, v}, std::pair{v, v}})
    CHECK(close(truncated_series_oracle(a, b, par, 2), w[a] * w[b], 1e-15));
}

TEST_CASE("truncated series at p=2 converges to W_u W_v") {
  std::mt19937_64 rng(12);
  std::vector<Configuration> b_set;
  for (const auto& a : enumerate_configs(2))
    if (partition_level(a) <= 2) b_set.push_back(a);
  std::uniform_int_distribution<std::size_t> pick(0, b_set.size() - 1);
  for (int t = 0; t < 20; ++t) {
    const auto par = oracle::random_params(2, rng, 1.0);
    Configuration u, v;
    do {
      u = b_set[pick(rng)];
      v = b_set[pick(rng)];
    } while (u == v || u == bar(v));
    const cplx target = compute_W(par)[u] * compute_W(par)[v];
    double prev = INFINITY;
    for (int tmax : {5, 10, 20, 30}) {
      const double e = std::abs(truncated_series_oracle(u, v, par, tmax) - target);
      CHECK(e <= prev + 1e-15);
      prev = e;
    }
    CHECK(prev <= 1e-8);
  }
  CHECK_THROWS_AS(truncated_series_oracle(cfg({1, 1, 1, -1, 1, 1}), cfg({1, 1, -1, 1, 1, 1}),
                                          QaoaParams{{0.1, 0.1, 0.1}, {0.1, 0.1, 0.1}}, 5),
                  Error);
}
