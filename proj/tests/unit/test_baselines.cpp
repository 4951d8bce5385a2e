#include <cmath>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "skqaoa/baselines.hpp"
#include "skqaoa/error.hpp"
#include "skqaoa/fixtures.hpp"

using namespace skqaoa;

namespace {
double two_spin_optimum(const SKInstance& inst) { return -std::abs(inst.couplings[0]) / std::sqrt(2.0) / 2.0; }
}  // namespace

TEST_CASE("anneal schedule") {
  AnnealSchedule lin{2.0, 0.0, 11, ScheduleShape::linear};
  CHECK(lin.temperature(0) == 2.0);
  CHECK(lin.temperature(5) == doctest::Approx(1.0));
  CHECK(lin.temperature(10) == doctest::Approx(0.0));
  AnnealSchedule geo{1.0, 0.01, 3, ScheduleShape::geometric};
  CHECK(geo.temperature(1) == doctest::Approx(0.1));
  CHECK_THROWS_AS((AnnealSchedule{1.0, 2.0, 10}.validate()), Error);
  CHECK_THROWS_AS((AnnealSchedule{1.0, 0.5, 0}.validate()), Error);
  CHECK_THROWS_AS((AnnealSchedule{1.0, 0.0, 10, ScheduleShape::geometric}.validate()), Error);
}

TEST_CASE("annealing basics") {
  const auto inst = sample_instance(50, CouplingDist::gaussian, 1);
  const auto one = simulated_annealing(inst, {1.3, 0.01, 1}, 9);
  REQUIRE(one.spins.size() == 50);
  for (int z : one.spins) CHECK((z == 1 || z == -1));
  CHECK(std::isfinite(one.energy_density));

  const AnnealSchedule sched{1.3, 0.01, 20000};
  const auto a = simulated_annealing(inst, sched, 5);
  const auto b = simulated_annealing(inst, sched, 5);
  CHECK(a.spins == b.spins);
  CHECK(a.energy_density == b.energy_density);
  CHECK(a.accepted == b.accepted);
  CHECK(a.energy_density == doctest::Approx(inst.cost(a.spins) / 50.0).epsilon(1e-12));
  CHECK(a.energy_density <= a.final_energy_density + 1e-12);
  CHECK(a.sweeps == doctest::Approx(400.0));

  for (Seed s = 0; s < 5; ++s) {
    const auto two = sample_instance(2, CouplingDist::gaussian, s);
    CHECK(simulated_annealing(two, {1.3, 0.01, 1000}, s).energy_density ==
          doctest::Approx(two_spin_optimum(two)).epsilon(1e-12));
  }
}

TEST_CASE("annealing equilibrium just above the transition") {
  const auto inst = sample_instance(2000, CouplingDist::gaussian, 17);
  const auto r = simulated_annealing(inst, {1.0501, 1.05, 400000}, 3);
  CHECK(r.final_energy_density >= -0.56);
  CHECK(r.final_energy_density <= -0.44);
}

TEST_CASE("zero temperature descent") {
  for (Seed s = 0; s < 10; ++s) {
    const auto two = sample_instance(2, CouplingDist::gaussian, 100 + s);
    CHECK(zero_temp_descent(two, s).energy_density == doctest::Approx(two_spin_optimum(two)).epsilon(1e-12));
    CHECK(exhaustive_minimum(two) == doctest::Approx(two_spin_optimum(two)).epsilon(1e-12));
  }
  const auto inst = sample_instance(300, CouplingDist::gaussian, 2);
  const auto r = zero_temp_descent(inst, 4);
  CHECK(is_local_minimum(inst, r.spins));
  CHECK(r.energy_density == doctest::Approx(inst.cost(r.spins) / 300.0).epsilon(1e-12));
  CHECK(zero_temp_descent(inst, 4).spins == r.spins);

  const auto best = zero_temp_descent_best(inst, 5, 4);
  CHECK(best.restarts == 5);
  for (int k = 0; k < 5; ++k)
    CHECK(best.energy_density <= zero_temp_descent(inst, derive_seed(4, SeedStream::descent, k)).energy_density);
  CHECK(is_local_minimum(inst, best.spins));
}

TEST_CASE("spectral rounding on a hand instance") {
  const auto inst = make_instance(3, {1.0, -2.0, 0.5});
  const auto r = spectral_round(inst);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(inst.dense());
  CHECK(r.eigenvalue == doctest::Approx(es.eigenvalues()[0]).epsilon(1e-6));
  const Eigen::VectorXd v = es.eigenvectors().col(0);
  std::vector<int> plus(3), minus(3);
  for (int i = 0; i < 3; ++i) {
    plus[i] = v[i] >= 0 ? 1 : -1;
    minus[i] = -plus[i];
  }
  CHECK(r.energy_density == doctest::Approx(inst.cost(plus) / 3.0).epsilon(1e-12));
  CHECK(r.energy_density == doctest::Approx(inst.cost(minus) / 3.0).epsilon(1e-12));
}

TEST_CASE("spectral rounding against a dense eigensolver") {
  const auto inst = sample_instance(300, CouplingDist::gaussian, 8);
  const auto r = spectral_round(inst, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(inst.dense());
  const double lmin = es.eigenvalues()[0];
  CHECK(std::abs(r.eigenvalue - lmin) <= 1e-4 * std::abs(lmin));
  CHECK(spectral_round(inst, 1).energy_density == r.energy_density);
}

TEST_CASE("nothing beats the Parisi floor") {
  const auto inst = sample_instance(600, CouplingDist::gaussian, 31);
  CHECK(simulated_annealing(inst, {1.3, 0.01, 600000}, 1).energy_density >= kParisiValue - 0.01);
  CHECK(zero_temp_descent_best(inst, 10, 1).energy_density >= kParisiValue - 0.01);
  CHECK(spectral_round(inst).energy_density >= kParisiValue - 0.01);
}
