#pragma once

// Classical heuristics for the SK ground state, used as reference points.
// Energies are reported as densities C(z)/n.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skqaoa/instance.hpp"
#include "skqaoa/seeding.hpp"

namespace skqaoa {

enum class ScheduleShape { linear, geometric };

ScheduleShape parse_schedule_shape(std::string_view name);
std::string to_string(ScheduleShape shape);

/// Temperatures are in units where the SK phase transition sits at T = 1.
struct AnnealSchedule {
  double t_start = 1.3;
  double t_end = 0.01;
  std::int64_t steps = 1;  // single-spin proposals
  ScheduleShape shape = ScheduleShape::linear;

  void validate() const;
  double temperature(std::int64_t step) const;
};

struct AnnealResult {
  std::vector<int> spins;  // best string seen
  double energy_density = 0.0;
  double final_energy_density = 0.0;  // state at the last step
  std::int64_t steps = 0;
  double sweeps = 0.0;  // steps / n
  std::int64_t accepted = 0;
};

/// Single-spin-flip Metropolis dynamics with cached local fields.
AnnealResult simulated_annealing(const SKInstance& instance, const AnnealSchedule& schedule, Seed seed);

struct DescentResult {
  std::vector<int> spins;
  double energy_density = 0.0;
  std::int64_t flips = 0;
  int sweeps = 0;
  int restarts = 1;
};

/// Greedy single flips in random sweep order from a random start, until no
/// flip lowers the energy.
DescentResult zero_temp_descent(const SKInstance& instance, Seed seed);

/// Lowest of `restarts` independent descents; restart r uses
/// derive_seed(seed, SeedStream::descent, r).
DescentResult zero_temp_descent_best(const SKInstance& instance, int restarts, Seed seed);

struct SpectralResult {
  std::vector<int> spins;
  double energy_density = 0.0;
  double eigenvalue = 0.0;  // smallest eigenvalue of J
  std::vector<double> eigenvector;
  int iterations = 0;
};

inline constexpr double kSpectralTolerance = 1e-8;
inline constexpr int kSpectralMaxIterations = 100000;

/// Signs of the minimal eigenvector of J, found by power iteration on
/// sigma I - J. Throws Error(eigen_not_converged) after the iteration cap.
SpectralResult spectral_round(const SKInstance& instance, Seed seed = 0);

/// True when no single flip lowers C.
bool is_local_minimum(const SKInstance& instance, const std::vector<int>& spins);

/// Exhaustive minimum of C/n over all 2^n strings (n <= 24).
double exhaustive_minimum(const SKInstance& instance);

}  // namespace skqaoa
