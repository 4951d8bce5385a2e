#pragma once

// Exact statevector simulation of the depth-p QAOA on a finite SK instance.
//
// Basis index convention: bit j of the index is spin z_{j+1}, with a 0 bit
// meaning +1. The initial state is the uniform superposition |+>^n.

#include <complex>
#include <utility>
#include <vector>

#include "skqaoa/instance.hpp"
#include "skqaoa/params.hpp"

namespace skqaoa {

/// 2^24 amplitudes, about 256 MB of complex doubles.
inline constexpr int kMaxStatevectorSpins = 24;

/// Throws Error(memory_cap) when n exceeds the statevector cap.
void check_statevector_size(int n);

/// C(z) for every basis index z.
std::vector<double> cost_vector(const SKInstance& instance);

using StateVector = std::vector<std::complex<double>>;

/// Final state e^{-i beta_p B} e^{-i gamma_p C} ... e^{-i beta_1 B} e^{-i gamma_1 C} |+>^n.
StateVector qaoa_state(const std::vector<double>& cost, int n, const QaoaParams& params);

/// (<C/n>, <(C/n)^2>) in the final state.
std::pair<double, double> expectation_moments(const StateVector& psi, const std::vector<double>& cost, int n);

std::pair<double, double> run_qaoa_expectation(const SKInstance& instance, const QaoaParams& params);

struct InstanceMoments {
  Seed seed = 0;
  double mean_energy = 0.0;    // <C/n>
  double second_moment = 0.0;  // <(C/n)^2>
  double quantum_variance() const { return second_moment - mean_energy * mean_energy; }
};

struct EnsembleStats {
  std::vector<InstanceMoments> per_instance;
  double mean_energy = 0.0;            // average of <C/n>
  double var_over_instances = 0.0;     // unbiased sample variance of <C/n>
  double mean_second_moment = 0.0;     // average of <(C/n)^2>
  double var_second_moment = 0.0;      // unbiased sample variance of <(C/n)^2>
  double mean_quantum_variance = 0.0;  // average of <(C/n)^2> - <C/n>^2

  double stderr_energy() const;
  double stderr_second_moment() const;
};

/// Instance k uses seed derive_seed(seed, SeedStream::instance, k).
EnsembleStats ensemble_stats(int n, const QaoaParams& params, int num_instances, CouplingDist dist, Seed seed);

/// Aggregates precomputed per-instance moments.
EnsembleStats summarize(std::vector<InstanceMoments> per_instance);

}  // namespace skqaoa
