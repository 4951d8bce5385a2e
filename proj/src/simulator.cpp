#include "skqaoa/simulator.hpp"

#include <cmath>

#include "skqaoa/error.hpp"
#include "skqaoa/parallel.hpp"

namespace skqaoa {

void check_statevector_size(int n) {
  require(n >= 1, "statevector needs at least one spin");
  if (n > kMaxStatevectorSpins)
    fail(ErrorKind::memory_cap, "n = " + std::to_string(n) + " exceeds the statevector cap of " +
                                    std::to_string(kMaxStatevectorSpins) + " spins");
}

std::vector<double> cost_vector(const SKInstance& instance) {
  const int n = instance.n;
  check_statevector_size(n);
  const std::size_t dim = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));

  std::vector<double> cost(dim);
  double c0 = 0.0;
  for (double j : instance.couplings) c0 += j;
  cost[0] = c0 * scale;

  // Index x in [2^k, 2^{k+1}) differs from x' = x - 2^k only in spin k, and
  // every spin above k is +1 in both. Flipping z_k from +1 to -1 changes C by
  // -2 g_k(x') / sqrt(n), where g_k(x') = T_k - 2 sum_{j in bits(x')} J_jk.
  std::vector<double> partial(dim / 2 + 1, 0.0);
  for (int k = 0; k < n; ++k) {
    double total = 0.0;
    for (int j = 0; j < n; ++j) total += instance.coupling(j, k);
    const std::size_t half = std::size_t{1} << k;
    partial[0] = 0.0;
    for (int t = 0; t < k; ++t) {
      const std::size_t lo = std::size_t{1} << t;
      const double jt = instance.coupling(t, k);
      for (std::size_t x = lo; x < 2 * lo; ++x) partial[x] = partial[x - lo] + jt;
    }
    for (std::size_t x = 0; x < half; ++x) cost[x + half] = cost[x] - 2.0 * scale * (total - 2.0 * partial[x]);
  }
  return cost;
}

StateVector qaoa_state(const std::vector<double>& cost, int n, const QaoaParams& params) {
  params.validate();
  check_statevector_size(n);
  const std::size_t dim = std::size_t{1} << n;
  require(cost.size() == dim, "cost vector length must be 2^n");

  StateVector psi(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  for (int r = 0; r < params.depth(); ++r) {
    const double g = params.gamma[r];
    for (std::size_t x = 0; x < dim; ++x) psi[x] *= std::polar(1.0, -g * cost[x]);

    const double c = std::cos(params.beta[r]);
    const std::complex<double> mis(0.0, -std::sin(params.beta[r]));
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << q;
      for (std::size_t x = 0; x < dim; ++x) {
        if (x & bit) continue;
        const auto a = psi[x];
        const auto b = psi[x | bit];
        psi[x] = c * a + mis * b;
        psi[x | bit] = mis * a + c * b;
      }
    }
  }
  return psi;
}

std::pair<double, double> expectation_moments(const StateVector& psi, const std::vector<double>& cost, int n) {
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    const double w = std::norm(psi[x]);
    m1 += w * cost[x];
    m2 += w * cost[x] * cost[x];
  }
  const double nd = static_cast<double>(n);
  return {m1 / nd, m2 / (nd * nd)};
}

std::pair<double, double> run_qaoa_expectation(const SKInstance& instance, const QaoaParams& params) {
  params.validate();
  check_statevector_size(instance.n);
  const auto cost = cost_vector(instance);
  const auto psi = qaoa_state(cost, instance.n, params);
  return expectation_moments(psi, cost, instance.n);
}

double EnsembleStats::stderr_energy() const {
  return per_instance.size() > 1 ? std::sqrt(var_over_instances / static_cast<double>(per_instance.size())) : 0.0;
}

double EnsembleStats::stderr_second_moment() const {
  return per_instance.size() > 1 ? std::sqrt(var_second_moment / static_cast<double>(per_instance.size())) : 0.0;
}

EnsembleStats summarize(std::vector<InstanceMoments> per_instance) {
  EnsembleStats s;
  s.per_instance = std::move(per_instance);
  const double count = static_cast<double>(s.per_instance.size());
  if (s.per_instance.empty()) return s;
  for (const auto& m : s.per_instance) {
    s.mean_energy += m.mean_energy;
    s.mean_second_moment += m.second_moment;
    s.mean_quantum_variance += m.quantum_variance();
  }
  s.mean_energy /= count;
  s.mean_second_moment /= count;
  s.mean_quantum_variance /= count;
  if (s.per_instance.size() > 1) {
    for (const auto& m : s.per_instance) {
      s.var_over_instances += (m.mean_energy - s.mean_energy) * (m.mean_energy - s.mean_energy);
      s.var_second_moment += (m.second_moment - s.mean_second_moment) * (m.second_moment - s.mean_second_moment);
    }
    s.var_over_instances /= count - 1.0;
    s.var_second_moment /= count - 1.0;
  }
  return s;
}

EnsembleStats ensemble_stats(int n, const QaoaParams& params, int num_instances, CouplingDist dist, Seed seed) {
  params.validate();
  check_statevector_size(n);
  require(n >= 2, "ensemble needs n >= 2");
  require(num_instances >= 1, "ensemble needs at least one instance");

  std::vector<InstanceMoments> moments(num_instances);
  // Large states would not fit several times over in memory.
  const int threads = n >= 22 ? 1 : worker_threads();
  std::string error;
  ErrorKind error_kind = ErrorKind::invalid_argument;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int k = 0; k < num_instances; ++k) {
    try {
      const Seed s = derive_seed(seed, SeedStream::instance, static_cast<std::uint64_t>(k));
      const auto inst = sample_instance(n, dist, s);
      const auto [m1, m2] = run_qaoa_expectation(inst, params);
      moments[k] = {s, m1, m2};
    } catch (const Error& e) {
#pragma omp critical(skqaoa_ensemble_error)
      if (error.empty()) {
        error = e.what();
        error_kind = e.kind();
      }
    }
  }
  if (!error.empty()) fail(error_kind, error);
  return summarize(std::move(moments));
}

}  // namespace skqaoa
