#include "skqaoa/instance.hpp"

#include <cmath>

#include "skqaoa/error.hpp"

namespace skqaoa {

CouplingDist parse_dist(std::string_view name) {
  if (name == "gaussian") return CouplingDist::gaussian;
  if (name == "rademacher") return CouplingDist::rademacher;
  fail(ErrorKind::invalid_argument, "unknown coupling distribution '" + std::string(name) + "'");
}

std::string to_string(CouplingDist dist) { return dist == CouplingDist::gaussian ? "gaussian" : "rademacher"; }

double SKInstance::coupling(int j, int k) const {
  if (j == k) return 0.0;
  if (j > k) std::swap(j, k);
  return couplings[pair_index(n, j, k)];
}

Eigen::MatrixXd SKInstance::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  std::size_t idx = 0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      m(j, k) = couplings[idx];
      m(k, j) = couplings[idx];
      ++idx;
    }
  return m;
}

double SKInstance::cost(std::span<const int> spins) const {
  require(static_cast<int>(spins.size()) == n, "spin string length does not match instance size");
  double total = 0.0;
  std::size_t idx = 0;
  for (int j = 0; j < n; ++j) {
    double row = 0.0;
    for (int k = j + 1; k < n; ++k) row += couplings[idx++] * spins[k];
    total += spins[j] * row;
  }
  return total / std::sqrt(static_cast<double>(n));
}

SKInstance sample_instance(int n, CouplingDist dist, Seed seed) {
  require(n >= 2 && n <= kMaxInstanceSpins,
          "instance size must lie in [2, " + std::to_string(kMaxInstanceSpins) + "], got " + std::to_string(n));
  SKInstance inst;
  inst.n = n;
  inst.dist = dist;
  inst.seed = seed;
  const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
  inst.couplings.resize(count);
  Rng rng = make_rng(seed);
  if (dist == CouplingDist::gaussian) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (auto& j : inst.couplings) j = normal(rng);
  } else {
    for (std::size_t i = 0; i < count; i += 64) {
      std::uint64_t bits = rng();
      for (std::size_t b = 0; b < 64 && i + b < count; ++b) inst.couplings[i + b] = ((bits >> b) & 1) ? -1.0 : 1.0;
    }
  }
  return inst;
}

SKInstance make_instance(int n, std::vector<double> couplings) {
  require(n >= 2, "instance needs at least 2 spins");
  require(couplings.size() == static_cast<std::size_t>(n) * (n - 1) / 2, "coupling count must be n(n-1)/2");
  for (double j : couplings) require(std::isfinite(j), "couplings must be finite");
  SKInstance inst;
  inst.n = n;
  inst.couplings = std::move(couplings);
  return inst;
}

}  // namespace skqaoa
