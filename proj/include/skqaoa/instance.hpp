#pragma once

// Random SK instances: C(z) = n^{-1/2} sum_{j<k} J_jk z_j z_k.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "skqaoa/seeding.hpp"

namespace skqaoa {

enum class CouplingDist { gaussian, rademacher };

CouplingDist parse_dist(std::string_view name);
std::string to_string(CouplingDist dist);

/// Largest n accepted by sample_instance (couplings are stored densely).
inline constexpr int kMaxInstanceSpins = 10000;

struct SKInstance {
  int n = 0;
  std::vector<double> couplings;  // J_jk for j < k, row-major upper triangle
  CouplingDist dist = CouplingDist::gaussian;
  Seed seed = 0;

  static std::size_t pair_index(int n, int j, int k) {
    // j < k, zero-based
    return static_cast<std::size_t>(j) * (2 * static_cast<std::size_t>(n) - j - 1) / 2 + (k - j - 1);
  }

  double coupling(int j, int k) const;  // symmetric, zero on the diagonal

  /// Symmetric n x n matrix with zero diagonal.
  Eigen::MatrixXd dense() const;

  /// C(z) for spins z_i in {+1,-1}.
  double cost(std::span<const int> spins) const;
};

/// Deterministic in (n, dist, seed). Requires 2 <= n <= kMaxInstanceSpins.
SKInstance sample_instance(int n, CouplingDist dist, Seed seed);

/// Instance with explicit couplings (length n(n-1)/2, row-major upper triangle).
SKInstance make_instance(int n, std::vector<double> couplings);

}  // namespace skqaoa
