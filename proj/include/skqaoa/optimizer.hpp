#pragma once

// Minimization of V_p over (gamma, beta).

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skqaoa/params.hpp"
#include "skqaoa/seeding.hpp"

namespace skqaoa {

struct NelderMeadOptions {
  double ftol = 1e-8;  // spread of simplex values
  double xtol = 1e-6;  // spread of simplex vertices, max norm
  int max_evals = 0;   // 0 means 1000 * dimension
  double initial_step = 0.1;
  int polish_restarts = 2;  // fresh simplices around the optimum after convergence
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evals = 0;
  bool converged = false;
};

/// Simplex descent with dimension-adapted coefficients. Converged means both
/// tolerances were met before the evaluation budget ran out.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

enum class Strategy { multistart, warmstart };

Strategy parse_strategy(std::string_view name);
std::string to_string(Strategy strategy);

struct RestartOutcome {
  QaoaParams start;
  QaoaParams params;
  double value = 0.0;
  int evals = 0;
  bool converged = false;
};

struct OptimizationResult {
  int p = 1;
  Strategy strategy = Strategy::multistart;
  QaoaParams best_params;  // canonicalized
  double best_value = 0.0;
  int starts_used = 0;
  int converged_restarts = 0;
  Seed seed = 0;
  std::vector<RestartOutcome> restarts;  // at depth p only
};

struct OptimizeOptions {
  int max_depth = 8;
  NelderMeadOptions local;
  // Multistart: used as restart 0 instead of a random draw.
  std::optional<QaoaParams> initial;
  // Warmstart: depth p-1 parameters to extrapolate from. Without it the chain
  // starts from a multistart search at p = 1.
  std::optional<QaoaParams> warm_from;
  double warm_jitter = 0.02;  // std dev of perturbations for warm restarts 1..n-1
};

/// Multistart draws gamma_i in [-2, 2] and beta_i in [-pi/4, pi/4]; restart k
/// uses derive_seed(seed, SeedStream::restart, k). Warmstart extrapolates
/// from the previous depth and perturbs all but the first start.
OptimizationResult optimize_vp(int p, int n_starts, Seed seed, Strategy strategy, const OptimizeOptions& options = {});

/// Depth p -> p+1 guess: new_i = ((i-1)/p) old_{i-1} + ((p-i+1)/p) old_i.
QaoaParams extrapolate_params(const QaoaParams& prev);

/// Wraps each beta into [-pi/4, pi/4) (V_p has period pi/2 in every beta),
/// then applies (gamma, beta) -> (-gamma, -beta) if gamma_1 < 0.
QaoaParams canonicalize(const QaoaParams& params);

/// Central finite-difference gradient of V_p, ordered (gamma..., beta...).
std::vector<double> vp_gradient(const QaoaParams& params, double h = 1e-5);

}  // namespace skqaoa
