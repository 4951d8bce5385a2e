#pragma once

// Infinite-size energy V_p(gamma, beta) of the QAOA on the SK model, evaluated
// through the configuration-basis W procedure.

#include <complex>
#include <cstddef>
#include <vector>

#include "skqaoa/config_space.hpp"
#include "skqaoa/params.hpp"

namespace skqaoa {

using cplx = std::complex<double>;

// Direct definitions. These are straightforward and O(2^p) or O(p) per call;
// the evaluator uses cached equivalents internally.

/// Q_a: product over layers of the cos/sin/i factors picked by (a_j, a_{-j}).
cplx q_amplitude(Configuration a, const QaoaParams& params);

/// Phi_a = sum_r gamma_r (a*_r - a*_{-r}). Pairwise Phi_ab is phi(product(a, b)).
double phi(Configuration a, const std::vector<double>& gamma);

/// F_b = exp(-1/2 sum_{a in A_{p+1}} Q_a Phi_ab^2).
cplx f_damping(Configuration b, const QaoaParams& params);

/// X_b = Q_b F_b.
cplx x_weight(Configuration b, const QaoaParams& params);

/// K_{b,c} = 1/2 X_b (Phi^2_{bar(b) c} - Phi^2_{b c}). Requires b, c outside A_{p+1}.
cplx k_coupling(Configuration b, Configuration c, const QaoaParams& params);

/// W_a for every configuration, indexed by code.
struct WTable {
  int p = 1;
  QaoaParams params;
  std::vector<cplx> values;

  cplx operator[](Configuration a) const { return values.at(a.code); }
};

WTable compute_W(const QaoaParams& params);

struct EvalReport {
  int p = 1;
  QaoaParams params;
  double v_p = 0.0;
  double imag_residue = 0.0;
  double wall_seconds = 0.0;
};

/// Relative tolerance on the discarded imaginary part of V_p.
inline constexpr double kResidueTolerance = 1e-9;

/// Throws Error(residue_violation) if imag_residue > 1e-9 * max(1, |v_p|).
EvalReport evaluate_vp(const QaoaParams& params);

/// Same as evaluate_vp(params).v_p; cheaper bookkeeping for optimizer loops.
double vp_value(const QaoaParams& params);

/// Infinite-size E_J<(C/n)^2>, which equals V_p squared.
double second_moment_infinite(const QaoaParams& params);

/// Nested-sum series sum_{t <= t_max} l_{u,v}(t) that converges to W_u W_v.
/// Only p <= 2; u, v must lie outside A_{p+1} with u not in {v, bar(v)}.
cplx truncated_series_oracle(Configuration u, Configuration v, const QaoaParams& params, int t_max);

}  // namespace skqaoa
