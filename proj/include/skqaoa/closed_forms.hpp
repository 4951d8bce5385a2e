#pragma once

// Analytic p=1 and p=2 results for Gaussian couplings, used as oracles.

#include "skqaoa/params.hpp"

namespace skqaoa {

struct Moments {
  double m1 = 0.0;  // E_J <C/n>
  double m2 = 0.0;  // E_J <(C/n)^2>
};

/// ((n-1)/n) gamma exp(-2 gamma^2 (n-1)/n) sin(4 beta). Requires n >= 2.
double v1_finite_n(double gamma, double beta, long long n);

/// gamma exp(-2 gamma^2) sin(4 beta).
double v1_infinite(double gamma, double beta);

/// Finite-n second moment at p=1. Requires n >= 3.
double m2_p1_finite(double gamma, double beta, long long n);

/// Both p=1 moments at finite n (n >= 3).
Moments p1_moments(double gamma, double beta, long long n);

/// [gamma_1 Gamma_1 + gamma_2 Gamma_2] exp(-2(gamma_1^2 + gamma_2^2)). Requires depth 2.
double v2_infinite(const QaoaParams& params);

}  // namespace skqaoa
