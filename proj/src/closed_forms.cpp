#include "skqaoa/closed_forms.hpp"

#include <cmath>

#include "skqaoa/error.hpp"

namespace skqaoa {

double v1_finite_n(double gamma, double beta, long long n) {
  require(n >= 2, "v1_finite_n needs n >= 2");
  const double f = static_cast<double>(n - 1) / static_cast<double>(n);
  return f * gamma * std::exp(-2.0 * gamma * gamma * f) * std::sin(4.0 * beta);
}

double v1_infinite(double gamma, double beta) { return gamma * std::exp(-2.0 * gamma * gamma) * std::sin(4.0 * beta); }

double m2_p1_finite(double gamma, double beta, long long n) {
  require(n >= 3, "m2_p1_finite needs n >= 3");
  const double nd = static_cast<double>(n);
  const double s2 = std::sin(2.0 * beta);
  return (nd - 1.0) / (2.0 * nd * nd) +
         2.0 * gamma * gamma * (nd - 1.0) * (nd - 2.0) * (nd - 1.0 + (nd - 3.0) * std::cos(4.0 * beta)) /
             (nd * nd * nd) * std::exp(-4.0 * gamma * gamma * (nd - 2.0) / nd) * s2 * s2;
}

Moments p1_moments(double gamma, double beta, long long n) {
  return {v1_finite_n(gamma, beta, n), m2_p1_finite(gamma, beta, n)};
}

double v2_infinite(const QaoaParams& params) {
  params.validate();
  require(params.depth() == 2, "v2_infinite needs depth 2");
  const double g1 = params.gamma[0], g2 = params.gamma[1];
  const double b1 = params.beta[0], b2 = params.beta[1];
  const double lambda = 4.0 * g1 * g2 * std::sin(2.0 * b1) * std::exp(-2.0 * g1 * g1);
  const double omega = 4.0 * g1 * g2 * std::cos(2.0 * b1);

  const double big_gamma1 =
      2.0 *
      (std::exp(2.0 * g2 * g2) * std::sin(2.0 * b1) * std::cos(2.0 * b2) +
       std::sin(2.0 * b2) * (std::cos(2.0 * b1) * std::cosh(omega) - std::sinh(omega))) *
      (std::cos(2.0 * b1) * std::cos(2.0 * b2) -
       std::exp(-2.0 * g2 * g2) * std::sin(2.0 * b1) * std::sin(2.0 * b2) * std::cos(lambda));
  const double big_gamma2 = (std::cosh(omega) + std::exp(2.0 * g1 * g1) * std::sin(2.0 * b1) * std::sin(lambda) -
                             std::cos(2.0 * b1) * std::sinh(omega)) *
                            std::sin(4.0 * b2);
  return (g1 * big_gamma1 + g2 * big_gamma2) * std::exp(-2.0 * (g1 * g1 + g2 * g2));
}

}  // namespace skqaoa
