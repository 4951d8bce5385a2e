#include "skqaoa/params.hpp"

#include <cmath>

#include "skqaoa/error.hpp"

namespace skqaoa {

void QaoaParams::validate() const {
  require(!gamma.empty(), "QAOA parameters need at least one layer");
  require(gamma.size() == beta.size(), "gamma and beta must have the same length");
  for (double g : gamma) require(std::isfinite(g), "gamma entries must be finite");
  for (double b : beta) require(std::isfinite(b), "beta entries must be finite");
}

QaoaParams QaoaParams::negated() const {
  QaoaParams out = *this;
  for (double& g : out.gamma) g = -g;
  for (double& b : out.beta) b = -b;
  return out;
}

}  // namespace skqaoa
