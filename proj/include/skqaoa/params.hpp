#pragma once

#include <vector>

namespace skqaoa {

/// Angles of a depth-p QAOA circuit: gamma_r drives the cost layer
/// e^{-i gamma_r C}, beta_r the mixing layer e^{-i beta_r B}.
struct QaoaParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  int depth() const { return static_cast<int>(gamma.size()); }

  /// Throws Error(invalid_argument) on length mismatch, empty vectors or
  /// non-finite entries.
  void validate() const;

  QaoaParams negated() const;

  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

}  // namespace skqaoa
