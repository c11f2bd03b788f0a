#pragma once

#include <cstddef>
#include <functional>

namespace periodlab {

struct QuadratureResult {
  double value;
  double abs_error;
  std::size_t intervals;
};

struct QuadratureOptions {
  double abs_tol = 1e-11;
  std::size_t max_intervals = 4000;
};

/// Globally adaptive 15-point Gauss-Kronrod on [lo, hi]: the interval with
/// the largest |K15 - G7| estimate is bisected until the summed estimate
/// meets abs_tol. Throws QuadratureNoConvergence at the interval cap.
/// Endpoint singularities must be removed by the caller (u^2 substitution).
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureOptions& opts = {});

/// Sum of several pieces, errors added.
QuadratureResult operator+(const QuadratureResult& a, const QuadratureResult& b);

}  // namespace periodlab
