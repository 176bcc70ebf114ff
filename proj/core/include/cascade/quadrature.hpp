#pragma once

#include <functional>
#include <vector>

namespace cascade {

/// Gauss-Legendre rule on [-1, 1].  Nodes and weights are computed once by
/// Newton iteration on the Legendre polynomial and are deterministic for a
/// given order.
class GaussRule {
 public:
  explicit GaussRule(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Integrate f over [a, b] with a single panel.
  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      acc += weights_[i] * f(mid + half * nodes_[i]);
    }
    return acc * half;
  }

  /// Mapped nodes/weights for [a, b]; used to build tensor grids that map
  /// exactly level-to-level.
  void mapped(double a, double b, std::vector<double>& x,
              std::vector<double>& w) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Shared instances for the commonly used orders (cached, thread-safe init).
const GaussRule& gauss_rule(int order);

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Adaptive Gauss quadrature over [a, b]: bisects panels until the local
/// Richardson estimate (whole panel vs. two halves) meets
/// atol + rtol*|value|.  Throws QuadratureError when the depth cap is hit
/// before the tolerance, reporting the achieved estimate.
AdaptiveResult adaptive_integrate(const std::function<double(double)>& f,
                                  double a, double b, double atol,
                                  double rtol = 0.0, int max_depth = 48);

}  // namespace cascade
