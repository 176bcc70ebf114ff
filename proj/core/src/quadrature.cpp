#include "cascade/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cascade/errors.hpp"

namespace cascade {

GaussRule::GaussRule(int order) {
  if (order < 1 || order > 128) {
    throw ParameterError("order", "Gauss rule order must be in [1, 128]");
  }
  nodes_.resize(order);
  weights_.resize(order);
  const int n = order;
  // Evaluates P_n(x); returns {P_n, P_{n-1}}.
  const auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    return std::pair<double, double>(p1, p0);
  };
  // Roots of P_n by Newton iteration from the Chebyshev initial guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    if (n % 2 == 1 && i == n / 2) x = 0.0;
    for (int it = 0; it < 64; ++it) {
      const auto [pn, pn1] = legendre(x);
      const double dp = n * (pn1 - x * pn) / (1.0 - x * x);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    const auto [pn, pn1] = legendre(x);
    const double dp = n * (pn1 - x * pn) / (1.0 - x * x);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

void GaussRule::mapped(double a, double b, std::vector<double>& x,
                       std::vector<double>& w) const {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  x.resize(nodes_.size());
  w.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    x[i] = mid + half * nodes_[i];
    w[i] = weights_[i] * half;
  }
}

const GaussRule& gauss_rule(int order) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, GaussRule(order)).first;
  }
  return it->second;
}

namespace {

struct Panel {
  double a, b, value;
  int depth;
};

}  // namespace

AdaptiveResult adaptive_integrate(const std::function<double(double)>& f,
                                  double a, double b, double atol, double rtol,
                                  int max_depth) {
  const GaussRule& rule = gauss_rule(10);
  AdaptiveResult res;
  if (a == b) return res;

  std::vector<Panel> stack;
  stack.push_back({a, b, rule.integrate(f, a, b), 0});
  double achieved = 0.0;
  bool tolerance_failed = false;

  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const double left = rule.integrate(f, p.a, mid);
    const double right = rule.integrate(f, mid, p.b);
    const double refined = left + right;
    const double err = std::abs(refined - p.value);
    // Local acceptance shares the budget proportionally to panel width.
    const double width_frac = (p.b - p.a) / (b - a);
    const double local_tol =
        (atol + rtol * std::abs(refined)) * std::max(width_frac, 1e-3);
    if (err <= local_tol || p.depth >= max_depth) {
      if (err > local_tol) {
        tolerance_failed = true;
      }
      res.value += refined;
      achieved += err;
      res.panels += 2;
    } else {
      stack.push_back({p.a, mid, left, p.depth + 1});
      stack.push_back({mid, p.b, right, p.depth + 1});
    }
  }
  res.error_estimate = achieved;
  if (tolerance_failed && achieved > 10.0 * (atol + rtol * std::abs(res.value))) {
    throw QuadratureError(atol, achieved);
  }
  return res;
}

}  // namespace cascade
