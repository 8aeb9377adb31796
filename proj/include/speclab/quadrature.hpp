#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "speclab/common.hpp"

namespace speclab {

// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

// Single composite pass: `panels` equal panels of a fixed-order rule.
template <typename F>
auto integrate_panels(F&& f, double a, double b, int order, int panels)
    -> decltype(f(a) * 1.0) {
  const GaussRule& rule = gauss_legendre(order);
  using R = decltype(f(a) * 1.0);
  R total{};
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    R acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * acc;
  }
  return total;
}

struct AdaptiveOptions {
  int order = 20;
  double rel_tol = 1e-10;
  double abs_floor = 1e-300;  // scale below which relative error is meaningless
  int max_doublings = 16;
};

// Panel count doubles until successive estimates agree to rel_tol.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, AdaptiveOptions opt = {})
    -> decltype(f(a) * 1.0) {
  auto prev = integrate_panels(f, a, b, opt.order, 1);
  int panels = 2;
  for (int it = 0; it < opt.max_doublings; ++it, panels *= 2) {
    auto cur = integrate_panels(f, a, b, opt.order, panels);
    const double scale = std::max(std::abs(cur), opt.abs_floor);
    if (std::abs(cur - prev) <= opt.rel_tol * scale) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace speclab
