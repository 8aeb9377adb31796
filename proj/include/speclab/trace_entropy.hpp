#pragma once

#include <vector>

#include "speclab/potential.hpp"

namespace speclab {

// Weight (k - alpha)^5 (beta - k)^5, nonnegative on [alpha, beta] with four
// derivatives vanishing at both endpoints.
struct WeightPoly {
  double alpha = 1.0;
  double beta = 2.0;

  WeightPoly() = default;
  WeightPoly(double a, double b);

  double operator()(double k) const {
    const double u = k - alpha, v = beta - k;
    const double u5 = u * u * u * u * u, v5 = v * v * v * v * v;
    return u5 * v5;
  }
};

// Z = integral over [alpha, beta] of log(k / (4 Im M(k))) p(k) dk by
// Gauss-Legendre of the given order.
double z_functional(const Potential& V, const WeightPoly& w, int n_quad);

// Order >= 40, doubled until |dZ| < 1e-9.
double z_functional_adaptive(const Potential& V, const WeightPoly& w);

struct TraceInequalityReport {
  double z = 0.0;
  double fourier_term = 0.0;   // integral of |V_hat(2k)|^2 / k^2 p(k) dk
  double det4_residual = 0.0;  // 2 Re integral of (log det4(V) + log det4(-V)) p dk
  double slack() const { return z - fourier_term; }
};

TraceInequalityReport trace_inequality_report(const Potential& V, const WeightPoly& w);

struct NodeRow {
  double k = 0.0;
  double im_m = 0.0;
  double log_ratio = 0.0;  // log(k / (4 Im M))
  double p_k = 0.0;
};

// Node-level dump on an n-point grid over [alpha, beta].
std::vector<NodeRow> node_dump(const Potential& V, const WeightPoly& w, int n_nodes);

struct TruncationRow {
  int n_cut = 0;
  double z = 0.0;
};

struct SemicontinuityProbe {
  std::vector<TruncationRow> rows;
  double z_full = 0.0;
  double min_large_cut_z = 0.0;  // min of Z over the upper half of the cut list
  bool liminf_ok = false;        // z_full <= min_large_cut_z + 1e-6
};

SemicontinuityProbe semicontinuity_probe(const Potential& V, const WeightPoly& w,
                                         const std::vector<int>& cuts);

struct ContourCheck {
  Complex segment;  // integral of log det4 * p over [alpha, beta]
  Complex arc;      // same integral over the upper half-circle joining them
};

// Cross-check of analyticity: both integrals agree when the enclosed half-disk
// is free of determinant zeros (always true here, the zeros are imaginary and
// alpha > 0).
ContourCheck det4_contour_check(const Potential& V, const WeightPoly& w, int arc_order = 20);

}  // namespace speclab
