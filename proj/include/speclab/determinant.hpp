#pragma once

#include <Eigen/Dense>
#include <vector>

#include "speclab/lattice.hpp"

namespace speclab {

struct DeterminantValue {
  Wavenumber k;
  Complex L;
  double log_abs_L;
};

// Support-restricted kernel A(i,j) = V(n_i) * r_kernel(n_i, n_j); the
// perturbation determinant is det(I + A).
Eigen::MatrixXcd kernel_matrix(const Potential& V, Wavenumber k);

// det(I + A) by dense LU with partial pivoting.
Complex perturbation_det(const Potential& V, Wavenumber k);
DeterminantValue determinant_value(const Potential& V, Wavenumber k);

// Fourth-order regularized determinant
// det4(I+A) = det(I+A) * exp(-Tr A + Tr A^2 / 2 - Tr A^3 / 3).
Complex det4(const Potential& V, Wavenumber k);

// Partial sum of sum_{n>=1} (-1)^{n+1}/n Tr(A^n); requires the trace norm of
// A to be < 1 (the numerical convergence condition).
Complex log_expansion(const Potential& V, Wavenumber k, int n_terms);

// Logs continued from the large-Im-k region where all determinants tend to 1.
// Valid for Re k != 0 (the vertical tracking path must avoid the imaginary
// axis, where the determinant zeros sit).
Complex tracked_log_det(const Potential& V, Wavenumber k);
Complex tracked_log_det4(const Potential& V, Wavenumber k);

struct SymmetrizedIdentity {
  Complex lhs;         // log L(V,k) + log L(-V,k), branch-tracked
  Complex trace_term;  // Tr A^2
  Complex det4_terms;  // log det4(V,k) + log det4(-V,k), branch-tracked
  double residual() const { return std::abs(lhs - (-trace_term + det4_terms)); }
};

SymmetrizedIdentity symmetrized_identity(const Potential& V, Wavenumber k);

// Perturbation determinant on the imaginary axis, where every kernel entry is
// real: L(i*eps) = det(I + V K_eps) with K_eps(n,m) = e^{-eps|n-m|}/(2 eps).
double det_imag_axis(const Potential& V, double eps);

// All zeros of eps -> L(i*eps) on (0, eps_max], refined by bisection to
// |delta eps| < 1e-12, returned as energies E_j = -eps_j^2 in ascending order.
std::vector<double> line_bound_states(const Potential& V, double eps_max);

}  // namespace speclab
