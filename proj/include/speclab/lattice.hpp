#pragma once

#include <Eigen/Dense>

#include "speclab/common.hpp"
#include "speclab/potential.hpp"

namespace speclab {

// Complex lattice momentum; E = k^2 is the spectral parameter.
struct Wavenumber {
  Complex value;

  Wavenumber() = default;
  Wavenumber(Complex k) : value(k) {}  // NOLINT: implicit by design
  Wavenumber(double re, double im) : value(re, im) {}

  bool upper_half() const { return value.imag() > 0.0; }
  bool nonresonant() const { return dist_to_pi_lattice(value) > kResonanceGuard; }
  bool real_regular() const { return value.imag() == 0.0 && nonresonant(); }

  void require_nonresonant(const char* who) const {
    if (!nonresonant())
      throw PreconditionError(std::string(who) + ": k within resonance guard of pi*Z");
  }
};

// Diagonal entry of the k-dependent Jacobi matrix: 2 cos k + (sin k / k) V(n).
Complex b_coeff(Wavenumber k, const Potential& V, int n);

// Kernel of the inverse free Jacobi matrix, -e^{ik|n-m|} / (2i sin k).
// The sign is fixed so that applying the free matrix to a kernel column gives
// exactly the unit coordinate sequence (see tests for the dense identity).
Complex free_resolvent_entry(Wavenumber k, int n, int m);

// (sin k / k) * free resolvent entry = -e^{ik|n-m|} / (2ik); at k = i*eps this
// is the positive kernel e^{-eps|n-m|} / (2 eps).
Complex r_kernel_entry(Wavenumber k, int n, int m);

// Apply the tridiagonal action u_n -> -u_{n+1} + b_n u_n - u_{n-1} on the
// interior of a contiguous window starting at index `first`.
Eigen::VectorXcd apply_jacobi(Wavenumber k, const Potential& V, int first,
                              const Eigen::VectorXcd& u);

// Solve the half-line system J~_k x = delta_1 on 1..n_trunc with the outgoing
// closure u_{n+1} = e^{ik} u_n (exact beyond the support) and return x_1.
Complex solve_halfline(Wavenumber k, const Potential& V, int n_trunc);

// Full solve with an arbitrary right-hand side on 1..n_trunc (rhs must vanish
// on sites where the closure row is rewritten); used by norm-bound tests.
Eigen::VectorXcd solve_halfline_system(Wavenumber k, const Potential& V, int n_trunc,
                                       const Eigen::VectorXcd& rhs);

// Value on the unit cell [n, n+1] of the continuum solution with endpoint
// values u0 = psi(n), u1 = psi(n+1); x in [0, 1] is the cell coordinate.
Complex continuum_interpolate(Complex u0, Complex u1, Wavenumber k, double x);

// c(k) > 0: sqrt of the smallest eigenvalue of the 2x2 Gram matrix of
// {sin(kx), sin(k(x-1))} on [0,1]; the explicit half-line norm constant is
// |k| / c(k) for V = 0.
double cell_constant(Wavenumber k);

}  // namespace speclab
