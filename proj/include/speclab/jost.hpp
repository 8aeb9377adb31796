#pragma once

#include <Eigen/Dense>

#include "speclab/lattice.hpp"

namespace speclab {

// Solution of the three-term recurrence normalized to e^{ikn} beyond the
// support, with the plane-wave amplitudes a, b on the free side (n <= 0).
struct JostSolution {
  Wavenumber k;
  int n_min = -1;       // window is n_min .. n_min + u.size() - 1
  Eigen::VectorXcd u;
  Complex a;
  Complex b;

  int n_sup() const { return n_min + static_cast<int>(u.size()) - 1; }
  Complex at(int n) const {
    const int i = n - n_min;
    if (i < 0 || i >= u.size()) throw PreconditionError("JostSolution: index outside window");
    return u[i];
  }
};

// Backward sweep from the normalization side; a, b extracted from the values
// at indices 0 and -1 where V vanishes by convention.
JostSolution jost_solve(const Potential& V, Wavenumber k);

// u_n conj(u_{n-1}) - u_{n-1} conj(u_n); n-independent for real k.
Complex wronskian(const JostSolution& sol, int n);

// Weyl m-function M(k) = m(k^2) built from the Jost ratio u_1/u_0.
Complex m_function(const Potential& V, Wavenumber k);

// Jost value u_0 at k = i*eps (real by construction); its zeros in eps mark
// the half-line Dirichlet eigenvalues E = -eps^2.
double halfline_u0(const Potential& V, double eps);

// f(E) = Im M(sqrt(E)) / pi, the a.c. spectral density at E > 0.
double spectral_density(const Potential& V, double E);

// (2/pi) * integral of Im M(k) k dk over [a, b]: the a.c. mass of (a^2, b^2).
double ac_mass(const Potential& V, double a, double b);

}  // namespace speclab
