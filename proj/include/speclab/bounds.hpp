#pragma once

#include <Eigen/Dense>
#include <vector>

#include "speclab/potential.hpp"

namespace speclab {

// Birman-Schwinger operator at E = -eps^2 for an attractive potential
// V = -W^2: entries W(n) e^{-eps|n-m|}/(2 eps) W(m), symmetric psd.
struct BirmanSchwingerOperator {
  double eps = 0.0;
  std::vector<int> sites;   // support of V, increasing
  Eigen::VectorXd W;        // sqrt(|V|) on the support
  Eigen::MatrixXd entries;

  double trace() const { return entries.trace(); }
};

// Attractive part min(V, 0); the eigenvalue bounds are monotone in V, so the
// Birman-Schwinger side always works with it.
Potential attractive_part(const Potential& V);

BirmanSchwingerOperator bs_build(const Potential& V, double eps);

// Symmetric eigenvalues, descending.
Eigen::VectorXd bs_eigenvalues(const BirmanSchwingerOperator& X);

// All eps in (0, eps_max] where 1 is an eigenvalue of X_eps, found per sorted
// eigenvalue branch by grid scan plus bisection; ascending.
std::vector<double> bs_crossings(const Potential& V, double eps_max, int grid = 2000);

struct PartialSumPair {
  double lhs = 0.0;  // sum of top n eigenvalues at eps + tau
  double rhs = 0.0;  // sum of top n eigenvalues at eps
};

PartialSumPair monotonicity_check(const Potential& V, double eps, double tau, int n);

struct SqrtSumBound {
  double sum_sqrt_E = 0.0;
  double half_l1 = 0.0;
};

SqrtSumBound lieb_thirring_sqrt(const Potential& V);

// C_p from the two endpoint-singular integrals, by quadrature with the
// substitution gamma = t^2; p > 1/2 required.
double cp_constant(double p);

struct PowerSumBound {
  double sum_Ep = 0.0;
  double bound = 0.0;
};

PowerSumBound lieb_thirring_p(const Potential& V, double p);

struct RieszMeansPair {
  double lhs = 0.0;  // sum of (|E_j| - gamma)_+^{1/2}
  double rhs = 0.0;  // sqrt(2) * sum of (|V(n)| - gamma/4)_+
};

RieszMeansPair shifted_riesz_means(const Potential& V, double gamma);

// Zeros of eps -> u_0(i*eps): half-line Dirichlet eigenvalues, ascending E.
std::vector<double> halfline_eigenvalues(const Potential& V, double eps_max);

}  // namespace speclab
