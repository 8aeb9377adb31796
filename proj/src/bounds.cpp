#include "speclab/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "speclab/determinant.hpp"
#include "speclab/jost.hpp"
#include "speclab/quadrature.hpp"

namespace speclab {

Potential attractive_part(const Potential& V) {
  if (V.values().size() == 0) return V;
  Eigen::VectorXd vals = V.values().cwiseMin(0.0);
  return Potential(V.first_index(), std::move(vals));
}

BirmanSchwingerOperator bs_build(const Potential& V, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("bs_build: eps must be positive");
  BirmanSchwingerOperator X;
  X.eps = eps;
  X.sites = V.support();
  const int n = static_cast<int>(X.sites.size());
  X.W.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v = V(X.sites[i]);
    if (v > 0.0)
      throw PreconditionError("bs_build: V must be <= 0 on its support (split V first)");
    X.W[i] = std::sqrt(-v);
  }
  X.entries.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      X.entries(i, j) =
          X.W[i] * std::exp(-eps * std::abs(X.sites[i] - X.sites[j])) / (2.0 * eps) * X.W[j];
  return X;
}

Eigen::VectorXd bs_eigenvalues(const BirmanSchwingerOperator& X) {
  if (X.entries.rows() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(X.entries, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

std::vector<double> bs_crossings(const Potential& V, double eps_max, int grid) {
  const Potential Vm = attractive_part(V);
  if (Vm.support().empty() || eps_max <= 0.0) return {};
  const int rank = static_cast<int>(Vm.support().size());
  auto branch = [&](double eps) { return bs_eigenvalues(bs_build(Vm, eps)); };

  std::vector<double> roots;
  Eigen::VectorXd prev = branch(eps_max / grid);
  double e_prev = eps_max / grid;
  for (int i = 2; i <= grid; ++i) {
    const double e = eps_max * i / grid;
    const Eigen::VectorXd cur = branch(e);
    for (int j = 0; j < rank; ++j) {
      const double fp = prev[j] - 1.0, fc = cur[j] - 1.0;
      if (fp == 0.0) {
        roots.push_back(e_prev);
      } else if ((fp < 0.0) != (fc < 0.0) && fc != 0.0) {
        double a = e_prev, b = e, fa = fp;
        while (b - a > 1e-12) {
          const double m = 0.5 * (a + b);
          const double fm = branch(m)[j] - 1.0;
          if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
          } else {
            b = m;
          }
        }
        roots.push_back(0.5 * (a + b));
      }
    }
    prev = cur;
    e_prev = e;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

PartialSumPair monotonicity_check(const Potential& V, double eps, double tau, int n) {
  if (!(eps > 0.0 && tau > 0.0 && n >= 1))
    throw PreconditionError("monotonicity_check: need eps, tau > 0 and n >= 1");
  const Potential Vm = attractive_part(V);
  PartialSumPair out;
  if (Vm.support().empty()) return out;
  const Eigen::VectorXd s_shift = bs_eigenvalues(bs_build(Vm, eps + tau));
  const Eigen::VectorXd s_base = bs_eigenvalues(bs_build(Vm, eps));
  const int m = std::min<int>(n, static_cast<int>(s_base.size()));
  out.lhs = s_shift.head(m).sum();
  out.rhs = s_base.head(m).sum();
  return out;
}

SqrtSumBound lieb_thirring_sqrt(const Potential& V) {
  SqrtSumBound out;
  const double l1 = lp_norm(V, 1.0);
  out.half_l1 = 0.5 * l1;
  for (double E : line_bound_states(V, l1)) out.sum_sqrt_E += std::sqrt(-E);
  return out;
}

double cp_constant(double p) {
  if (!(p > 0.5)) throw PreconditionError("cp_constant: requires p > 1/2");
  // gamma = t^2 removes the gamma^{p-3/2} endpoint singularity for p >= 1 and
  // weakens it below; panels keep doubling until the estimates settle.
  AdaptiveOptions opt;
  opt.order = 40;
  opt.rel_tol = 1e-12;
  opt.max_doublings = 22;
  const double num = std::sqrt(2.0) *
                     integrate_adaptive(
                         [&](double t) {
                           return (1.0 - t * t / 4.0) * std::pow(t, 2.0 * p - 2.0) * 2.0;
                         },
                         0.0, 2.0, opt);
  const double den = integrate_adaptive(
      [&](double t) {
        return std::sqrt(1.0 - t * t) * std::pow(t, 2.0 * p - 2.0) * 2.0;
      },
      0.0, 1.0, opt);
  return num / den;
}

PowerSumBound lieb_thirring_p(const Potential& V, double p) {
  if (!(p > 0.5)) throw PreconditionError("lieb_thirring_p: requires p > 1/2");
  if (!(lp_norm(V, std::numeric_limits<double>::infinity()) < 2.0))
    throw PreconditionError("lieb_thirring_p: requires sup |V| < 2");
  PowerSumBound out;
  for (double E : line_bound_states(V, lp_norm(V, 1.0))) out.sum_Ep += std::pow(-E, p);
  double s = 0.0;
  for (int n : V.support()) s += std::pow(std::abs(V(n)), p + 0.5);
  out.bound = cp_constant(p) * s;
  return out;
}

RieszMeansPair shifted_riesz_means(const Potential& V, double gamma) {
  if (!(gamma > 0.0)) throw PreconditionError("shifted_riesz_means: gamma > 0 required");
  if (!(lp_norm(V, std::numeric_limits<double>::infinity()) < 2.0))
    throw PreconditionError("shifted_riesz_means: requires sup |V| < 2");
  RieszMeansPair out;
  for (double E : line_bound_states(V, lp_norm(V, 1.0)))
    out.lhs += std::sqrt(std::max(0.0, -E - gamma));
  double s = 0.0;
  for (int n : V.support()) s += std::max(0.0, std::abs(V(n)) - gamma / 4.0);
  out.rhs = std::sqrt(2.0) * s;
  return out;
}

std::vector<double> halfline_eigenvalues(const Potential& V, double eps_max) {
  if (V.support().empty() || eps_max <= 0.0) return {};
  const int grid = 10000;
  std::vector<double> eps_roots;
  double e_prev = eps_max / grid;
  double f_prev = halfline_u0(V, e_prev);
  for (int i = 2; i <= grid; ++i) {
    const double e = eps_max * i / grid;
    const double f = halfline_u0(V, e);
    if (f_prev == 0.0) {
      eps_roots.push_back(e_prev);
    } else if ((f_prev < 0.0) != (f < 0.0) && f != 0.0) {
      double a = e_prev, b = e, fa = f_prev;
      while (b - a > 1e-12) {
        const double m = 0.5 * (a + b);
        const double fm = halfline_u0(V, m);
        if ((fa < 0.0) == (fm < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      eps_roots.push_back(0.5 * (a + b));
    }
    e_prev = e;
    f_prev = f;
  }
  std::vector<double> energies;
  for (auto it = eps_roots.rbegin(); it != eps_roots.rend(); ++it)
    energies.push_back(-*it * *it);
  return energies;
}

}  // namespace speclab
