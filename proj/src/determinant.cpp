#include "speclab/determinant.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>

namespace speclab {

namespace {

struct PointValues {
  Complex L_V, L_mV, L4_V, L4_mV;
  Complex trace_sq;
};

PointValues evaluate_point(const Potential& V, const std::vector<int>& sites, Complex k) {
  const int n = static_cast<int>(sites.size());
  PointValues out{1.0, 1.0, 1.0, 1.0, 0.0};
  if (n == 0) return out;

  Eigen::MatrixXcd A(n, n);
  const Complex inv2ik = -1.0 / (2.0 * Complex(0, 1) * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A(i, j) = V(sites[i]) * inv2ik *
                std::exp(Complex(0, 1) * k * static_cast<double>(std::abs(sites[i] - sites[j])));

  const Eigen::MatrixXcd Id = Eigen::MatrixXcd::Identity(n, n);
  out.L_V = Eigen::PartialPivLU<Eigen::MatrixXcd>(Id + A).determinant();
  out.L_mV = Eigen::PartialPivLU<Eigen::MatrixXcd>(Id - A).determinant();

  const Complex t1 = A.trace();
  const Complex t2 = A.cwiseProduct(A.transpose()).sum();
  const Complex t3 = (A * A).cwiseProduct(A.transpose()).sum();
  out.trace_sq = t2;
  out.L4_V = out.L_V * std::exp(-t1 + t2 / 2.0 - t3 / 3.0);
  out.L4_mV = out.L_mV * std::exp(t1 + t2 / 2.0 + t3 / 3.0);
  return out;
}

// Continue the four complex logarithms from k0 = Re k + i*H (H large, all
// determinants near 1) vertically down to the target, halving the step until
// each argument increment is below pi/2.
struct TrackedLogs {
  Complex logL_V, logL_mV, logL4_V, logL4_mV;
  Complex trace_sq;
};

TrackedLogs tracked_logs(const Potential& V, Wavenumber k) {
  const std::vector<int> sites = V.support();
  const double re = k.value.real();
  const double im_target = k.value.imag();
  if (sites.empty()) return {0.0, 0.0, 0.0, 0.0, 0.0};
  if (std::abs(re) <= kResonanceGuard && im_target <= 0.0)
    throw PreconditionError("tracked log: path would cross the imaginary axis zeros");

  double l1 = 0.0;
  for (int s : sites) l1 += std::abs(V(s));
  const double im_start = std::max({4.0, 2.0 * l1, im_target});

  PointValues cur = evaluate_point(V, sites, Complex(re, im_start));
  TrackedLogs acc;
  acc.logL_V = std::log(cur.L_V);
  acc.logL_mV = std::log(cur.L_mV);
  acc.logL4_V = std::log(cur.L4_V);
  acc.logL4_mV = std::log(cur.L4_mV);

  double y = im_start;
  double step = std::max((im_start - im_target) / 16.0, 0.0);
  const double min_step = 1e-12 * std::max(1.0, im_start);
  while (y > im_target) {
    const double y_next = std::max(im_target, y - step);
    const PointValues nxt = evaluate_point(V, sites, Complex(re, y_next));
    const Complex ratios[4] = {nxt.L_V / cur.L_V, nxt.L_mV / cur.L_mV,
                               nxt.L4_V / cur.L4_V, nxt.L4_mV / cur.L4_mV};
    bool ok = true;
    for (const Complex& r : ratios) {
      if (!std::isfinite(std::abs(r)) || std::abs(r) == 0.0)
        throw BranchTrackingError("tracked log: |L| crossed zero along the path");
      if (std::abs(std::arg(r)) >= kPi / 2.0) ok = false;
    }
    if (!ok) {
      step /= 2.0;
      if (step < min_step)
        throw BranchTrackingError("tracked log: step underflow (zero near the path)");
      continue;
    }
    acc.logL_V += std::log(ratios[0]);
    acc.logL_mV += std::log(ratios[1]);
    acc.logL4_V += std::log(ratios[2]);
    acc.logL4_mV += std::log(ratios[3]);
    cur = nxt;
    y = y_next;
  }
  acc.trace_sq = cur.trace_sq;
  return acc;
}

}  // namespace

Eigen::MatrixXcd kernel_matrix(const Potential& V, Wavenumber k) {
  k.require_nonresonant("kernel_matrix");
  const std::vector<int> sites = V.support();
  const int n = static_cast<int>(sites.size());
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A(i, j) = V(sites[i]) * r_kernel_entry(k, sites[i], sites[j]);
  return A;
}

Complex perturbation_det(const Potential& V, Wavenumber k) {
  const Eigen::MatrixXcd A = kernel_matrix(V, k);
  if (A.rows() == 0) return 1.0;
  const Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(A.rows(), A.cols()) + A;
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(M).determinant();
}

DeterminantValue determinant_value(const Potential& V, Wavenumber k) {
  const Complex L = perturbation_det(V, k);
  return {k, L, std::log(std::abs(L))};
}

Complex det4(const Potential& V, Wavenumber k) {
  const Eigen::MatrixXcd A = kernel_matrix(V, k);
  if (A.rows() == 0) return 1.0;
  const Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(A.rows(), A.cols()) + A;
  const Complex det = Eigen::PartialPivLU<Eigen::MatrixXcd>(M).determinant();
  const Complex t1 = A.trace();
  const Complex t2 = A.cwiseProduct(A.transpose()).sum();
  const Complex t3 = (A * A).cwiseProduct(A.transpose()).sum();
  return det * std::exp(-t1 + t2 / 2.0 - t3 / 3.0);
}

Complex log_expansion(const Potential& V, Wavenumber k, int n_terms) {
  if (n_terms < 1) throw PreconditionError("log_expansion: n_terms >= 1");
  const Eigen::MatrixXcd A = kernel_matrix(V, k);
  if (A.rows() == 0) return 0.0;
  const double trace_norm =
      Eigen::JacobiSVD<Eigen::MatrixXcd>(A).singularValues().sum();
  if (!(trace_norm < 1.0))
    throw PreconditionError("log_expansion: trace norm of the kernel is >= 1");
  Complex sum = 0.0;
  Eigen::MatrixXcd B = A;
  double prev_mag = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= n_terms; ++n) {
    const Complex term = ((n % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(n) * B.trace();
    const double mag = std::abs(term);
    if (mag > prev_mag + 1e-18)
      throw PreconditionError("log_expansion: term growth, series diverges");
    prev_mag = mag;
    sum += term;
    if (n < n_terms) B = B * A;
  }
  return sum;
}

Complex tracked_log_det(const Potential& V, Wavenumber k) {
  return tracked_logs(V, k).logL_V;
}

Complex tracked_log_det4(const Potential& V, Wavenumber k) {
  return tracked_logs(V, k).logL4_V;
}

SymmetrizedIdentity symmetrized_identity(const Potential& V, Wavenumber k) {
  const TrackedLogs logs = tracked_logs(V, k);
  SymmetrizedIdentity out;
  out.lhs = logs.logL_V + logs.logL_mV;
  out.trace_term = logs.trace_sq;
  out.det4_terms = logs.logL4_V + logs.logL4_mV;
  return out;
}

double det_imag_axis(const Potential& V, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("det_imag_axis: eps must be positive");
  const std::vector<int> sites = V.support();
  const int n = static_cast<int>(sites.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M(i, j) += V(sites[i]) * std::exp(-eps * std::abs(sites[i] - sites[j])) / (2.0 * eps);
  return Eigen::PartialPivLU<Eigen::MatrixXd>(M).determinant();
}

std::vector<double> line_bound_states(const Potential& V, double eps_max) {
  if (V.support().empty() || eps_max <= 0.0) return {};
  const int grid = 10000;
  const double lo = eps_max / grid;

  const double at_max = det_imag_axis(V, eps_max);
  if (at_max <= 0.0)
    throw PreconditionError("line_bound_states: eps_max too small (zero at or beyond boundary)");

  std::vector<double> eps_roots;
  double e_prev = lo;
  double f_prev = det_imag_axis(V, e_prev);
  for (int i = 2; i <= grid; ++i) {
    const double e = eps_max * i / grid;
    const double f = det_imag_axis(V, e);
    if (f_prev == 0.0) {
      eps_roots.push_back(e_prev);
    } else if ((f_prev < 0.0) != (f < 0.0) && f != 0.0) {
      double a = e_prev, b = e, fa = f_prev;
      while (b - a > 1e-12) {
        const double m = 0.5 * (a + b);
        const double fm = det_imag_axis(V, m);
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
  energies.reserve(eps_roots.size());
  for (auto it = eps_roots.rbegin(); it != eps_roots.rend(); ++it)
    energies.push_back(-*it * *it);
  return energies;
}

}  // namespace speclab
