#include "speclab/lattice.hpp"

#include <Eigen/LU>

#include "speclab/quadrature.hpp"

namespace speclab {

Complex b_coeff(Wavenumber k, const Potential& V, int n) {
  return 2.0 * std::cos(k.value) + sinc_k(k.value) * V(n);
}

Complex free_resolvent_entry(Wavenumber k, int n, int m) {
  k.require_nonresonant("free_resolvent_entry");
  const Complex ik = Complex(0, 1) * k.value;
  return -std::exp(ik * static_cast<double>(std::abs(n - m))) /
         (2.0 * Complex(0, 1) * std::sin(k.value));
}

Complex r_kernel_entry(Wavenumber k, int n, int m) {
  if (std::abs(k.value) <= kResonanceGuard)
    throw PreconditionError("r_kernel_entry: k = 0");
  const Complex ik = Complex(0, 1) * k.value;
  return -std::exp(ik * static_cast<double>(std::abs(n - m))) / (2.0 * ik);
}

Eigen::VectorXcd apply_jacobi(Wavenumber k, const Potential& V, int first,
                              const Eigen::VectorXcd& u) {
  if (u.size() < 3) throw PreconditionError("apply_jacobi: window shorter than 3");
  Eigen::VectorXcd out(u.size() - 2);
  for (int i = 1; i + 1 < u.size(); ++i)
    out[i - 1] = -u[i + 1] + b_coeff(k, V, first + i) * u[i] - u[i - 1];
  return out;
}

Eigen::VectorXcd solve_halfline_system(Wavenumber k, const Potential& V, int n_trunc,
                                       const Eigen::VectorXcd& rhs) {
  if (!(k.value.imag() > 0.0))
    throw PreconditionError("solve_halfline: outgoing closure requires Im k > 0");
  if (n_trunc < 2 || n_trunc <= V.support_max())
    throw PreconditionError("solve_halfline: n_trunc must exceed the support of V");
  if (rhs.size() != n_trunc || rhs[n_trunc - 1] != Complex(0.0))
    throw PreconditionError("solve_halfline: rhs must vanish on the closure row");

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n_trunc, n_trunc);
  for (int n = 1; n <= n_trunc; ++n) {
    M(n - 1, n - 1) = b_coeff(k, V, n);
    if (n > 1) M(n - 1, n - 2) = -1.0;
    if (n < n_trunc) M(n - 1, n) = -1.0;
  }
  // Closure: the n_trunc-th equation eliminated via u_{n+1} = e^{ik} u_n,
  // exact beyond the support.
  M(n_trunc - 1, n_trunc - 1) -= std::exp(Complex(0, 1) * k.value);

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
  Eigen::VectorXcd x = lu.solve(rhs);
  const double scale = M.cwiseAbs().maxCoeff() * x.norm() + rhs.norm();
  if (!x.allFinite() || (M * x - rhs).norm() > 1e-10 * scale)
    throw SingularSystemError("solve_halfline: system singular (k^2 at an eigenvalue)");
  return x;
}

Complex solve_halfline(Wavenumber k, const Potential& V, int n_trunc) {
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n_trunc);
  rhs[0] = 1.0;
  return solve_halfline_system(k, V, n_trunc, rhs)[0];
}

Complex continuum_interpolate(Complex u0, Complex u1, Wavenumber k, double x) {
  k.require_nonresonant("continuum_interpolate");
  const Complex s = std::sin(k.value);
  return (std::sin(k.value * x) * u1 - std::sin(k.value * (x - 1.0)) * u0) / s;
}

double cell_constant(Wavenumber k) {
  k.require_nonresonant("cell_constant");
  const Complex kv = k.value;
  auto f1 = [&](double x) { return std::sin(kv * x); };
  auto f2 = [&](double x) { return std::sin(kv * (x - 1.0)); };
  // Real Gram matrix of the pair over real combination angles.
  const double g11 =
      integrate_adaptive([&](double x) { return std::norm(f1(x)); }, 0.0, 1.0);
  const double g22 =
      integrate_adaptive([&](double x) { return std::norm(f2(x)); }, 0.0, 1.0);
  const double g12 = integrate_adaptive(
      [&](double x) { return (f1(x) * std::conj(f2(x))).real(); }, 0.0, 1.0);
  const double tr = g11 + g22;
  const double disc = std::sqrt(std::max(0.0, (g11 - g22) * (g11 - g22) + 4.0 * g12 * g12));
  const double lam_min = 0.5 * (tr - disc);
  return std::sqrt(std::max(0.0, lam_min));
}

}  // namespace speclab
