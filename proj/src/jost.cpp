#include "speclab/jost.hpp"

#include "speclab/quadrature.hpp"

namespace speclab {

JostSolution jost_solve(const Potential& V, Wavenumber k) {
  if (std::abs(k.value) <= kResonanceGuard) throw PreconditionError("jost_solve: k = 0");
  const int n0 = std::max(V.support_max(), 0);
  const int n_min = -1;
  const int len = n0 + 2 - n_min + 1;  // window n_min .. n0 + 2 keeps one free pair

  JostSolution sol;
  sol.k = k;
  sol.n_min = n_min;
  sol.u.resize(len);

  const Complex ik = Complex(0, 1) * k.value;
  auto at = [&](int n) -> Complex& { return sol.u[n - n_min]; };
  at(n0 + 2) = std::exp(ik * static_cast<double>(n0 + 2));
  at(n0 + 1) = std::exp(ik * static_cast<double>(n0 + 1));
  for (int n = n0 + 1; n - 1 >= n_min; --n)
    at(n - 1) = b_coeff(k, V, n) * at(n) - at(n + 1);

  // u_0 = a + b, u_{-1} = a e^{-ik} + b e^{ik}; the 2x2 system has
  // determinant 2i sin k, nonzero off pi*Z.
  k.require_nonresonant("jost_solve (a,b extraction)");
  const Complex ep = std::exp(ik), em = std::exp(-ik);
  const Complex det = ep - em;  // 2i sin k
  sol.a = (ep * at(0) - at(-1)) / det;
  sol.b = (at(-1) - em * at(0)) / det;
  return sol;
}

Complex wronskian(const JostSolution& sol, int n) {
  const Complex un = sol.at(n), um = sol.at(n - 1);
  return un * std::conj(um) - um * std::conj(un);
}

Complex m_function(const Potential& V, Wavenumber k) {
  k.require_nonresonant("m_function");
  const JostSolution sol = jost_solve(V, k);
  const Complex u0 = sol.at(0), u1 = sol.at(1);
  if (std::abs(u0) <= 1e-12 * (std::abs(u1) + std::abs(sol.at(-1))))
    throw SingularSystemError("m_function: u_0 = 0 (pole of the m-function)");
  const Complex s = std::sin(k.value);
  return k.value / s * (u1 / u0) - k.value * std::cos(k.value) / s;
}

double halfline_u0(const Potential& V, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("halfline_u0: eps must be positive");
  // At k = i*eps the recurrence is real: b_n = 2 cosh(eps) + (sinh(eps)/eps) V(n).
  const int n0 = std::max(V.support_max(), 0);
  const double ch2 = 2.0 * std::cosh(eps);
  const double s = sinhc(eps);
  double up1 = std::exp(-eps * (n0 + 2));
  double u = std::exp(-eps * (n0 + 1));
  for (int n = n0 + 1; n >= 1; --n) {
    const double um1 = (ch2 + s * V(n)) * u - up1;
    up1 = u;
    u = um1;
  }
  return u;  // value at index 0
}

double spectral_density(const Potential& V, double E) {
  if (!(E > 0.0)) throw PreconditionError("spectral_density: E must be positive");
  const Wavenumber k(std::sqrt(E), 0.0);
  k.require_nonresonant("spectral_density");
  return m_function(V, k).imag() / kPi;
}

double ac_mass(const Potential& V, double a, double b) {
  if (!(0.0 < a && a < b)) throw PreconditionError("ac_mass: need 0 < a < b");
  for (double m = std::floor(a / kPi); m <= std::ceil(b / kPi); m += 1.0) {
    const double res = m * kPi;
    if (res >= a - kResonanceGuard && res <= b + kResonanceGuard)
      throw PreconditionError("ac_mass: interval touches a multiple of pi");
  }
  auto integrand = [&](double k) {
    return m_function(V, Wavenumber(k, 0.0)).imag() * k;
  };
  AdaptiveOptions opt;
  opt.rel_tol = 1e-11;
  return 2.0 / kPi * integrate_adaptive(integrand, a, b, opt);
}

}  // namespace speclab
