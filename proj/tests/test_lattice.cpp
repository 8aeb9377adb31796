#include <doctest.h>

#include "speclab/lattice.hpp"
#include "speclab/jost.hpp"
#include "speclab/quadrature.hpp"
#include "test_support.hpp"

using namespace speclab;
using namespace speclab::testsupport;

TEST_CASE("b_coeff values") {
  CHECK(std::abs(b_coeff(Wavenumber(kPi / 3.0, 0.0), Potential::zero(), 1) - 1.0) < 1e-14);

  // sin k / k -> 1 at k -> 0
  const Potential one = Potential::single_site(1, 1.0);
  CHECK(std::abs(b_coeff(Wavenumber(1e-7, 0.0), one, 1) - 3.0) < 1e-12);
  CHECK(std::abs(b_coeff(Wavenumber(0.0, 0.0), one, 1) - 3.0) == 0.0);

  // k = i, V = -1: 2 cosh(1) - sinh(1), cross-checked by complex evaluation
  const Potential neg = Potential::single_site(1, -1.0);
  const Complex direct = b_coeff(Wavenumber(0.0, 1.0), neg, 1);
  const Complex via_cos = 2.0 * std::cos(Complex(0, 1)) - std::sin(Complex(0, 1)) / Complex(0, 1);
  CHECK(std::abs(direct - via_cos) < 1e-14);
  CHECK(direct.real() == doctest::Approx(2.0 * std::cosh(1.0) - std::sinh(1.0)).epsilon(1e-14));
  CHECK(std::abs(direct.imag()) < 1e-15);
}

TEST_CASE("free resolvent: applying the tridiagonal matrix gives the coordinate vector") {
  const Potential V;
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t st = rng::derive(31, trial);
    const Wavenumber k(0.2 + 2.8 * rng::uniform01(st, 1), 0.1 + 1.9 * rng::uniform01(st, 2));
    const int N = 41, mid = 20;
    Eigen::VectorXcd col(N);
    for (int i = 0; i < N; ++i) col[i] = free_resolvent_entry(k, i, mid);
    const Eigen::VectorXcd r = apply_jacobi(k, V, 0, col);
    for (int i = 0; i < r.size(); ++i) {
      const Complex expect = (i + 1 == mid) ? 1.0 : 0.0;
      CHECK(std::abs(r[i] - expect) < 1e-9);
    }
  }
}

TEST_CASE("free resolvent diagonal value, symmetry, decay") {
  CHECK(std::abs(free_resolvent_entry(Wavenumber(kPi / 2.0, 0.0), 3, 3) - Complex(0, 0.5)) <
        1e-14);

  const Wavenumber k(1.2, 0.6);
  for (int n = -4; n <= 4; ++n)
    for (int m = -4; m <= 4; ++m)
      CHECK(std::abs(free_resolvent_entry(k, n, m) - free_resolvent_entry(k, m, n)) == 0.0);

  const double g0 = std::abs(free_resolvent_entry(k, 0, 0));
  for (int d = 1; d <= 20; ++d)
    CHECK(std::abs(free_resolvent_entry(k, 0, d)) ==
          doctest::Approx(g0 * std::exp(-0.6 * d)).epsilon(1e-12));

  CHECK_THROWS_AS(free_resolvent_entry(Wavenumber(kPi, 0.0), 0, 0), PreconditionError);
}

TEST_CASE("r_kernel entries") {
  // k = i*eps: the positive Birman-Schwinger kernel
  const double eps = 0.37;
  for (int d = 0; d <= 5; ++d) {
    const Complex v = r_kernel_entry(Wavenumber(0.0, eps), 0, d);
    CHECK(std::abs(v.imag()) < 1e-15);
    CHECK(v.real() == doctest::Approx(std::exp(-eps * d) / (2.0 * eps)).epsilon(1e-14));
  }

  // diagonal at k = 1 + i
  const Complex diag = r_kernel_entry(Wavenumber(1.0, 1.0), 2, 2);
  CHECK(std::abs(diag - Complex(0.25, 0.25)) < 1e-15);

  CHECK_THROWS_AS(r_kernel_entry(Wavenumber(0.0, 0.0), 0, 0), PreconditionError);
}

TEST_CASE("r_kernel row sums satisfy the resolvent norm bound with C = 2") {
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t st = rng::derive(37, trial);
    const Wavenumber k(0.2 + 2.8 * rng::uniform01(st, 1), 0.05 + 1.95 * rng::uniform01(st, 2));
    double sum = 0.0;
    for (int m = -400; m <= 400; ++m) sum += std::abs(r_kernel_entry(k, 0, m));
    const double bound =
        2.0 * (1.0 + std::abs(k.value.imag())) / (std::abs(k.value) * std::abs(k.value.imag()));
    CHECK(sum <= bound);
  }
}

TEST_CASE("apply_jacobi annihilates plane waves and maps coordinates to stencils") {
  const Potential V;
  const Wavenumber k(0.9, 0.0);
  const int N = 12;
  Eigen::VectorXcd up(N), um(N), e(N);
  for (int i = 0; i < N; ++i) {
    up[i] = std::exp(Complex(0, k.value.real() * i));
    um[i] = std::exp(Complex(0, -k.value.real() * i));
    e[i] = (i == 6) ? 1.0 : 0.0;
  }
  for (const auto& u : {up, um}) {
    const Eigen::VectorXcd r = apply_jacobi(k, V, 0, u);
    for (int i = 0; i < r.size(); ++i) CHECK(std::abs(r[i]) < 1e-13);
  }
  const Eigen::VectorXcd r = apply_jacobi(k, V, 0, e);
  for (int i = 0; i < r.size(); ++i) {
    const int n = i + 1;
    Complex expect = 0.0;
    if (n == 6) expect = b_coeff(k, V, 6);
    if (n == 5 || n == 7) expect = -1.0;
    CHECK(std::abs(r[i] - expect) < 1e-14);
  }
  CHECK_THROWS_AS(apply_jacobi(k, V, 0, Eigen::VectorXcd::Ones(2)), PreconditionError);
}

TEST_CASE("solve_halfline: free solution, Jost agreement, residual") {
  const Wavenumber k(1.0, 0.5);
  CHECK(std::abs(solve_halfline(k, Potential::zero(), 30) - std::exp(Complex(0, 1) * k.value)) <
        1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    const Potential V = random_potential(41, trial, 12, 1.5);
    const std::uint64_t st = rng::derive(43, trial);
    const Wavenumber kk(0.3 + 2.0 * rng::uniform01(st, 1), 0.2 + 1.0 * rng::uniform01(st, 2));
    const JostSolution sol = jost_solve(V, kk);
    const Complex ratio = sol.at(1) / sol.at(0);
    const Complex x1 = solve_halfline(kk, V, V.support_max() + 15);
    CHECK(std::abs(ratio - x1) <= 1e-10 * std::abs(x1));
  }
}

TEST_CASE("solve_halfline rejects bad inputs and flags singular systems") {
  const Potential V = Potential::single_site(1, -1.0);
  CHECK_THROWS_AS(solve_halfline(Wavenumber(1.0, -0.1), V, 20), PreconditionError);
  CHECK_THROWS_AS(solve_halfline(Wavenumber(1.0, 0.5), V, 1), PreconditionError);

  // u_0(i) = 0 for v = -e/sinh(1): E = -1 is a half-line eigenvalue, so the
  // closed system at k = i is singular.
  const Potential Vres = Potential::single_site(1, -std::exp(1.0) / std::sinh(1.0));
  CHECK_THROWS_AS(solve_halfline(Wavenumber(0.0, 1.0), Vres, 40), SingularSystemError);
}

TEST_CASE("half-line a priori norm bound with the explicit free constant") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t st = rng::derive(47, trial);
    const Wavenumber k(0.2 + 2.8 * rng::uniform01(st, 1), 0.1 + 1.9 * rng::uniform01(st, 2));
    const Potential V = random_potential(48, trial, 10, 2.0);
    const int N = 40;
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(N);
    for (int i = 0; i < 10; ++i)
      rhs[i] = Complex(rng::uniform_sym(st, 50 + i), rng::uniform_sym(st, 80 + i));
    const Eigen::VectorXcd x = solve_halfline_system(k, V, N, rhs);
    const double im_k2 = std::abs((k.value * k.value).imag());
    const double ck = std::abs(k.value) / cell_constant(k);
    CHECK(x.norm() <= ck / im_k2 * rhs.norm());
  }
}

TEST_CASE("continuum interpolation") {
  const Wavenumber k(1.3, 0.0);
  const Complex u0(0.4, -0.2), u1(-1.1, 0.7);
  CHECK(std::abs(continuum_interpolate(u0, u1, k, 0.0) - u0) < 1e-14);
  CHECK(std::abs(continuum_interpolate(u0, u1, k, 1.0) - u1) < 1e-13);

  // plane wave: endpoints 1, e^{ik} reproduce e^{ikx} across the cell
  const Complex eik = std::exp(Complex(0, 1) * k.value);
  for (double x : {0.25, 0.5, 0.75}) {
    const Complex expect = std::exp(Complex(0, 1) * k.value * x);
    CHECK(std::abs(continuum_interpolate(1.0, eik, k, x) - expect) < 1e-13);
  }

  // -psi'' = k^2 psi by second differences
  const double h = 1e-4;
  for (double x : {0.3, 0.6}) {
    const Complex pm = continuum_interpolate(u0, u1, k, x - h);
    const Complex p0 = continuum_interpolate(u0, u1, k, x);
    const Complex pp = continuum_interpolate(u0, u1, k, x + h);
    const Complex second = (pp - 2.0 * p0 + pm) / (h * h);
    CHECK(std::abs(-second - k.value * k.value * p0) < 1e-6);
  }

  CHECK_THROWS_AS(continuum_interpolate(u0, u1, Wavenumber(kPi, 0.0), 0.5), PreconditionError);
}

TEST_CASE("cell_constant: Gram eigenvalue against brute-force angle scan") {
  // closed form at k = pi/2: both Gram diagonals are 1/2, off-diagonal 1/pi
  const double c_half = cell_constant(Wavenumber(kPi / 2.0, 0.0));
  CHECK(c_half * c_half == doctest::Approx(0.5 - 1.0 / kPi).epsilon(1e-10));

  for (double kr : {0.4, 1.0, 1.9, 2.7}) {
    const Wavenumber k(kr, 0.0);
    const double c = cell_constant(k);
    CHECK(c > 0.0);
    double brute = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10000; ++i) {
      const double th = 2.0 * kPi * i / 10000.0;
      const double val = integrate_panels(
          [&](double x) {
            return std::norm(std::sin(kr * x) * std::sin(th) -
                             std::sin(kr * (x - 1.0)) * std::cos(th));
          },
          0.0, 1.0, 24, 1);
      brute = std::min(brute, val);
    }
    CHECK(std::abs(c * c - brute) < 1e-6);
  }

  CHECK_THROWS_AS(cell_constant(Wavenumber(kPi, 0.0)), PreconditionError);
}
