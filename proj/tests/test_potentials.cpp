#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "speclab/potential.hpp"
#include "speclab/quadrature.hpp"
#include "test_support.hpp"

using namespace speclab;
using namespace speclab::testsupport;

TEST_CASE("fourier_hat basic values") {
  CHECK(std::abs(fourier_hat(Potential::zero(), 0.7)) == 0.0);

  const Potential one = Potential::single_site(1, 1.0);
  for (double k : {0.3, 1.1, 2.9}) {
    const Complex expect = std::exp(Complex(0, 2.0 * k));
    CHECK(std::abs(fourier_hat(one, k) - expect) < 1e-15);
  }

  // e^{i pi} + e^{2 i pi} = 0
  const Potential two = Potential::from_pairs({{1, 1.0}, {2, 1.0}});
  CHECK(std::abs(fourier_hat(two, kPi / 2.0)) < 1e-14);
}

TEST_CASE("fourier_hat is pi-periodic in k") {
  for (int i = 0; i < 10; ++i) {
    const Potential V = random_potential(17, i, 15, 2.0);
    const double k = 3.0 * rng::uniform01(18, i);
    CHECK(std::abs(fourier_hat(V, k + kPi) - fourier_hat(V, k)) < 1e-11 * (1.0 + lp_norm(V, 1.0)));
  }
}

TEST_CASE("Parseval over one period against the l2 norm") {
  for (int i = 0; i < 20; ++i) {
    const Potential V = random_potential(23, i, 18, 2.0);
    const double direct = lp_norm(V, 2.0) * lp_norm(V, 2.0);
    const double integral =
        integrate_adaptive([&](double k) { return std::norm(fourier_hat(V, k)); }, 0.0, kPi) /
        kPi;
    if (direct > 0.0) CHECK(std::abs(integral - direct) < 1e-8 * direct);
  }
}

TEST_CASE("lp_norm values and domain") {
  const Potential V = Potential::from_pairs({{1, 3.0}, {2, -4.0}});
  CHECK(lp_norm(V, 1.0) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(lp_norm(V, std::numeric_limits<double>::infinity()) == doctest::Approx(4.0));
  CHECK(lp_norm(Potential::zero(), 3.0) == 0.0);
  CHECK_THROWS_AS(lp_norm(V, 0.5), PreconditionError);
}

TEST_CASE("sample respects the decay envelope and reproduces bitwise") {
  RandomModel m;
  m.kappa = 1.0;
  m.alpha_exp = 1.0;
  m.seed = 7;
  const Potential a = sample(m, 50);
  const Potential b = sample(m, 50);
  for (int n = 1; n <= 50; ++n) {
    CHECK(a(n) == b(n));
    CHECK(std::abs(a(n)) <= m.kappa * std::pow(n, -m.alpha_exp));
  }
}

TEST_CASE("sample draws are counter-based: extending n_max keeps early sites") {
  RandomModel m;
  m.kappa = 1.7;
  m.alpha_exp = 0.4;
  m.seed = 99;
  const Potential small = sample(m, 5);
  const Potential big = sample(m, 40);
  for (int n = 1; n <= 5; ++n) CHECK(small(n) == big(n));
}

TEST_CASE("sample moments of the uniform law") {
  RandomModel m;
  m.kappa = 2.0;
  m.alpha_exp = 0.5;
  m.seed = 12345;
  const int trials = 10000;
  double mean = 0.0, sq = 0.0;
  for (int r = 0; r < trials; ++r) {
    const double v = sample_realization(m, 1, r)(1);
    mean += v;
    sq += v * v;
  }
  mean /= trials;
  sq /= trials;
  const double var = sq - mean * mean;
  const double target_var = m.kappa * m.kappa / 3.0;
  // mean of V(1) within 3 sigma of 0; sigma = kappa/sqrt(3)/sqrt(N)
  CHECK(std::abs(mean) < 3.0 * m.kappa / std::sqrt(3.0) / std::sqrt(double(trials)));
  CHECK(std::abs(var - target_var) < 0.05 * target_var);
}

TEST_CASE("truncate") {
  const Potential V = Potential::from_pairs({{1, 1.0}, {2, 2.0}, {3, 3.0}});
  CHECK(truncate(V, 0).is_zero());
  const Potential full = truncate(V, V.support_max());
  for (int n = 1; n <= 3; ++n) CHECK(full(n) == V(n));
  const Potential cut = truncate(V, 2);
  CHECK(cut(1) == 1.0);
  CHECK(cut(2) == 2.0);
  CHECK(cut(3) == 0.0);
  CHECK_THROWS_AS(truncate(V, -1), PreconditionError);
}

TEST_CASE("construction invariants") {
  CHECK_THROWS_AS(Potential(0, Eigen::VectorXd::Ones(2)), PreconditionError);
  Eigen::VectorXd bad(2);
  bad << 1.0, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Potential(1, bad), PreconditionError);
  RandomModel m;
  m.kappa = -1.0;
  CHECK_THROWS_AS(sample(m, 3), PreconditionError);
}

TEST_CASE("support skips explicit zeros") {
  Eigen::VectorXd vals(5);
  vals << 0.0, 1.0, 0.0, -2.0, 0.0;
  const Potential V(3, vals);
  CHECK(V.support_min() == 4);
  CHECK(V.support_max() == 6);
  CHECK(V.support() == std::vector<int>{4, 6});
}

TEST_CASE("potential file round trip and malformed input") {
  const Potential V = Potential::from_pairs({{1, -0.5}, {4, 1.25}});
  const std::string path = "test_potential_roundtrip.pot";
  save_potential_file(V, path);
  const Potential W = load_potential_file(path);
  for (int n = 1; n <= 4; ++n) CHECK(W(n) == V(n));
  std::remove(path.c_str());

  auto write_and_try = [](const std::string& text) {
    const std::string p = "test_potential_bad.pot";
    std::ofstream(p) << text;
    std::string message;
    try {
      load_potential_file(p);
    } catch (const ParseError& e) {
      message = e.what();
    }
    std::remove(p.c_str());
    return message;
  };
  CHECK(write_and_try("2 1.0\n1 2.0\n").find(":2:") != std::string::npos);
  CHECK(write_and_try("1 x\n").find(":1:") != std::string::npos);
  CHECK(write_and_try("0 1.0\n").find("index") != std::string::npos);
  CHECK(write_and_try("# comment only\n3 0.5  # trailing comment\n") == "");
}
