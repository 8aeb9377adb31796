#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "speclab/potential.hpp"
#include "speclab/rng.hpp"

namespace speclab::testsupport {

// Reproducible random finite-support potential: support size 1..support_max,
// couplings uniform in [-limit, limit] (attractive: in [-limit, 0]).
inline Potential random_potential(std::uint64_t seed, std::uint64_t instance, int support_max,
                                  double limit, bool attractive = false) {
  const std::uint64_t st = rng::derive(seed, instance);
  const int len = 1 + static_cast<int>(rng::uniform01(st, 1) * support_max);
  Eigen::VectorXd vals(len);
  for (int i = 0; i < len; ++i) {
    double v = limit * rng::uniform_sym(st, 100 + i);
    if (attractive) v = -std::abs(v);
    vals[i] = v;
  }
  return Potential(1, std::move(vals));
}

inline Potential fixed_support_potential(std::uint64_t seed, std::uint64_t instance,
                                         int support, double limit) {
  const std::uint64_t st = rng::derive(seed, instance);
  Eigen::VectorXd vals(support);
  for (int i = 0; i < support; ++i) vals[i] = limit * rng::uniform_sym(st, 100 + i);
  return Potential(1, std::move(vals));
}

// Real wavenumbers in [lo, hi] staying clear of pi*Z.
inline std::vector<double> regular_k_grid(std::uint64_t seed, int count, double lo, double hi,
                                          double guard = 0.05) {
  std::vector<double> ks;
  std::uint64_t c = 0;
  while (static_cast<int>(ks.size()) < count) {
    const double k = lo + (hi - lo) * rng::uniform01(seed, ++c);
    if (speclab::dist_to_pi_lattice({k, 0.0}) > guard) ks.push_back(k);
  }
  return ks;
}

}  // namespace speclab::testsupport
