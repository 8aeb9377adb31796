#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "speclab/common.hpp"

namespace speclab {

// Delta-coupling sequence V(n) on the positive integers, stored densely over
// [first_index, last_index] with explicit zeros allowed.  V(n) = 0 for n <= 0
// and outside the stored window.
class Potential {
public:
  Potential() = default;
  Potential(int first_index, Eigen::VectorXd values);

  static Potential zero() { return Potential(); }
  static Potential from_pairs(const std::vector<std::pair<int, double>>& pairs);
  static Potential single_site(int n, double v);

  double operator()(int n) const {
    const int i = n - first_index_;
    if (i < 0 || i >= values_.size()) return 0.0;
    return values_[i];
  }

  bool is_zero() const { return support_max() == 0; }
  int first_index() const { return first_index_; }
  int last_index() const { return first_index_ + static_cast<int>(values_.size()) - 1; }
  const Eigen::VectorXd& values() const { return values_; }

  // First/last index with a nonzero coupling; 0 when the potential vanishes.
  int support_min() const;
  int support_max() const;
  // Nonzero sites in increasing order.
  std::vector<int> support() const;

private:
  int first_index_ = 1;
  Eigen::VectorXd values_;
};

// kappa * omega_n * n^(-alpha) with omega_n i.i.d. uniform on [-1, 1],
// drawn from a counter-based stream keyed by (seed, site).
struct RandomModel {
  double kappa = 1.0;
  double alpha_exp = 0.5;
  double coupling_a = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

Complex fourier_hat(const Potential& V, double k);
double lp_norm(const Potential& V, double p);  // p >= 1 or infinity
Potential truncate(const Potential& V, int n_cut);
Potential negated(const Potential& V);
Potential sample(const RandomModel& model, int n_max);
// Sample one realization of an ensemble; realization 0 is `sample`.
Potential sample_realization(const RandomModel& model, int n_max, std::uint64_t realization);

// Plain-text format: one "n value" pair per line, '#' comments, indices
// strictly increasing.
Potential load_potential_file(const std::string& path);
void save_potential_file(const Potential& V, const std::string& path);

}  // namespace speclab
