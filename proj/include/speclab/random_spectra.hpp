#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "speclab/potential.hpp"

namespace speclab {

// Discriminant of the periodic comb at energy lambda: the trig branch for
// lambda > 0, the hyperbolic branch for lambda < 0, a + 2 at lambda = 0.
double discriminant(double lambda, double a);

// |discriminant| <= 2.
bool in_essential_spectrum(double lambda, double a);

struct DispersionPoint {
  double lambda = 0.0;
  double gamma = 0.0;
  std::optional<double> tilde_k;  // present iff |gamma| <= 2; 2 cos(tilde_k) = gamma
};

DispersionPoint dispersion(double lambda, double a);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Maximal intervals of {|gamma| <= 2} between the spectral bottom and
// lambda_max, by grid scan plus bisection refinement.
std::vector<Interval> band_edges(double a, double lambda_max);

// {lambda in (0, lambda_max] : gamma(lambda) in 2cos((alpha,beta))}.
std::vector<Interval> k_region(double a, double alpha, double beta, double lambda_max);

enum class GammaExclusion { none, zero, sqrt2, edge };

struct DecayExponent {
  std::optional<double> p;  // beta^2 / (8 - 2 gamma^2)
  GammaExclusion reason = GammaExclusion::none;
};

// Power-law exponent of the distinguished solution in the critical random
// model; absent at the excluded discriminant values {0, +-sqrt(2), +-2}.
DecayExponent decay_exponent(double lambda, double a, double kappa);

enum class SpectralClass { pp, sc, ac, outside, boundary };

std::string to_string(SpectralClass c);

SpectralClass classify_point(double lambda, double a, double kappa, double alpha_exp);

struct PruferTrajectory {
  double lambda = 0.0;
  std::uint64_t realization = 0;
  Eigen::VectorXd logR2;  // logR2[i] = log R(i+1)^2, logR2[0] = 0
  Eigen::VectorXd theta;  // theta[i] = theta(i+1); increments in [-pi, pi)
};

// Prufer flow of one disorder realization at energy lambda > 0 strictly
// inside a band.
PruferTrajectory prufer_flow(const RandomModel& model, double lambda, int n_steps,
                             std::uint64_t realization);

struct R4MomentProbe {
  double max_empirical = 0.0;  // max over checkpoints of the trial mean of R^4
  double bound = 0.0;          // deterministic product bound at n_steps
};

R4MomentProbe r4_moment_probe(const RandomModel& model, double lambda, int n_steps,
                              int trials);

// Deterministic product bound for E R(n)^4 alone, and its logarithm (the log
// form stays finite when the partial products diverge at small alpha).
double r4_product_bound(const RandomModel& model, double lambda, int n_steps);
double r4_log_product_bound(const RandomModel& model, double lambda, int n_steps);

// Truncated norm ||u||_L^2 = sum_{n<=[L]} |u(n)|^2 + (L-[L]) |u([L]+1)|^2 of a
// solution sampled on sites 1..size (u[i] = u(i+1)).
double truncated_norm(const Eigen::VectorXd& u, double L);

// Ratio min over initial angles of ||.||_L against the orthogonal direction;
// tends to 0 along L when a subordinate solution exists.  W holds the realized
// coupling sequence on sites 1..W.size().
double subordination_ratio(const Eigen::VectorXd& W, double lambda, double L,
                           double theta_init);

}  // namespace speclab
