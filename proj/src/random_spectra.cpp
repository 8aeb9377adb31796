#include "speclab/random_spectra.hpp"

#include <cmath>

#include "speclab/rng.hpp"

namespace speclab {

double discriminant(double lambda, double a) {
  if (lambda > 0.0) {
    const double x = std::sqrt(lambda);
    return a * sinc_k(x) + 2.0 * std::cos(x);
  }
  if (lambda < 0.0) {
    const double x = std::sqrt(-lambda);
    return a * sinhc(x) + 2.0 * std::cosh(x);
  }
  return a + 2.0;
}

bool in_essential_spectrum(double lambda, double a) {
  return std::abs(discriminant(lambda, a)) <= 2.0;
}

DispersionPoint dispersion(double lambda, double a) {
  DispersionPoint pt;
  pt.lambda = lambda;
  pt.gamma = discriminant(lambda, a);
  if (std::abs(pt.gamma) <= 2.0) pt.tilde_k = std::acos(pt.gamma / 2.0);
  return pt;
}

namespace {

// Refine the boundary of {indicator} between a grid cell's endpoints.
template <typename Pred>
double bisect_boundary(Pred&& inside, double a, double b) {
  const bool ia = inside(a);
  while (b - a > 1e-10) {
    const double m = 0.5 * (a + b);
    if (inside(m) == ia)
      a = m;
    else
      b = m;
  }
  return 0.5 * (a + b);
}

template <typename Pred>
std::vector<Interval> scan_intervals(Pred&& inside, double lo, double hi, int grid) {
  std::vector<Interval> out;
  bool open = false;
  double start = lo;
  bool prev = inside(lo);
  if (prev) {
    open = true;
    start = lo;
  }
  double x_prev = lo;
  for (int i = 1; i <= grid; ++i) {
    const double x = lo + (hi - lo) * i / grid;
    const bool cur = inside(x);
    if (cur != prev) {
      const double edge = bisect_boundary(inside, x_prev, x);
      if (cur) {
        open = true;
        start = edge;
      } else {
        out.push_back({start, edge});
        open = false;
      }
    }
    prev = cur;
    x_prev = x;
  }
  if (open) out.push_back({start, hi});
  return out;
}

}  // namespace

std::vector<Interval> band_edges(double a, double lambda_max) {
  if (!(lambda_max > 0.0)) throw PreconditionError("band_edges: lambda_max > 0 required");
  auto inside = [&](double lam) { return std::abs(discriminant(lam, a)) <= 2.0; };
  // Spectral bottom: 0 for a >= 0; below 0 the discriminant eventually
  // exceeds 2, so double downward until it does.
  double lo = 0.0;
  if (a < 0.0) {
    lo = -1.0;
    while (discriminant(lo, a) <= 2.0 && lo > -1e12) lo *= 2.0;
  }
  return scan_intervals(inside, lo, lambda_max, 10000);
}

std::vector<Interval> k_region(double a, double alpha, double beta, double lambda_max) {
  if (!(0.0 < alpha && alpha < beta))
    throw PreconditionError("k_region: need 0 < alpha < beta");
  const double first_mult = std::ceil(alpha / kPi - kResonanceGuard) * kPi;
  if (first_mult <= beta + kResonanceGuard && first_mult >= alpha - kResonanceGuard)
    throw PreconditionError("k_region: [alpha, beta] must be free of multiples of pi");
  const double ca = 2.0 * std::cos(alpha), cb = 2.0 * std::cos(beta);
  const double s_lo = std::min(ca, cb), s_hi = std::max(ca, cb);
  auto inside = [&](double lam) {
    if (lam <= 0.0) return false;
    const double g = discriminant(lam, a);
    return g > s_lo && g < s_hi;
  };
  const double lo = lambda_max / 1e7;
  return scan_intervals(inside, lo, lambda_max, 10000);
}

DecayExponent decay_exponent(double lambda, double a, double kappa) {
  DecayExponent out;
  const double g = discriminant(lambda, a);
  const double tol = 1e-9;
  if (std::abs(std::abs(g) - 2.0) <= tol || std::abs(g) > 2.0) {
    out.reason = GammaExclusion::edge;
    return out;
  }
  if (std::abs(g) <= tol) {
    out.reason = GammaExclusion::zero;
    return out;
  }
  if (std::abs(std::abs(g) - std::sqrt(2.0)) <= tol) {
    out.reason = GammaExclusion::sqrt2;
    return out;
  }
  double beta_coef;
  if (lambda > 0.0)
    beta_coef = kappa * sinc_k(std::sqrt(lambda));
  else if (lambda < 0.0)
    beta_coef = kappa * sinhc(std::sqrt(-lambda));
  else
    beta_coef = kappa;
  out.p = beta_coef * beta_coef / (8.0 - 2.0 * g * g);
  return out;
}

std::string to_string(SpectralClass c) {
  switch (c) {
    case SpectralClass::pp: return "pp";
    case SpectralClass::sc: return "sc";
    case SpectralClass::ac: return "ac";
    case SpectralClass::outside: return "outside";
    case SpectralClass::boundary: return "boundary";
  }
  return "?";
}

SpectralClass classify_point(double lambda, double a, double kappa, double alpha_exp) {
  const double g = discriminant(lambda, a);
  const double tol = 1e-9;
  if (std::abs(g) > 2.0 + tol) return SpectralClass::outside;
  if (std::abs(std::abs(g) - 2.0) <= tol) return SpectralClass::boundary;
  if (alpha_exp < 0.5) return SpectralClass::pp;
  if (alpha_exp > 0.5) return SpectralClass::ac;
  const DecayExponent de = decay_exponent(lambda, a, kappa);
  if (!de.p) return SpectralClass::boundary;
  if (std::abs(*de.p - 0.5) <= tol) return SpectralClass::boundary;
  return (*de.p > 0.5) ? SpectralClass::pp : SpectralClass::sc;
}

namespace {

struct PruferCoefs {
  double k = 0.0;
  double tilde_k = 0.0;
  double factor = 0.0;  // sin k / (k sin tilde_k)
};

PruferCoefs prufer_coefs(const RandomModel& model, double lambda) {
  if (!(lambda > 0.0)) throw PreconditionError("prufer: lambda > 0 required");
  const double g = discriminant(lambda, model.coupling_a);
  if (!(std::abs(g) < 2.0))
    throw PreconditionError("prufer: |gamma| < 2 strictly required");
  PruferCoefs c;
  c.k = std::sqrt(lambda);
  c.tilde_k = std::acos(g / 2.0);
  c.factor = sinc_k(c.k) / std::sin(c.tilde_k);
  return c;
}

}  // namespace

PruferTrajectory prufer_flow(const RandomModel& model, double lambda, int n_steps,
                             std::uint64_t realization) {
  model.validate();
  if (n_steps < 2) throw PreconditionError("prufer_flow: n_steps >= 2");
  const PruferCoefs c = prufer_coefs(model, lambda);
  const std::uint64_t stream = rng::derive(model.seed, realization);

  PruferTrajectory traj;
  traj.lambda = lambda;
  traj.realization = realization;
  traj.logR2.resize(n_steps);
  traj.theta.resize(n_steps);
  double theta = 0.0;  // Dirichlet initial data u(0) = 0, u(1) = 1
  double logR2 = 0.0;
  traj.logR2[0] = 0.0;
  traj.theta[0] = 0.0;
  for (int n = 1; n < n_steps; ++n) {
    const double v = model.kappa * rng::uniform_sym(stream, static_cast<std::uint64_t>(n)) *
                     std::pow(static_cast<double>(n), -model.alpha_exp);
    const double t = c.factor * v;
    const double phi = theta + c.tilde_k;
    const double sp = std::sin(phi), cp = std::cos(phi);
    logR2 += std::log1p(t * std::sin(2.0 * phi) + t * t * sp * sp);
    // New direction (cos, sin) ~ (cp + t*sp, sp); the lift keeps the
    // increment in [-pi, pi).
    const double principal = std::atan2(sp, cp + t * sp);
    double delta = std::remainder(principal - theta, 2.0 * kPi);
    if (delta >= kPi) delta -= 2.0 * kPi;
    theta += delta;
    traj.logR2[n] = logR2;
    traj.theta[n] = theta;
  }
  return traj;
}

double r4_log_product_bound(const RandomModel& model, double lambda, int n_steps) {
  const PruferCoefs c = prufer_coefs(model, lambda);
  const double bp = model.kappa * std::abs(c.factor);
  double log_bound = 0.0;
  for (int n = 1; n < n_steps; ++n) {
    const double d2 = bp * bp * std::pow(static_cast<double>(n), -2.0 * model.alpha_exp);
    log_bound += std::log1p(3.0 * d2 + d2 * d2);
  }
  return log_bound;
}

double r4_product_bound(const RandomModel& model, double lambda, int n_steps) {
  return std::exp(r4_log_product_bound(model, lambda, n_steps));
}

R4MomentProbe r4_moment_probe(const RandomModel& model, double lambda, int n_steps,
                              int trials) {
  if (trials < 1) throw PreconditionError("r4_moment_probe: trials >= 1");
  const PruferCoefs c = prufer_coefs(model, lambda);

  std::vector<int> checkpoints;
  for (int n = 2; n < n_steps; n *= 2) checkpoints.push_back(n);
  checkpoints.push_back(n_steps);

  std::vector<double> sums(checkpoints.size(), 0.0);
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t stream = rng::derive(model.seed, static_cast<std::uint64_t>(trial));
    double theta = 0.0, logR2 = 0.0;
    std::size_t ci = 0;
    for (int n = 1; n <= n_steps && ci < checkpoints.size(); ++n) {
      if (n == checkpoints[ci]) {
        sums[ci] += std::exp(2.0 * logR2);
        ++ci;
      }
      const double v = model.kappa *
                       rng::uniform_sym(stream, static_cast<std::uint64_t>(n)) *
                       std::pow(static_cast<double>(n), -model.alpha_exp);
      const double t = c.factor * v;
      const double phi = theta + c.tilde_k;
      const double sp = std::sin(phi), cp = std::cos(phi);
      logR2 += std::log1p(t * std::sin(2.0 * phi) + t * t * sp * sp);
      const double principal = std::atan2(sp, cp + t * sp);
      double delta = std::remainder(principal - theta, 2.0 * kPi);
      if (delta >= kPi) delta -= 2.0 * kPi;
      theta += delta;
    }
  }
  R4MomentProbe probe;
  for (std::size_t i = 0; i < checkpoints.size(); ++i)
    probe.max_empirical = std::max(probe.max_empirical, sums[i] / trials);
  probe.bound = r4_product_bound(model, lambda, n_steps);
  return probe;
}

double truncated_norm(const Eigen::VectorXd& u, double L) {
  if (!(L >= 1.0)) throw PreconditionError("truncated_norm: L >= 1 required");
  const int whole = static_cast<int>(std::floor(L));
  if (whole + 1 > u.size())
    throw PreconditionError("truncated_norm: L exceeds available data length");
  double s = u.head(whole).squaredNorm();
  s += (L - whole) * u[whole] * u[whole];
  return std::sqrt(s);
}

double subordination_ratio(const Eigen::VectorXd& W, double lambda, double L,
                           double theta_init) {
  if (!(lambda > 0.0)) throw PreconditionError("subordination_ratio: lambda > 0");
  const int n_sites = static_cast<int>(W.size());
  if (std::floor(L) + 1 > n_sites)
    throw PreconditionError("subordination_ratio: L exceeds data length");
  const double k = std::sqrt(lambda);
  const double two_cos = 2.0 * std::cos(k);
  const double s = sinc_k(k);

  // Two solutions with orthogonal initial data (u(0), u(1)).
  Eigen::VectorXd u1(n_sites), u2(n_sites);
  double a0 = std::cos(theta_init), a1 = std::sin(theta_init);
  double b0 = -std::sin(theta_init), b1 = std::cos(theta_init);
  u1[0] = a1;
  u2[0] = b1;
  double a_prev = a0, a_cur = a1, b_prev = b0, b_cur = b1;
  for (int n = 1; n < n_sites; ++n) {
    const double coef = two_cos + s * W[n - 1];
    const double a_next = coef * a_cur - a_prev;
    const double b_next = coef * b_cur - b_prev;
    a_prev = a_cur;
    a_cur = a_next;
    b_prev = b_cur;
    b_cur = b_next;
    u1[n] = a_cur;
    u2[n] = b_cur;
  }

  const int whole = static_cast<int>(std::floor(L));
  const double frac = L - whole;
  double q11 = 0.0, q12 = 0.0, q22 = 0.0;
  for (int i = 0; i < whole; ++i) {
    q11 += u1[i] * u1[i];
    q12 += u1[i] * u2[i];
    q22 += u2[i] * u2[i];
  }
  q11 += frac * u1[whole] * u1[whole];
  q12 += frac * u1[whole] * u2[whole];
  q22 += frac * u2[whole] * u2[whole];

  const double tr = q11 + q22;
  const double disc = std::sqrt(std::max(0.0, (q11 - q22) * (q11 - q22) + 4.0 * q12 * q12));
  const double lam_min = std::max(0.0, 0.5 * (tr - disc));
  const double lam_max = 0.5 * (tr + disc);
  if (lam_max <= 0.0) return 0.0;
  return std::sqrt(lam_min / lam_max);
}

}  // namespace speclab
