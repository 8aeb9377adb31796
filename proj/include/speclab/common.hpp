#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace speclab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Guard radius around multiples of pi; every sin-k division is gated on it.
inline constexpr double kResonanceGuard = 1e-9;

// Thrown when an operation's numeric precondition is violated.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a linear system is (numerically) singular, e.g. k^2 hits an eigenvalue.
class SingularSystemError : public std::runtime_error {
public:
  explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input files (message carries file:line).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when analytic continuation of a log-determinant cannot keep a branch
// (|L| crossing zero along the tracking path).
class BranchTrackingError : public std::runtime_error {
public:
  explicit BranchTrackingError(const std::string& what) : std::runtime_error(what) {}
};

// Distance from a complex point to the lattice pi*Z on the real axis.
inline double dist_to_pi_lattice(Complex k) {
  const double m = std::round(k.real() / kPi);
  return std::abs(k - Complex(m * kPi, 0.0));
}

// sin(k)/k extended by continuity; series below |k| < 1e-4 avoids the 0/0 form.
inline Complex sinc_k(Complex k) {
  if (std::abs(k) < 1e-4) {
    const Complex k2 = k * k;
    return 1.0 - k2 / 6.0 + k2 * k2 / 120.0;
  }
  return std::sin(k) / k;
}

inline double sinc_k(double k) {
  if (std::abs(k) < 1e-4) {
    const double k2 = k * k;
    return 1.0 - k2 / 6.0 + k2 * k2 / 120.0;
  }
  return std::sin(k) / k;
}

// sinh(x)/x with the same series guard (used on the imaginary axis, k = i*eps).
inline double sinhc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

}  // namespace speclab
