#include "speclab/trace_entropy.hpp"

#include <cmath>
#include <sstream>

#include "speclab/determinant.hpp"
#include "speclab/jost.hpp"
#include "speclab/quadrature.hpp"

namespace speclab {

WeightPoly::WeightPoly(double a, double b) : alpha(a), beta(b) {
  if (!(0.0 < a && a < b)) throw PreconditionError("WeightPoly: need 0 < alpha < beta");
  for (double end : {a, b})
    if (dist_to_pi_lattice(Complex(end, 0.0)) <= kResonanceGuard)
      throw PreconditionError("WeightPoly: endpoints must avoid multiples of pi");
}

namespace {

double log_ratio_at(const Potential& V, double k) {
  const Complex M = m_function(V, Wavenumber(k, 0.0));
  if (!(M.imag() > 0.0)) {
    std::ostringstream msg;
    msg << "z_functional: Im M <= 0 at node k = " << k;
    throw SingularSystemError(msg.str());
  }
  return std::log(k / (4.0 * M.imag()));
}

}  // namespace

double z_functional(const Potential& V, const WeightPoly& w, int n_quad) {
  if (n_quad < 2) throw PreconditionError("z_functional: n_quad >= 2");
  return integrate_panels([&](double k) { return log_ratio_at(V, k) * w(k); }, w.alpha,
                          w.beta, n_quad, 1);
}

double z_functional_adaptive(const Potential& V, const WeightPoly& w) {
  double prev = z_functional(V, w, 40);
  for (int order = 80; order <= 1280; order *= 2) {
    const double cur = z_functional(V, w, order);
    if (std::abs(cur - prev) < 1e-9) return cur;
    prev = cur;
  }
  return prev;
}

TraceInequalityReport trace_inequality_report(const Potential& V, const WeightPoly& w) {
  TraceInequalityReport out;
  out.z = z_functional_adaptive(V, w);
  AdaptiveOptions opt;
  opt.order = 40;
  opt.rel_tol = 1e-11;
  out.fourier_term = integrate_adaptive(
      [&](double k) { return std::norm(fourier_hat(V, k)) / (k * k) * w(k); }, w.alpha,
      w.beta, opt);
  if (V.support().empty()) return out;
  const Potential Vm = negated(V);
  out.det4_residual =
      2.0 *
      integrate_adaptive(
          [&](double k) {
            const Wavenumber kk(k, 0.0);
            // Only real parts enter; log|det4| needs no branch tracking.
            return (std::log(std::abs(det4(V, kk))) + std::log(std::abs(det4(Vm, kk)))) *
                   w(k);
          },
          w.alpha, w.beta, opt);
  return out;
}

std::vector<NodeRow> node_dump(const Potential& V, const WeightPoly& w, int n_nodes) {
  std::vector<NodeRow> rows;
  rows.reserve(n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    const double k = w.alpha + (w.beta - w.alpha) * (i + 0.5) / n_nodes;
    NodeRow r;
    r.k = k;
    r.im_m = m_function(V, Wavenumber(k, 0.0)).imag();
    r.log_ratio = std::log(k / (4.0 * r.im_m));
    r.p_k = w(k);
    rows.push_back(r);
  }
  return rows;
}

SemicontinuityProbe semicontinuity_probe(const Potential& V, const WeightPoly& w,
                                         const std::vector<int>& cuts) {
  if (cuts.empty()) throw PreconditionError("semicontinuity_probe: no cuts given");
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1])
      throw PreconditionError("semicontinuity_probe: cuts must be ascending");
  if (cuts.back() < V.support_max())
    throw PreconditionError("semicontinuity_probe: final cut must cover the support");

  SemicontinuityProbe probe;
  probe.z_full = z_functional_adaptive(V, w);
  for (int cut : cuts)
    probe.rows.push_back({cut, z_functional_adaptive(truncate(V, cut), w)});

  const std::size_t first_large = cuts.size() / 2;
  probe.min_large_cut_z = probe.rows[first_large].z;
  for (std::size_t i = first_large; i < probe.rows.size(); ++i)
    probe.min_large_cut_z = std::min(probe.min_large_cut_z, probe.rows[i].z);
  probe.liminf_ok = probe.z_full <= probe.min_large_cut_z + 1e-6;
  return probe;
}

ContourCheck det4_contour_check(const Potential& V, const WeightPoly& w, int arc_order) {
  ContourCheck out;
  AdaptiveOptions opt;
  opt.order = 40;
  opt.rel_tol = 1e-10;
  out.segment = integrate_adaptive(
      [&](double k) { return tracked_log_det4(V, Wavenumber(k, 0.0)) * w(k); }, w.alpha,
      w.beta, opt);

  const double c = 0.5 * (w.alpha + w.beta), r = 0.5 * (w.beta - w.alpha);
  const GaussRule& rule = gauss_legendre(arc_order);
  Complex arc = 0.0;
  // Arc from alpha (phi = pi) to beta (phi = 0); dk = i r e^{i phi} dphi.
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double phi = 0.5 * kPi * (1.0 + rule.nodes[i]);
    const Complex k = c + r * std::exp(Complex(0, 1) * phi);
    const Complex pk = std::pow(k - w.alpha, 5) * std::pow(Complex(w.beta) - k, 5);
    const Complex dk = Complex(0, 1) * r * std::exp(Complex(0, 1) * phi);
    arc += rule.weights[i] * tracked_log_det4(V, Wavenumber(k)) * pk * dk;
  }
  out.arc = -0.5 * kPi * arc;
  return out;
}

}  // namespace speclab
