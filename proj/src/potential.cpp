#include "speclab/potential.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "speclab/rng.hpp"

namespace speclab {

Potential::Potential(int first_index, Eigen::VectorXd values)
    : first_index_(first_index), values_(std::move(values)) {
  if (first_index_ < 1) throw PreconditionError("potential support must lie in {1,2,...}");
  if (!values_.allFinite()) throw PreconditionError("potential values must be finite");
}

Potential Potential::from_pairs(const std::vector<std::pair<int, double>>& pairs) {
  if (pairs.empty()) return Potential();
  int lo = pairs.front().first, hi = pairs.front().first;
  for (const auto& [n, v] : pairs) {
    (void)v;
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  Eigen::VectorXd vals = Eigen::VectorXd::Zero(hi - lo + 1);
  for (const auto& [n, v] : pairs) vals[n - lo] += v;
  return Potential(lo, std::move(vals));
}

Potential Potential::single_site(int n, double v) { return from_pairs({{n, v}}); }

int Potential::support_min() const {
  for (int i = 0; i < values_.size(); ++i)
    if (values_[i] != 0.0) return first_index_ + i;
  return 0;
}

int Potential::support_max() const {
  for (int i = static_cast<int>(values_.size()) - 1; i >= 0; --i)
    if (values_[i] != 0.0) return first_index_ + i;
  return 0;
}

std::vector<int> Potential::support() const {
  std::vector<int> out;
  for (int i = 0; i < values_.size(); ++i)
    if (values_[i] != 0.0) out.push_back(first_index_ + i);
  return out;
}

Complex fourier_hat(const Potential& V, double k) {
  Complex sum = 0.0;
  for (int n = V.first_index(); n <= V.last_index(); ++n) {
    const double v = V(n);
    if (v != 0.0) sum += std::polar(v, 2.0 * k * n);
  }
  return sum;
}

double lp_norm(const Potential& V, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (int n = V.first_index(); n <= V.last_index(); ++n) m = std::max(m, std::abs(V(n)));
    return m;
  }
  if (p < 1.0) throw PreconditionError("lp_norm requires p >= 1");
  double s = 0.0;
  for (int n = V.first_index(); n <= V.last_index(); ++n) s += std::pow(std::abs(V(n)), p);
  return std::pow(s, 1.0 / p);
}

Potential negated(const Potential& V) {
  if (V.values().size() == 0) return V;
  return Potential(V.first_index(), -V.values());
}

Potential truncate(const Potential& V, int n_cut) {
  if (n_cut < 0) throw PreconditionError("truncate requires n_cut >= 0");
  if (n_cut < V.first_index()) return Potential();
  const int hi = std::min(n_cut, V.last_index());
  Eigen::VectorXd vals = V.values().head(hi - V.first_index() + 1);
  return Potential(V.first_index(), std::move(vals));
}

void RandomModel::validate() const {
  if (!(kappa > 0.0)) throw PreconditionError("random model requires kappa > 0");
  if (!(alpha_exp > 0.0)) throw PreconditionError("random model requires alpha_exp > 0");
}

Potential sample_realization(const RandomModel& model, int n_max, std::uint64_t realization) {
  model.validate();
  if (n_max < 1) throw PreconditionError("sample requires n_max >= 1");
  const std::uint64_t stream = rng::derive(model.seed, realization);
  Eigen::VectorXd vals(n_max);
  for (int n = 1; n <= n_max; ++n)
    vals[n - 1] = model.kappa * rng::uniform_sym(stream, static_cast<std::uint64_t>(n)) *
                  std::pow(static_cast<double>(n), -model.alpha_exp);
  return Potential(1, std::move(vals));
}

Potential sample(const RandomModel& model, int n_max) {
  return sample_realization(model, n_max, 0);
}

Potential load_potential_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open potential file: " + path);
  std::vector<std::pair<int, double>> pairs;
  std::string line;
  int line_no = 0;
  int prev_n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long n;
    double v;
    if (!(ls >> n)) {
      std::string rest;
      if (ls.clear(), ls >> rest)
        throw ParseError(path + ":" + std::to_string(line_no) + ": expected 'n value'");
      continue;  // blank or comment-only line
    }
    if (!(ls >> v) || !std::isfinite(v))
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected finite value");
    std::string trailing;
    if (ls >> trailing)
      throw ParseError(path + ":" + std::to_string(line_no) + ": trailing tokens");
    if (n < 1)
      throw ParseError(path + ":" + std::to_string(line_no) + ": index must be >= 1");
    if (n <= prev_n)
      throw ParseError(path + ":" + std::to_string(line_no) +
                               ": indices must be strictly increasing");
    prev_n = static_cast<int>(n);
    pairs.emplace_back(static_cast<int>(n), v);
  }
  return Potential::from_pairs(pairs);
}

void save_potential_file(const Potential& V, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write potential file: " + path);
  out << "# n value\n";
  for (int n = V.first_index(); n <= V.last_index(); ++n) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d %.17g\n", n, V(n));
    out << buf;
  }
}

}  // namespace speclab
