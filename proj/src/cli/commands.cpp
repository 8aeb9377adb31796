#include "speclab/cli/commands.hpp"

#include <filesystem>
#include <iostream>

#include "speclab/bounds.hpp"
#include "speclab/cli/report.hpp"
#include "speclab/determinant.hpp"
#include "speclab/jost.hpp"
#include "speclab/parallel.hpp"
#include "speclab/random_spectra.hpp"
#include "speclab/rng.hpp"
#include "speclab/trace_entropy.hpp"

namespace speclab::cli {

namespace {

std::string out_path(const Options& opt, const std::string& name) {
  const std::filesystem::path p(name);
  if (p.is_absolute()) return name;
  return (std::filesystem::path(opt.out_dir) / p).string();
}

void ensure_out_dir(const Options& opt) {
  std::error_code ec;
  std::filesystem::create_directories(opt.out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + opt.out_dir);
}

Potential load_potential(const Config& cfg, const std::string& section) {
  const std::string spec = cfg.get_string(section, "potential");
  if (spec == "zero") return Potential::zero();
  try {
    return load_potential_file(spec);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

int threads_of(const Config& cfg, const std::string& section, const Options& opt) {
  const int t = opt.threads_override
                    ? *opt.threads_override
                    : static_cast<int>(cfg.get_int(section, "threads", 1));
  if (t < 1) throw ConfigError("threads must be >= 1");
  return t;
}

// Uniform [-limit, limit] couplings on a random subset layout, reproducible
// per (seed, instance).
Potential random_test_potential(std::uint64_t seed, std::uint64_t instance, int support_max,
                                double limit, bool attractive) {
  const std::uint64_t stream = rng::derive(seed, instance);
  const int len = 1 + static_cast<int>(rng::uniform01(stream, 1) * support_max);
  Eigen::VectorXd vals(len);
  for (int i = 0; i < len; ++i) {
    double v = limit * rng::uniform_sym(stream, 100 + i);
    if (attractive) v = -std::abs(v);
    vals[i] = v;
  }
  return Potential(1, std::move(vals));
}

}  // namespace

void cmd_spectrum(const Config& cfg, const Options& opt) {
  const std::string sec = "spectrum";
  const Potential V = load_potential(cfg, sec);
  const double k_min = cfg.get_double(sec, "k_min");
  const double k_max = cfg.get_double(sec, "k_max");
  const int n = static_cast<int>(cfg.get_int(sec, "n_points"));
  const std::string csv_name = cfg.get_string(sec, "out_csv", "spectrum.csv");
  const std::string svg_name = cfg.get_string(sec, "out_svg", "spectrum.svg");
  const int threads = threads_of(cfg, sec, opt);
  cfg.reject_unknown_keys(sec);
  if (!(0.0 < k_min && k_min < k_max) || n < 2)
    throw ConfigError("spectrum: need 0 < k_min < k_max and n_points >= 2");

  std::vector<double> ks(n);
  for (int i = 0; i < n; ++i) ks[i] = k_min + (k_max - k_min) * i / (n - 1);
  for (double k : ks)
    Wavenumber(k, 0.0).require_nonresonant("spectrum grid");

  struct Row {
    double k, E, re_m, im_m, f, abs_a, abs_b;
  };
  std::vector<Row> rows(n);
  parallel_for(n, threads, [&](int i) {
    const Wavenumber k(ks[i], 0.0);
    const JostSolution sol = jost_solve(V, k);
    const Complex M = m_function(V, k);
    rows[i] = {ks[i], ks[i] * ks[i], M.real(), M.imag(), M.imag() / kPi, std::abs(sol.a),
               std::abs(sol.b)};
  });

  ensure_out_dir(opt);
  CsvWriter csv(out_path(opt, csv_name), {"k", "E", "Re_M", "Im_M", "f", "abs_a", "abs_b"});
  for (const Row& r : rows) {
    csv.cell(r.k).cell(r.E).cell(r.re_m).cell(r.im_m).cell(r.f).cell(r.abs_a).cell(r.abs_b);
    csv.end_row();
  }
  SvgSeries s;
  for (const Row& r : rows) {
    s.x.push_back(r.E);
    s.y.push_back(r.f);
  }
  write_line_plot(out_path(opt, svg_name), {s}, "E", "f(E)", "a.c. spectral density");
  std::cout << "spectrum: wrote " << n << " rows\n";
}

void cmd_bound_states(const Config& cfg, const Options& opt) {
  const std::string sec = "bound-states";
  const Potential V = load_potential(cfg, sec);
  const double l1 = lp_norm(V, 1.0);
  const double eps_max = cfg.get_double(sec, "eps_max", l1);
  const std::vector<double> ps = cfg.get_double_list(sec, "p_values", {1.0, 1.5});
  const std::string eig_name = cfg.get_string(sec, "out_eigen", "eigenvalues.csv");
  const std::string lt_name = cfg.get_string(sec, "out_lt", "lt_bounds.csv");
  cfg.reject_unknown_keys(sec);

  const std::vector<double> line = line_bound_states(V, eps_max);
  const std::vector<double> half = halfline_eigenvalues(V, eps_max);

  ensure_out_dir(opt);
  CsvWriter eig(out_path(opt, eig_name), {"kind", "j", "E", "eps"});
  for (std::size_t j = 0; j < line.size(); ++j) {
    eig.cell(std::string("line")).cell(static_cast<long long>(j + 1)).cell(line[j]);
    eig.cell(std::sqrt(-line[j]));
    eig.end_row();
  }
  for (std::size_t j = 0; j < half.size(); ++j) {
    eig.cell(std::string("halfline")).cell(static_cast<long long>(j + 1)).cell(half[j]);
    eig.cell(std::sqrt(-half[j]));
    eig.end_row();
  }

  CsvWriter lt(out_path(opt, lt_name), {"p", "sum_Ep", "bound", "margin", "status"});
  const SqrtSumBound sq = lieb_thirring_sqrt(V);
  lt.cell(0.5).cell(sq.sum_sqrt_E).cell(sq.half_l1).cell(sq.half_l1 - sq.sum_sqrt_E);
  lt.cell(std::string("ok"));
  lt.end_row();
  for (double p : ps) {
    try {
      const PowerSumBound b = lieb_thirring_p(V, p);
      lt.cell(p).cell(b.sum_Ep).cell(b.bound).cell(b.bound - b.sum_Ep).cell(std::string("ok"));
    } catch (const PreconditionError& e) {
      lt.cell(p).blank().blank().blank().cell(std::string(e.what()));
    }
    lt.end_row();
  }
  std::cout << "bound-states: " << line.size() << " line, " << half.size()
            << " half-line eigenvalues\n";
}

void cmd_lt_check(const Config& cfg, const Options& opt) {
  const std::string sec = "lt-check";
  const int n_instances = static_cast<int>(cfg.get_int(sec, "n_instances", 100));
  const int support_max = static_cast<int>(cfg.get_int(sec, "support_max", 30));
  const double v_max = cfg.get_double(sec, "v_max", 1.9);
  const std::uint64_t seed = opt.seed_override ? *opt.seed_override : cfg.get_seed(sec, 1);
  const std::vector<double> ps = cfg.get_double_list(sec, "p_values", {1.0, 1.5});
  const std::string csv_name = cfg.get_string(sec, "out_csv", "lt_check.csv");
  cfg.reject_unknown_keys(sec);
  if (n_instances < 1 || support_max < 1 || !(v_max > 0.0))
    throw ConfigError("lt-check: bad ensemble parameters");

  ensure_out_dir(opt);
  CsvWriter csv(out_path(opt, csv_name),
                {"instance", "p", "sum_Ep", "bound", "margin", "status"});
  int violations = 0;
  for (int i = 0; i < n_instances; ++i) {
    const Potential V = random_test_potential(seed, i, support_max, v_max, true);
    const SqrtSumBound sq = lieb_thirring_sqrt(V);
    csv.cell(static_cast<long long>(i)).cell(0.5).cell(sq.sum_sqrt_E).cell(sq.half_l1);
    csv.cell(sq.half_l1 - sq.sum_sqrt_E).cell(std::string("ok"));
    csv.end_row();
    if (sq.sum_sqrt_E > sq.half_l1 + 1e-9) ++violations;
    for (double p : ps) {
      try {
        const PowerSumBound b = lieb_thirring_p(V, p);
        csv.cell(static_cast<long long>(i)).cell(p).cell(b.sum_Ep).cell(b.bound);
        csv.cell(b.bound - b.sum_Ep).cell(std::string("ok"));
        if (b.sum_Ep > b.bound + 1e-9) ++violations;
      } catch (const PreconditionError& e) {
        csv.cell(static_cast<long long>(i)).cell(p).blank().blank().blank();
        csv.cell(std::string(e.what()));
      }
      csv.end_row();
    }
  }
  std::cout << "lt-check: " << n_instances << " instances, " << violations << " violations\n";
}

void cmd_trace_ineq(const Config& cfg, const Options& opt) {
  const std::string sec = "trace-ineq";
  const double alpha = cfg.get_double(sec, "alpha", 1.0);
  const double beta = cfg.get_double(sec, "beta", 2.0);
  const WeightPoly w(alpha, beta);
  const std::string sum_name = cfg.get_string(sec, "out_summary", "trace_summary.csv");
  const std::string nodes_name = cfg.get_string(sec, "out_nodes", "trace_nodes.csv");
  const std::string trunc_name = cfg.get_string(sec, "out_truncation", "trace_truncation.csv");
  const int n_nodes = static_cast<int>(cfg.get_int(sec, "n_nodes", 64));
  ensure_out_dir(opt);

  if (cfg.has(sec, "n_instances")) {
    const int n_instances = static_cast<int>(cfg.get_int(sec, "n_instances"));
    const int support_max = static_cast<int>(cfg.get_int(sec, "support_max", 20));
    const double v_max = cfg.get_double(sec, "v_max", 1.0);
    const std::uint64_t seed = opt.seed_override ? *opt.seed_override : cfg.get_seed(sec, 1);
    cfg.reject_unknown_keys(sec);
    CsvWriter csv(out_path(opt, sum_name),
                  {"instance", "z", "fourier_term", "det4_residual", "ratio"});
    double emp_c = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_instances; ++i) {
      const Potential V = random_test_potential(seed, i, support_max, v_max, false);
      const TraceInequalityReport r = trace_inequality_report(V, w);
      const double l44 = std::pow(lp_norm(V, 4.0), 4.0);
      const double ratio = r.slack() / l44;
      emp_c = std::max(emp_c, ratio);
      csv.cell(static_cast<long long>(i)).cell(r.z).cell(r.fourier_term);
      csv.cell(r.det4_residual).cell(ratio);
      csv.end_row();
    }
    csv.cell(std::string("empirical_C")).blank().blank().blank().cell(emp_c);
    csv.end_row();
    std::cout << "trace-ineq: empirical C = " << format_double(emp_c) << "\n";
    return;
  }

  const Potential V = load_potential(cfg, sec);
  std::vector<long long> default_cuts;
  const int n0 = std::max(V.support_max(), 1);
  for (int q = 1; q <= 4; ++q) default_cuts.push_back(std::max(1, n0 * q / 4));
  std::vector<long long> cut_cfg = cfg.get_int_list(sec, "cuts", default_cuts);
  cfg.reject_unknown_keys(sec);
  std::vector<int> cuts;
  for (long long c : cut_cfg)
    if (cuts.empty() || c > cuts.back()) cuts.push_back(static_cast<int>(c));

  const TraceInequalityReport r = trace_inequality_report(V, w);
  const double l44 = std::pow(lp_norm(V, 4.0), 4.0);
  CsvWriter csv(out_path(opt, sum_name),
                {"instance", "z", "fourier_term", "det4_residual", "ratio"});
  csv.cell(0LL).cell(r.z).cell(r.fourier_term).cell(r.det4_residual);
  if (l44 > 0.0)
    csv.cell(r.slack() / l44);
  else
    csv.blank();
  csv.end_row();

  CsvWriter nodes(out_path(opt, nodes_name), {"k", "ImM", "log_ratio", "p_k"});
  for (const NodeRow& row : node_dump(V, w, n_nodes)) {
    nodes.cell(row.k).cell(row.im_m).cell(row.log_ratio).cell(row.p_k);
    nodes.end_row();
  }

  const SemicontinuityProbe probe = semicontinuity_probe(V, w, cuts);
  CsvWriter trunc(out_path(opt, trunc_name), {"n_cut", "z"});
  for (const TruncationRow& row : probe.rows) {
    trunc.cell(static_cast<long long>(row.n_cut)).cell(row.z);
    trunc.end_row();
  }
  std::cout << "trace-ineq: z = " << format_double(r.z)
            << ", liminf_ok = " << (probe.liminf_ok ? "yes" : "no") << "\n";
}

namespace {

std::string class_color(SpectralClass c) {
  switch (c) {
    case SpectralClass::pp: return "#d62728";       // red
    case SpectralClass::sc: return "#2ca02c";       // green
    case SpectralClass::ac: return "#1f77b4";       // blue
    case SpectralClass::boundary: return "#ff7f0e";  // orange
    case SpectralClass::outside: return "#dddddd";
  }
  return "#000000";
}

}  // namespace

void cmd_phase_diagram(const Config& cfg, const Options& opt) {
  const std::string sec = "phase-diagram";
  RandomModel model;
  model.kappa = cfg.get_double(sec, "kappa");
  model.alpha_exp = cfg.get_double(sec, "alpha_exp");
  model.coupling_a = cfg.get_double(sec, "coupling_a", 0.0);
  model.seed = opt.seed_override ? *opt.seed_override : cfg.get_seed(sec, 1);
  model.validate();
  const double lambda_min = cfg.get_double(sec, "lambda_min", 1e-3);
  const double lambda_max = cfg.get_double(sec, "lambda_max");
  const int n = static_cast<int>(cfg.get_int(sec, "n_points", 2000));
  const std::string csv_name = cfg.get_string(sec, "out_csv", "phase_diagram.csv");
  const std::string svg_name = cfg.get_string(sec, "out_svg", "phase_diagram.svg");
  const int threads = threads_of(cfg, sec, opt);
  cfg.reject_unknown_keys(sec);
  if (!(lambda_min < lambda_max) || n < 2)
    throw ConfigError("phase-diagram: need lambda_min < lambda_max, n_points >= 2");

  std::vector<double> lambdas(n);
  for (int i = 0; i < n; ++i)
    lambdas[i] = lambda_min + (lambda_max - lambda_min) * i / (n - 1);
  std::vector<SpectralClass> cls(n);
  std::vector<DispersionPoint> pts(n);
  parallel_for(n, threads, [&](int i) {
    pts[i] = dispersion(lambdas[i], model.coupling_a);
    cls[i] = classify_point(lambdas[i], model.coupling_a, model.kappa, model.alpha_exp);
  });

  ensure_out_dir(opt);
  CsvWriter csv(out_path(opt, csv_name), {"lambda", "gamma", "tilde_k", "p", "class"});
  for (int i = 0; i < n; ++i) {
    csv.cell(lambdas[i]).cell(pts[i].gamma);
    if (pts[i].tilde_k)
      csv.cell(*pts[i].tilde_k);
    else
      csv.blank();
    const DecayExponent de = decay_exponent(lambdas[i], model.coupling_a, model.kappa);
    if (de.p)
      csv.cell(*de.p);
    else
      csv.blank();
    csv.cell(to_string(cls[i]));
    csv.end_row();
  }

  std::vector<SvgBand> bands;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || cls[i] != cls[start]) {
      if (cls[start] != SpectralClass::outside)
        bands.push_back({lambdas[start], lambdas[i - 1], class_color(cls[start])});
      start = i;
    }
  }
  write_band_diagram(out_path(opt, svg_name), bands, lambda_min, lambda_max, "lambda",
                     "spectral type (pp red, sc green, ac blue)");
  std::cout << "phase-diagram: wrote " << n << " rows, " << bands.size() << " segments\n";
}

void cmd_prufer(const Config& cfg, const Options& opt) {
  const std::string sec = "prufer";
  RandomModel model;
  model.kappa = cfg.get_double(sec, "kappa");
  model.alpha_exp = cfg.get_double(sec, "alpha_exp");
  model.coupling_a = cfg.get_double(sec, "coupling_a", 0.0);
  model.seed = opt.seed_override ? *opt.seed_override : cfg.get_seed(sec, 1);
  const double lambda = cfg.get_double(sec, "lambda");
  const int n_steps = static_cast<int>(cfg.get_int(sec, "n_steps", 1000));
  const std::uint64_t realization =
      static_cast<std::uint64_t>(cfg.get_int(sec, "realization", 0));
  const std::string csv_name = cfg.get_string(sec, "out_csv", "prufer.csv");
  cfg.reject_unknown_keys(sec);

  const PruferTrajectory traj = prufer_flow(model, lambda, n_steps, realization);
  ensure_out_dir(opt);
  CsvWriter csv(out_path(opt, csv_name), {"n", "logR2", "theta"});
  for (int i = 0; i < traj.logR2.size(); ++i) {
    csv.cell(static_cast<long long>(i + 1)).cell(traj.logR2[i]).cell(traj.theta[i]);
    csv.end_row();
  }
  std::cout << "prufer: wrote " << traj.logR2.size() << " steps\n";
}

void cmd_band_edges(const Config& cfg, const Options& opt) {
  const std::string sec = "band-edges";
  const double a = cfg.get_double(sec, "coupling_a");
  const double lambda_max = cfg.get_double(sec, "lambda_max");
  const bool with_k = cfg.has(sec, "alpha") || cfg.has(sec, "beta");
  const double alpha = cfg.get_double(sec, "alpha", 0.0);
  const double beta = cfg.get_double(sec, "beta", 0.0);
  const std::string csv_name = cfg.get_string(sec, "out_csv", "bands.csv");
  cfg.reject_unknown_keys(sec);

  const std::vector<Interval> bands = band_edges(a, lambda_max);
  ensure_out_dir(opt);
  CsvWriter csv(out_path(opt, csv_name), {"type", "lo", "hi"});
  for (const Interval& b : bands) {
    csv.cell(std::string("band")).cell(b.lo).cell(b.hi);
    csv.end_row();
  }
  for (std::size_t i = 1; i < bands.size(); ++i) {
    csv.cell(std::string("gap")).cell(bands[i - 1].hi).cell(bands[i].lo);
    csv.end_row();
  }
  if (with_k) {
    for (const Interval& r : k_region(a, alpha, beta, lambda_max)) {
      csv.cell(std::string("k_region")).cell(r.lo).cell(r.hi);
      csv.end_row();
    }
  }
  std::cout << "band-edges: " << bands.size() << " bands\n";
}

void cmd_det_compare(const Config& cfg, const Options& opt) {
  const std::string sec = "det-compare";
  const Potential V = load_potential(cfg, sec);
  const double re_min = cfg.get_double(sec, "k_re_min", 0.2);
  const double re_max = cfg.get_double(sec, "k_re_max", 3.0);
  const double im = cfg.get_double(sec, "k_im", 0.5);
  const int n = static_cast<int>(cfg.get_int(sec, "n_points", 100));
  const std::string csv_name = cfg.get_string(sec, "out_csv", "det_compare.csv");
  const int threads = threads_of(cfg, sec, opt);
  cfg.reject_unknown_keys(sec);
  if (!(re_min < re_max) || n < 2 || !(im > 0.0))
    throw ConfigError("det-compare: need k_re_min < k_re_max, n_points >= 2, k_im > 0");

  struct Row {
    double re_k, im_k;
    Complex a, L;
    double rel_err;
  };
  std::vector<Row> rows(n);
  parallel_for(n, threads, [&](int i) {
    const double re = re_min + (re_max - re_min) * i / (n - 1);
    const Wavenumber k(re, im);
    const Complex a = jost_solve(V, k).a;
    const Complex L = perturbation_det(V, k);
    rows[i] = {re, im, a, L, std::abs(a - L) / std::abs(L)};
  });

  ensure_out_dir(opt);
  CsvWriter csv(out_path(opt, csv_name),
                {"re_k", "im_k", "re_a", "im_a", "re_L", "im_L", "rel_err"});
  for (const Row& r : rows) {
    csv.cell(r.re_k).cell(r.im_k).cell(r.a.real()).cell(r.a.imag());
    csv.cell(r.L.real()).cell(r.L.imag()).cell(r.rel_err);
    csv.end_row();
  }
  std::cout << "det-compare: wrote " << n << " rows\n";
}

int run_command(const std::string& name, const Config& cfg, const Options& opt) {
  try {
    if (name == "spectrum")
      cmd_spectrum(cfg, opt);
    else if (name == "bound-states")
      cmd_bound_states(cfg, opt);
    else if (name == "lt-check")
      cmd_lt_check(cfg, opt);
    else if (name == "trace-ineq")
      cmd_trace_ineq(cfg, opt);
    else if (name == "phase-diagram")
      cmd_phase_diagram(cfg, opt);
    else if (name == "prufer")
      cmd_prufer(cfg, opt);
    else if (name == "band-edges")
      cmd_band_edges(cfg, opt);
    else if (name == "det-compare")
      cmd_det_compare(cfg, opt);
    else {
      std::cerr << "unknown command: " << name << "\n";
      return 2;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const SingularSystemError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const BranchTrackingError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace speclab::cli
