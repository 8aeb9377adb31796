#include <CLI11.hpp>
#include <iostream>

#include "speclab/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"speclab: numerical laboratory for delta-comb Schrodinger operators"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  int threads = 0;
  bool seed_set = false, threads_set = false;

  const std::vector<std::string> names = {"spectrum",      "bound-states", "lt-check",
                                          "trace-ineq",    "phase-diagram", "prufer",
                                          "band-edges",    "det-compare"};
  for (const std::string& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "configuration file")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "override the config seed")
        ->each([&](const std::string&) { seed_set = true; });
    sub->add_option("--threads", threads, "worker pool size")
        ->each([&](const std::string&) { threads_set = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  speclab::cli::Options opt;
  opt.out_dir = out_dir;
  if (seed_set) opt.seed_override = seed;
  if (threads_set) opt.threads_override = threads;

  speclab::cli::Config cfg;
  try {
    cfg = speclab::cli::Config::parse_file(config_path);
  } catch (const speclab::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const speclab::cli::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  }

  return speclab::cli::run_command(app.get_subcommands().front()->get_name(), cfg, opt);
}
