#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "speclab/cli/config.hpp"

namespace speclab::cli {

struct Options {
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  std::optional<int> threads_override;
};

void cmd_spectrum(const Config& cfg, const Options& opt);
void cmd_bound_states(const Config& cfg, const Options& opt);
void cmd_lt_check(const Config& cfg, const Options& opt);
void cmd_trace_ineq(const Config& cfg, const Options& opt);
void cmd_phase_diagram(const Config& cfg, const Options& opt);
void cmd_prufer(const Config& cfg, const Options& opt);
void cmd_band_edges(const Config& cfg, const Options& opt);
void cmd_det_compare(const Config& cfg, const Options& opt);

// 0 on success, 2 config error, 3 numeric precondition violation, 4 I/O.
int run_command(const std::string& name, const Config& cfg, const Options& opt);

}  // namespace speclab::cli
