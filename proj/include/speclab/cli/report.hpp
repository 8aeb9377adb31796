#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "speclab/cli/config.hpp"

namespace speclab::cli {

// CSV writer with locale-independent, reproducible number formatting.
class CsvWriter {
public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  CsvWriter& cell(double v);
  CsvWriter& cell(long long v);
  CsvWriter& cell(int v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(const std::string& v);
  CsvWriter& blank();
  void end_row();

private:
  std::ofstream out_;
  std::string path_;
  bool row_open_ = false;
  void sep();
};

std::string format_double(double v);

// Minimal self-contained SVG plotting.
struct SvgSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
};

void write_line_plot(const std::string& path, const std::vector<SvgSeries>& series,
                     const std::string& x_label, const std::string& y_label,
                     const std::string& title);

struct SvgBand {
  double lo = 0.0;
  double hi = 0.0;
  std::string color;
};

void write_band_diagram(const std::string& path, const std::vector<SvgBand>& bands,
                        double x_min, double x_max, const std::string& x_label,
                        const std::string& title);

}  // namespace speclab::cli
