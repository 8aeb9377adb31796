#include "speclab/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace speclab::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), path_(path) {
  if (!out_) throw IoError("cannot write: " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::sep() {
  if (row_open_) out_ << ',';
  row_open_ = true;
}

CsvWriter& CsvWriter::cell(double v) {
  sep();
  out_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::cell(long long v) {
  sep();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::cell(const std::string& v) {
  sep();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::blank() {
  sep();
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_open_ = false;
  if (!out_) throw IoError("write failure: " + path_);
}

namespace {

constexpr double kW = 720.0, kH = 480.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;

struct Range {
  double lo = 0.0, hi = 1.0;
  double map(double v, double out_lo, double out_hi) const {
    const double t = (v - lo) / (hi - lo);
    return out_lo + t * (out_hi - out_lo);
  }
};

Range nice_range(double lo, double hi) {
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

void svg_header(std::ofstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
         "font-family=\"sans-serif\">"
      << title << "</text>\n";
}

void svg_axes(std::ofstream& out, const Range& xr, const Range& yr, const std::string& x_label,
              const std::string& y_label) {
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kW - kLeft - kRight
      << "\" height=\"" << kH - kTop - kBottom
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0;
    const double px = xr.map(fx, kLeft, kW - kRight);
    out << "<line x1=\"" << px << "\" y1=\"" << kH - kBottom << "\" x2=\"" << px << "\" y2=\""
        << kH - kBottom + 5 << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << px << "\" y=\"" << kH - kBottom + 20
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
        << format_double(std::round(fx * 1e4) / 1e4) << "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
    const double py = yr.map(fy, kH - kBottom, kTop);
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py << "\" x2=\"" << kLeft << "\" y2=\""
        << py << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << py + 4
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
        << format_double(std::round(fy * 1e4) / 1e4) << "</text>\n";
  }
  out << "<text x=\"" << (kLeft + kW - kRight) / 2 << "\" y=\"" << kH - 12
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << x_label
      << "</text>\n"
      << "<text x=\"16\" y=\"" << (kTop + kH - kBottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 16 "
      << (kTop + kH - kBottom) / 2 << ")\">" << y_label << "</text>\n";
}

}  // namespace

void write_line_plot(const std::string& path, const std::vector<SvgSeries>& series,
                     const std::string& x_label, const std::string& y_label,
                     const std::string& title) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  bool first = true;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (first) {
        x_lo = x_hi = s.x[i];
        y_lo = y_hi = s.y[i];
        first = false;
      }
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      y_lo = std::min(y_lo, s.y[i]);
      y_hi = std::max(y_hi, s.y[i]);
    }
  const Range xr = nice_range(x_lo, x_hi), yr = nice_range(y_lo, y_hi);
  svg_header(out, title);
  svg_axes(out, xr, yr, x_label, y_label);
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out << format_double(xr.map(s.x[i], kLeft, kW - kRight)) << ','
          << format_double(yr.map(s.y[i], kH - kBottom, kTop)) << ' ';
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failure: " + path);
}

void write_band_diagram(const std::string& path, const std::vector<SvgBand>& bands,
                        double x_min, double x_max, const std::string& x_label,
                        const std::string& title) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  const Range xr = nice_range(x_min, x_max);
  const Range yr = {0.0, 1.0};
  svg_header(out, title);
  svg_axes(out, xr, yr, x_label, "");
  const double y0 = yr.map(0.65, kH - kBottom, kTop);
  const double y1 = yr.map(0.35, kH - kBottom, kTop);
  for (const auto& b : bands) {
    const double px0 = xr.map(b.lo, kLeft, kW - kRight);
    const double px1 = xr.map(b.hi, kLeft, kW - kRight);
    out << "<rect x=\"" << format_double(px0) << "\" y=\"" << format_double(y0) << "\" width=\""
        << format_double(std::max(0.5, px1 - px0)) << "\" height=\""
        << format_double(y1 - y0) << "\" fill=\"" << b.color << "\"/>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace speclab::cli
