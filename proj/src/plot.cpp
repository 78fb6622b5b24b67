#include "cleit/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cleit/config.hpp"

namespace cleit {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 20;
constexpr int kMarginBottom = 50;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

struct Axis {
  double lo, hi;
  double map(double v, double pix_lo, double pix_hi) const {
    const double t = (v - lo) / (hi - lo);
    return pix_lo + t * (pix_hi - pix_lo);
  }
};

Axis make_axis(const std::vector<double>& values) {
  double lo = *std::min_element(values.begin(), values.end());
  double hi = *std::max_element(values.begin(), values.end());
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

std::vector<double> ticks(const Axis& axis, int target) {
  const double span = axis.hi - axis.lo;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (const double m : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * m >= raw) {
      step = mag * m;
      break;
    }
  }
  std::vector<double> out;
  double t = std::ceil(axis.lo / step) * step;
  for (; t <= axis.hi + 1e-12 * span; t += step) out.push_back(t == 0.0 ? 0.0 : t);
  return out;
}

std::string tick_label(double v) {
  // shortest round-trip is too noisy for axis labels; 6 significant digits
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

}  // namespace

std::string render_plot_svg(const CsvTable& table) {
  if (table.header.size() < 2)
    throw ConfigError("plot needs at least two csv columns");
  if (table.rows() == 0) throw ConfigError("plot needs at least one data row");

  const auto& x = table.columns[0];
  Axis ax = make_axis(x);
  std::vector<double> all_y;
  for (std::size_t c = 1; c < table.columns.size(); ++c)
    all_y.insert(all_y.end(), table.columns[c].begin(), table.columns[c].end());
  Axis ay = make_axis(all_y);

  const double px_lo = kMarginLeft, px_hi = kWidth - kMarginRight;
  const double py_lo = kHeight - kMarginBottom, py_hi = kMarginTop;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes and ticks
  svg << "<g stroke=\"#333\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << px_lo << "\" y1=\"" << py_lo << "\" x2=\"" << px_hi
      << "\" y2=\"" << py_lo << "\"/>\n";
  svg << "<line x1=\"" << px_lo << "\" y1=\"" << py_lo << "\" x2=\"" << px_lo
      << "\" y2=\"" << py_hi << "\"/>\n";
  svg << "</g>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
  for (const double t : ticks(ax, 8)) {
    const double px = ax.map(t, px_lo, px_hi);
    svg << "<line x1=\"" << px << "\" y1=\"" << py_lo << "\" x2=\"" << px
        << "\" y2=\"" << py_lo + 5 << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << px << "\" y=\"" << py_lo + 20
        << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (const double t : ticks(ay, 6)) {
    const double py = ay.map(t, py_lo, py_hi);
    svg << "<line x1=\"" << px_lo - 5 << "\" y1=\"" << py << "\" x2=\"" << px_lo
        << "\" y2=\"" << py << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << px_lo - 8 << "\" y=\"" << py + 4
        << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
  svg << "<text x=\"" << (px_lo + px_hi) / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">" << table.header[0] << "</text>\n";
  svg << "</g>\n";

  // curves
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    const char* color = kPalette[(c - 1) % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t r = 0; r < table.rows(); ++r) {
      if (r) svg << ' ';
      svg << ax.map(x[r], px_lo, px_hi) << ','
          << ay.map(table.columns[c][r], py_lo, py_hi);
    }
    svg << "\"/>\n";
  }

  // legend
  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    const double ly = kMarginTop + 16.0 * static_cast<double>(c - 1) + 8.0;
    const char* color = kPalette[(c - 1) % std::size(kPalette)];
    svg << "<line x1=\"" << px_hi - 120 << "\" y1=\"" << ly << "\" x2=\""
        << px_hi - 96 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << px_hi - 90 << "\" y=\"" << ly + 4 << "\">"
        << table.header[c] << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void emit_plot(const std::string& csv_path, const std::string& image_path) {
  const CsvTable table = parse_csv(read_file(csv_path));
  write_file(image_path, render_plot_svg(table));
}

}  // namespace cleit
