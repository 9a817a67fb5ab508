#include "dunkl/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "dunkl/format.hpp"

namespace dunkl {

namespace {

constexpr double width = 640.0, height = 400.0, margin = 50.0;

// Pixel coordinates rounded to hundredths keep the files small and stable.
std::string px(double v) { return format_number(std::round(v * 100.0) / 100.0); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(const std::string& title) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(width)
      << "\" height=\"" << px(height) << "\" viewBox=\"0 0 " << px(width) << ' ' << px(height)
      << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << px(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"14\">" << escape(title) << "</text>\n";
  return out.str();
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-300) lo -= 0.5, hi += 0.5;
  }
};

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

}  // namespace

std::string svg_line_plot(const std::string& title, const std::vector<double>& x,
                          const std::vector<PlotSeries>& series) {
  Range rx, ry;
  for (double v : x) rx.add(v);
  for (const auto& s : series)
    for (double v : s.y) ry.add(v);
  rx.settle();
  ry.settle();
  auto sx = [&](double v) { return margin + (v - rx.lo) / (rx.hi - rx.lo) * (width - 2 * margin); };
  auto sy = [&](double v) {
    return height - margin - (v - ry.lo) / (ry.hi - ry.lo) * (height - 2 * margin);
  };

  std::ostringstream out;
  out << header(title);
  out << "<rect x=\"" << px(margin) << "\" y=\"" << px(margin) << "\" width=\""
      << px(width - 2 * margin) << "\" height=\"" << px(height - 2 * margin)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (ry.lo < 0.0 && ry.hi > 0.0)
    out << "<line x1=\"" << px(margin) << "\" y1=\"" << px(sy(0.0)) << "\" x2=\""
        << px(width - margin) << "\" y2=\"" << px(sy(0.0))
        << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
  auto label = [&](double xp, double yp, const std::string& text, const char* anchor) {
    out << "<text x=\"" << px(xp) << "\" y=\"" << px(yp) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(text) << "</text>\n";
  };
  label(margin, height - margin + 16, format_number(rx.lo), "start");
  label(width - margin, height - margin + 16, format_number(rx.hi), "end");
  label(margin - 4, height - margin, format_number(ry.lo), "end");
  label(margin - 4, margin + 10, format_number(ry.hi), "end");

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = palette[s % (sizeof palette / sizeof *palette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
    const std::size_t n = std::min(x.size(), series[s].y.size());
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(series[s].y[i])) continue;
      out << (first ? "" : " ") << px(sx(x[i])) << ',' << px(sy(series[s].y[i]));
      first = false;
    }
    out << "\"/>\n";
    label(width - margin - 4, margin + 16 + 14 * static_cast<double>(s), series[s].label, "end");
    out << "<rect x=\"" << px(width - margin - 2) << "\" y=\""
        << px(margin + 8 + 14 * static_cast<double>(s)) << "\" width=\"8\" height=\"8\" fill=\""
        << color << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_heat_table(const std::string& title, const std::string& column_label,
                           const std::string& row_label, const std::vector<HeatCell>& cells) {
  std::set<double> columns, rows;
  Range rv;
  for (const auto& c : cells) {
    columns.insert(c.column);
    rows.insert(c.row);
    rv.add(c.value);
  }
  rv.settle();
  const std::vector<double> cols(columns.begin(), columns.end()), rws(rows.begin(), rows.end());
  const double cw = (width - 2 * margin) / std::max<std::size_t>(cols.size(), 1);
  const double rh = (height - 2 * margin) / std::max<std::size_t>(rws.size(), 1);

  std::ostringstream out;
  out << header(title);
  for (const auto& c : cells) {
    const auto ci = std::lower_bound(cols.begin(), cols.end(), c.column) - cols.begin();
    const auto ri = std::lower_bound(rws.begin(), rws.end(), c.row) - rws.begin();
    const double u = std::isfinite(c.value) ? (c.value - rv.lo) / (rv.hi - rv.lo) : 0.0;
    // White to dark blue.
    const int r = static_cast<int>(std::lround(255 * (1 - u))),
              g = static_cast<int>(std::lround(255 * (1 - 0.7 * u))), b = 255 - static_cast<int>(std::lround(80 * u));
    out << "<rect x=\"" << px(margin + ci * cw) << "\" y=\""
        << px(height - margin - (ri + 1) * rh) << "\" width=\"" << px(cw) << "\" height=\""
        << px(rh) << "\" fill=\"rgb(" << r << ',' << g << ',' << b << ")\" stroke=\"#cccccc\"><title>"
        << escape(column_label + "=" + format_number(c.column) + " " + row_label + "=" +
                  format_number(c.row) + " value=" + format_number(c.value))
        << "</title></rect>\n";
  }
  auto label = [&](double xp, double yp, const std::string& text, const char* anchor) {
    out << "<text x=\"" << px(xp) << "\" y=\"" << px(yp) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(text) << "</text>\n";
  };
  label(width / 2, height - margin + 30, column_label, "middle");
  label(margin - 6, height / 2, row_label, "end");
  if (!cols.empty()) {
    label(margin, height - margin + 14, format_number(cols.front()), "start");
    label(width - margin, height - margin + 14, format_number(cols.back()), "end");
  }
  if (!rws.empty()) {
    label(margin - 6, height - margin - 2, format_number(rws.front()), "end");
    label(margin - 6, margin + 10, format_number(rws.back()), "end");
  }
  label(width - margin, margin - 8,
        "range " + format_number(rv.lo) + " to " + format_number(rv.hi), "end");
  out << "</svg>\n";
  return out.str();
}

}  // namespace dunkl
