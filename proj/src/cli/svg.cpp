#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "csv.hpp"

namespace fracwave::cli {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;  // room for the legend
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;
constexpr int kTicks = 5;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string px(double v) { return format_double(std::round(v * 100.0) / 100.0, 10); }

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

LinePlot::LinePlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void LinePlot::add(PlotSeries series) { series_.push_back(std::move(series)); }

std::string LinePlot::render() const {
  Range xr;
  Range yr;
  for (const PlotSeries& s : series_) {
    for (double v : s.x) xr.include(v);
    for (double v : s.y) yr.include(v);
  }
  xr.finish();
  yr.finish();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
      << "<text x=\"" << px(kLeft + plot_w / 2) << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(title_) << "</text>\n";

  // frame and ticks
  svg << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\"" << px(plot_w)
      << "\" height=\"" << px(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i < kTicks; ++i) {
    const double f = static_cast<double>(i) / (kTicks - 1);
    const double xv = xr.lo + f * (xr.hi - xr.lo);
    const double yv = yr.lo + f * (yr.hi - yr.lo);
    const double x = sx(xv);
    const double y = sy(yv);
    svg << "<line x1=\"" << px(x) << "\" y1=\"" << px(kTop + plot_h) << "\" x2=\"" << px(x)
        << "\" y2=\"" << px(kTop + plot_h + 6) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px(x) << "\" y=\"" << px(kTop + plot_h + 22)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << format_double(xv, 3) << "</text>\n"
        << "<line x1=\"" << px(kLeft - 6) << "\" y1=\"" << px(y) << "\" x2=\"" << px(kLeft)
        << "\" y2=\"" << px(y) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px(kLeft - 10) << "\" y=\"" << px(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
        << format_double(yv, 3) << "</text>\n";
  }
  if (yr.lo < 0.0 && yr.hi > 0.0) {
    svg << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(sy(0.0)) << "\" x2=\""
        << px(kLeft + plot_w) << "\" y2=\"" << px(sy(0.0))
        << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
  }
  svg << "<text x=\"" << px(kLeft + plot_w / 2) << "\" y=\"" << px(kHeight - 15)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << escape(x_label_) << "</text>\n"
      << "<text x=\"20\" y=\"" << px(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 20 "
      << px(kTop + plot_h / 2) << ")\">" << escape(y_label_) << "</text>\n";

  for (const PlotSeries& s : series_) {
    svg << "<polyline fill=\"none\" stroke=\"" << escape(s.color) << "\" stroke-width=\"1.5\"";
    if (s.dashed) svg << " stroke-dasharray=\"6,4\"";
    svg << " points=\"";
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (i) svg << ' ';
      svg << px(sx(s.x[i])) << ',' << px(sy(s.y[i]));
    }
    svg << "\"><title>" << escape(s.name) << "</title></polyline>\n";
  }

  // legend
  const double lx = kWidth - kRight + 15;
  double ly = kTop + 10;
  for (const PlotSeries& s : series_) {
    svg << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly) << "\" x2=\"" << px(lx + 30)
        << "\" y2=\"" << px(ly) << "\" stroke=\"" << escape(s.color) << "\" stroke-width=\"1.5\"";
    if (s.dashed) svg << " stroke-dasharray=\"6,4\"";
    svg << "/>\n<text x=\"" << px(lx + 38) << "\" y=\"" << px(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.name) << "</text>\n";
    ly += 22;
  }
  svg << "<text x=\"" << px(lx) << "\" y=\"" << px(ly + 10)
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555555\">solid: real, "
         "dashed: imaginary</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fracwave::cli
