#pragma once

#include <string>
#include <vector>

namespace fracwave::cli {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;  // dashed = imaginary part, solid = real part
};

/// Minimal line chart: fixed 800x600 viewBox, linear axes, five ticks per
/// axis, one <polyline> per series and a legend.
class LinePlot {
 public:
  LinePlot(std::string title, std::string x_label, std::string y_label);

  void add(PlotSeries series);
  std::string render() const;

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<PlotSeries> series_;
};

}  // namespace fracwave::cli
