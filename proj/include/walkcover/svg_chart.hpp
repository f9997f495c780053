#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "walkcover/coverage.hpp"

namespace walkcover {

// Minimal standalone SVG 1.1 line chart: polyline series and horizontal
// reference lines over linear axes with ticks and a legend. Output is
// deterministic for identical input.
//
//   +--------------------- width ---------------------+
//   |                      title                      |
//   |       +--------- plot area ----------+          |
//   | y     |  series polylines, markers   |          |
//   | label |  reference lines (dashed)    |          |
//   |       +------------------------------+          |
//   |                 x label                         |
//   +-------------------------------------------------+
class LineChart {
 public:
  LineChart(std::string title, std::string x_label, std::string y_label)
      : title_(std::move(title)),
        x_label_(std::move(x_label)),
        y_label_(std::move(y_label)) {}

  void add_series(std::string label,
                  std::vector<std::pair<double, double>> points) {
    series_.push_back({std::move(label), std::move(points), next_color()});
  }

  void add_horizontal_line(std::string label, double y) {
    hlines_.push_back({std::move(label), y, next_color()});
  }

  std::string render() const {
    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    bounds(x_lo, x_hi, y_lo, y_hi);

    std::string svg;
    svg +=
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ";
    append(svg, "width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n", kWidth,
           kHeight, kWidth, kHeight);
    append(svg, "<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"#ffffff\"/>\n",
           kWidth, kHeight);
    append(svg,
           "<text x=\"%.2f\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">%s</text>\n",
           kWidth / 2.0, escape(title_).c_str());

    const auto px = [&](double x) {
      return kMarginLeft + (x - x_lo) / (x_hi - x_lo) * plot_width();
    };
    const auto py = [&](double y) {
      return kMarginTop + (y_hi - y) / (y_hi - y_lo) * plot_height();
    };

    render_axes(svg, x_lo, x_hi, y_lo, y_hi, px, py);

    for (const HLine& line : hlines_) {
      append(svg,
             "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"%s\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n",
             px(x_lo), py(line.y), px(x_hi), py(line.y), line.color.c_str());
    }
    for (const Series& s : series_) {
      if (s.points.empty()) continue;
      svg += "<polyline points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i > 0) svg += ' ';
        append(svg, "%.2f,%.2f", px(s.points[i].first), py(s.points[i].second));
      }
      append(svg, "\" fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\"/>\n",
             s.color.c_str());
      for (const auto& [x, y] : s.points)
        append(svg, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"%s\"/>\n",
               px(x), py(y), s.color.c_str());
    }

    render_legend(svg);

    append(svg,
           "<text x=\"%.2f\" y=\"%d\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"13\">%s</text>\n",
           kMarginLeft + plot_width() / 2.0, kHeight - 12,
           escape(x_label_).c_str());
    append(svg,
           "<text x=\"18\" y=\"%.2f\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 %.2f)\">%s</text>\n",
           kMarginTop + plot_height() / 2.0, kMarginTop + plot_height() / 2.0,
           escape(y_label_).c_str());
    svg += "</svg>\n";
    return svg;
  }

 private:
  struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
    std::string color;
  };
  struct HLine {
    std::string label;
    double y;
    std::string color;
  };

  static constexpr int kWidth = 720;
  static constexpr int kHeight = 480;
  static constexpr double kMarginLeft = 72.0;
  static constexpr double kMarginRight = 24.0;
  static constexpr double kMarginTop = 44.0;
  static constexpr double kMarginBottom = 58.0;

  static double plot_width() { return kWidth - kMarginLeft - kMarginRight; }
  static double plot_height() { return kHeight - kMarginTop - kMarginBottom; }

  std::string next_color() {
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};
    return kPalette[color_index_++ % (sizeof kPalette / sizeof *kPalette)];
  }

  static void append(std::string& out, const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    out += buf;
  }

  static std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
      if (c == '&')
        out += "&amp;";
      else if (c == '<')
        out += "&lt;";
      else if (c == '>')
        out += "&gt;";
      else
        out += c;
    }
    return out;
  }

  void bounds(double& x_lo, double& x_hi, double& y_lo, double& y_hi) const {
    bool have_x = false, have_y = false;
    for (const Series& s : series_) {
      for (const auto& [x, y] : s.points) {
        x_lo = have_x ? std::min(x_lo, x) : x;
        x_hi = have_x ? std::max(x_hi, x) : x;
        have_x = true;
        y_lo = have_y ? std::min(y_lo, y) : y;
        y_hi = have_y ? std::max(y_hi, y) : y;
        have_y = true;
      }
    }
    for (const HLine& line : hlines_) {
      y_lo = have_y ? std::min(y_lo, line.y) : line.y;
      y_hi = have_y ? std::max(y_hi, line.y) : line.y;
      have_y = true;
    }
    if (!have_x) x_lo = 0.0, x_hi = 1.0;
    if (!have_y) y_lo = 0.0, y_hi = 1.0;
    // Anchor coverage-style charts at zero and give the data headroom.
    y_lo = std::min(0.0, y_lo);
    y_hi += 0.05 * (y_hi - y_lo);
    if (x_hi - x_lo <= 0.0) x_lo -= 0.5, x_hi += 0.5;
    if (y_hi - y_lo <= 0.0) y_lo -= 0.5, y_hi += 0.5;
  }

  static double nice_step(double range, int target_ticks) {
    const double raw = range / target_ticks;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    const double normalized = raw / magnitude;
    double factor = 10.0;
    if (normalized < 1.5)
      factor = 1.0;
    else if (normalized < 3.5)
      factor = 2.0;
    else if (normalized < 7.5)
      factor = 5.0;
    return factor * magnitude;
  }

  template <class PxFn, class PyFn>
  void render_axes(std::string& svg, double x_lo, double x_hi, double y_lo,
                   double y_hi, const PxFn& px, const PyFn& py) const {
    const double x_step = nice_step(x_hi - x_lo, 8);
    const double y_step = nice_step(y_hi - y_lo, 6);
    for (double x = std::ceil(x_lo / x_step) * x_step; x <= x_hi + 1e-9;
         x += x_step) {
      append(svg,
             "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"#dddddd\" stroke-width=\"1\"/>\n",
             px(x), py(y_lo), px(x), py(y_hi));
      append(svg,
             "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
             "font-family=\"sans-serif\" font-size=\"11\">%g</text>\n",
             px(x), py(y_lo) + 16.0, x + 0.0);
    }
    for (double y = std::ceil(y_lo / y_step) * y_step; y <= y_hi + 1e-9;
         y += y_step) {
      append(svg,
             "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"#dddddd\" stroke-width=\"1\"/>\n",
             px(x_lo), py(y), px(x_hi), py(y));
      append(svg,
             "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" "
             "font-family=\"sans-serif\" font-size=\"11\">%g</text>\n",
             px(x_lo) - 6.0, py(y) + 4.0, y + 0.0);
    }
    append(svg,
           "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
           "fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n",
           kMarginLeft, kMarginTop, plot_width(), plot_height());
  }

  void render_legend(std::string& svg) const {
    double y = kMarginTop + 16.0;
    const double x = kMarginLeft + plot_width() - 190.0;
    auto entry = [&](const std::string& label, const std::string& color,
                     bool dashed) {
      append(svg,
             "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"%s\" stroke-width=\"1.5\"%s/>\n",
             x, y - 4.0, x + 26.0, y - 4.0, color.c_str(),
             dashed ? " stroke-dasharray=\"6 3\"" : "");
      append(svg,
             "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" "
             "font-size=\"12\">%s</text>\n",
             x + 32.0, y, escape(label).c_str());
      y += 18.0;
    };
    for (const Series& s : series_) entry(s.label, s.color, false);
    for (const HLine& line : hlines_) entry(line.label, line.color, true);
  }

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
  std::vector<HLine> hlines_;
  int color_index_ = 0;
};

// Chart in the style of the bias-sweep figures: one curve of coverage time
// versus bias plus the uniform-walk baseline as a dashed horizontal line.
inline std::string sweep_chart(const SweepResult& sweep,
                               const std::string& title) {
  LineChart chart(title, "bias p", "coverage time (steps)");
  std::vector<std::pair<double, double>> points;
  for (const SweepPoint& point : sweep.points)
    if (point.coverage_time)
      points.emplace_back(point.bias, *point.coverage_time);
  chart.add_series("directionally biased walk", std::move(points));
  if (sweep.baseline)
    chart.add_horizontal_line("random walk", *sweep.baseline);
  return chart.render();
}

inline std::string size_sweep_chart(const std::vector<SizeSweepEntry>& entries,
                                    const std::string& title) {
  LineChart chart(title, "grid side n (n x n torus)", "cross-over bias");
  std::vector<std::pair<double, double>> points;
  for (const SizeSweepEntry& entry : entries)
    if (entry.crossover.status == CrossoverStatus::Found)
      points.emplace_back(entry.size, entry.crossover.bias);
  chart.add_series("cross-over bias", std::move(points));
  return chart.render();
}

}  // namespace walkcover
