#include "quadcpg/plot_svg.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace quadcpg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kPanelHeight = 220.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kPanelGap = 50.0;
constexpr std::array<const char*, kNumLegs> kLegColors = {"#1f77b4", "#ff7f0e",
                                                          "#2ca02c", "#d62728"};

struct Series {
  std::string label;
  std::string color;
  std::vector<double> y;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void draw_panel(std::ostringstream& svg, const std::string& id,
                const std::string& ylabel, double top,
                const std::vector<double>& t, const std::vector<Series>& series) {
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const auto& s : series) {
    for (double v : s.y) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (y_max - y_min < 1e-9) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;
  const double t0 = t.front();
  const double t1 = t.size() > 1 ? t.back() : t.front() + 1.0;
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  auto px = [&](double tv) { return kMarginLeft + (tv - t0) / (t1 - t0) * plot_w; };
  auto py = [&](double yv) { return top + (y_max - yv) / (y_max - y_min) * kPanelHeight; };

  svg << "<g id=\"" << id << "\" class=\"panel\">\n";
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << top << "\" width=\"" << plot_w
      << "\" height=\"" << kPanelHeight << "\" fill=\"none\" stroke=\"#444\"/>\n";
  svg << "<text x=\"15\" y=\"" << top + kPanelHeight / 2
      << "\" font-size=\"12\" transform=\"rotate(-90 15 " << top + kPanelHeight / 2
      << ")\" text-anchor=\"middle\">" << escape(ylabel) << "</text>\n";
  svg << "<text x=\"" << kMarginLeft - 5 << "\" y=\"" << top + 10
      << "\" font-size=\"10\" text-anchor=\"end\">" << format_double(std::round(y_max * 1000) / 1000)
      << "</text>\n";
  svg << "<text x=\"" << kMarginLeft - 5 << "\" y=\"" << top + kPanelHeight
      << "\" font-size=\"10\" text-anchor=\"end\">" << format_double(std::round(y_min * 1000) / 1000)
      << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    svg << "<polyline class=\"series\" data-label=\"" << escape(s.label)
        << "\" fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) svg << ' ';
      svg << format_double(std::round(px(t[i]) * 100) / 100) << ','
          << format_double(std::round(py(s.y[i]) * 100) / 100);
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << kMarginLeft + 10 + 60.0 * static_cast<double>(k) << "\" y=\""
        << top - 6 << "\" font-size=\"11\" fill=\"" << s.color << "\">" << escape(s.label)
        << "</text>\n";
  }
  svg << "</g>\n";
}

}  // namespace

std::string render_rollout_svg(const CsvTable& table, const std::string& title) {
  const std::vector<double> t = table.values("t");
  const std::vector<double> vx = table.values("vx");
  std::vector<Series> omega;
  std::vector<Series> amplitude;
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    const std::string leg(kLegNames[i]);
    omega.push_back({"omega " + leg, kLegColors[i], table.values("omega_" + leg)});
    amplitude.push_back({"r " + leg, kLegColors[i], table.values("r_" + leg)});
  }
  if (t.empty()) throw ParseError("record has no rows; nothing to plot");

  const double height = kMarginTop + 3 * kPanelHeight + 2 * kPanelGap + 40.0;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << height << "\" viewBox=\"0 0 " << kWidth << ' ' << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"18\" font-size=\"14\" text-anchor=\"middle\">"
        << escape(title) << "</text>\n";
  }
  double top = kMarginTop;
  draw_panel(svg, "panel-velocity", "base velocity [m/s]", top, t,
             {{"vx", "#000000", vx}});
  top += kPanelHeight + kPanelGap;
  draw_panel(svg, "panel-frequency", "CPG frequency [Hz]", top, t, omega);
  top += kPanelHeight + kPanelGap;
  draw_panel(svg, "panel-amplitude", "CPG amplitude", top, t, amplitude);
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << height - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">time [s]</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace quadcpg
