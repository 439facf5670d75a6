#include "p2ps/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2ps {

namespace {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

struct Point {
  double x;
  double y;
};

/// Tick step of the form {1, 2, 5} x 10^k giving about `target` divisions.
double nice_step(double range, int target) {
  if (range <= 0) return 1.0;
  const double raw = range / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (const double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * mult >= raw) return mag * mult;
  }
  return mag * 10.0;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                          "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};
constexpr int kPaletteSize = 12;

}  // namespace

void emit_csv(const MetricsSeries& series, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "joins,congestion_degree,intra_as_fraction,top_level_as_count,"
         "failures\n";
  for (const MetricsSample& s : series.samples) {
    out << s.joins_so_far << ',';
    if (s.congestion_degree) out << format_double(*s.congestion_degree);
    out << ',' << format_double(s.intra_as_traffic_fraction) << ','
        << s.top_level_peer_as_count << ',' << s.join_failures << '\n';
  }
  if (!out.flush())
    throw std::runtime_error("write failed for " + path.string());
}

void emit_svg(std::span<const MetricsSeries> series_set,
              const std::filesystem::path& path, int smooth_window) {
  if (series_set.empty())
    throw std::invalid_argument("emit_svg needs at least one series");

  // Collect (joins, congestion) per series, smoothed if requested, and
  // thinned to a plottable point count.
  std::vector<std::vector<Point>> curves;
  std::vector<std::string> labels;
  double x_max = 1.0;
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const MetricsSeries& series : series_set) {
    std::vector<Point> curve;
    const std::vector<double> smoothed =
        smooth_window > 1 ? smoothed_congestion(series, smooth_window)
                          : std::vector<double>();
    for (std::size_t i = 0; i < series.samples.size(); ++i) {
      double value;
      if (smooth_window > 1) {
        value = smoothed[i];
        if (std::isnan(value)) continue;
      } else if (series.samples[i].congestion_degree) {
        value = *series.samples[i].congestion_degree;
      } else {
        continue;
      }
      curve.push_back({static_cast<double>(series.samples[i].joins_so_far),
                       value});
    }
    constexpr std::size_t kMaxPoints = 1500;
    if (curve.size() > kMaxPoints) {
      std::vector<Point> thinned;
      const std::size_t stride = (curve.size() + kMaxPoints - 1) / kMaxPoints;
      for (std::size_t i = 0; i < curve.size(); i += stride)
        thinned.push_back(curve[i]);
      if (thinned.back().x != curve.back().x) thinned.push_back(curve.back());
      curve = std::move(thinned);
    }
    for (const Point& p : curve) {
      x_max = std::max(x_max, p.x);
      y_min = std::min(y_min, p.y);
      y_max = std::max(y_max, p.y);
    }
    curves.push_back(std::move(curve));
    labels.push_back(series.config.label());
  }
  if (!std::isfinite(y_min)) {  // nothing to plot at all
    y_min = 0.0;
    y_max = 1.0;
  }
  if (y_max - y_min < 1e-9) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const double width = 960, height = 600;
  const double ml = 70, mr = 190, mt = 40, mb = 60;
  const double plot_w = width - ml - mr, plot_h = height - mt - mb;
  auto sx = [&](double x) { return ml + x / x_max * plot_w; };
  auto sy = [&](double y) {
    return mt + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h;
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Gridlines and tick labels.
  const double x_step = nice_step(x_max, 6);
  for (double x = 0; x <= x_max + 1e-9; x += x_step) {
    out << "<line x1=\"" << sx(x) << "\" y1=\"" << mt << "\" x2=\"" << sx(x)
        << "\" y2=\"" << mt + plot_h
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << sx(x) << "\" y=\"" << mt + plot_h + 20
        << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\">"
        << format_double(x) << "</text>\n";
  }
  const double y_step = nice_step(y_max - y_min, 6);
  for (double y = std::ceil(y_min / y_step) * y_step; y <= y_max + 1e-9;
       y += y_step) {
    out << "<line x1=\"" << ml << "\" y1=\"" << sy(y) << "\" x2=\""
        << ml + plot_w << "\" y2=\"" << sy(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << ml - 8 << "\" y=\"" << sy(y) + 4
        << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#333333\">"
        << format_double(y) << "</text>\n";
  }

  // Axes and labels.
  out << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\""
      << ml + plot_w << "\" y2=\"" << mt + plot_h
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
      << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << mt + plot_h
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
      << "<text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 15
      << "\" font-size=\"14\" text-anchor=\"middle\">peers joined</text>\n"
      << "<text x=\"20\" y=\"" << mt + plot_h / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << mt + plot_h / 2 << ")\">congestion degree</text>\n";

  // Curves.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[i % kPaletteSize]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const Point& p : curves[i])
      out << format_double(sx(p.x)) << ',' << format_double(sy(p.y)) << ' ';
    out << "\"/>\n";
  }

  // Legend.
  const double lx = ml + plot_w + 14;
  double ly = mt + 10;
  for (std::size_t i = 0; i < labels.size(); ++i, ly += 20) {
    out << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 22
        << "\" y2=\"" << ly << "\" stroke=\"" << kPalette[i % kPaletteSize]
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << lx + 28 << "\" y=\"" << ly + 4
        << "\" font-size=\"12\">" << labels[i] << "</text>\n";
  }

  out << "</svg>\n";
  if (!out.flush())
    throw std::runtime_error("write failed for " + path.string());
}

}  // namespace p2ps
