#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace legendre::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

void SvgPlot::polyline(std::vector<Point2> points, std::string color, double width, bool dashed, std::string label) {
  strokes_.push_back({std::move(points), std::move(color), width, dashed, std::move(label)});
}

void SvgPlot::line(Point2 foot, Point2 dir, std::string color, double width) {
  lines_.push_back({foot, dir, std::move(color), width});
}

std::string SvgPlot::render(const std::string& title) const {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const auto& s : strokes_) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  }
  if (!(lo_x <= hi_x)) lo_x = lo_y = -1, hi_x = hi_y = 1;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double pad = 0.08 * span;
  lo_x -= pad;
  lo_y -= pad;
  const double w = hi_x - lo_x + pad, h = hi_y - lo_y + pad;
  const double size = 600.0;
  const double scale = size / std::max(w, h);
  auto sx = [&](double x) { return (x - lo_x) * scale; };
  auto sy = [&](double y) { return (lo_y + h - y) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w * scale) << "\" height=\"" << num(h * scale)
     << "\" viewBox=\"0 0 " << num(w * scale) << ' ' << num(h * scale) << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double reach = 2 * std::hypot(w, h);
  for (const auto& l : lines_) {
    const double n = std::hypot(l.dir.first, l.dir.second);
    if (!(n > 0) || !std::isfinite(l.foot.first) || !std::isfinite(l.foot.second)) continue;
    const double dx = l.dir.first / n * reach, dy = l.dir.second / n * reach;
    os << "<line x1=\"" << num(sx(l.foot.first - dx)) << "\" y1=\"" << num(sy(l.foot.second - dy)) << "\" x2=\""
       << num(sx(l.foot.first + dx)) << "\" y2=\"" << num(sy(l.foot.second + dy)) << "\" stroke=\"" << l.color
       << "\" stroke-width=\"" << num(l.width) << "\"/>\n";
  }
  for (const auto& s : strokes_) {
    std::vector<std::vector<Point2>> runs(1);
    for (const auto& p : s.points) {
      if (std::isfinite(p.first) && std::isfinite(p.second)) {
        runs.back().push_back(p);
      } else if (!runs.back().empty()) {
        runs.emplace_back();
      }
    }
    if (!s.label.empty()) os << "<g><title>" << s.label << "</title>\n";
    for (const auto& run : runs) {
      if (run.size() < 2) continue;
      os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"" << num(s.width) << '"';
      if (s.dashed) os << " stroke-dasharray=\"6 4\"";
      os << " points=\"";
      for (std::size_t k = 0; k < run.size(); ++k) {
        if (k) os << ' ';
        os << num(sx(run[k].first)) << ',' << num(sy(run[k].second));
      }
      os << "\"/>\n";
    }
    if (!s.label.empty()) os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace legendre::cli
