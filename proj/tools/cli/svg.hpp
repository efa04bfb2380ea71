#pragma once

#include <string>
#include <utility>
#include <vector>

namespace legendre::cli {

using Point2 = std::pair<double, double>;

/// Minimal SVG writer for plane curves and lines. Coordinates are in data
/// units; the view box is fitted to the polylines, y pointing up.
class SvgPlot {
 public:
  /// Consecutive points form one stroke; a NaN coordinate breaks the stroke.
  void polyline(std::vector<Point2> points, std::string color, double width = 1.5, bool dashed = false,
                std::string label = {});
  /// Line through `foot` with direction `dir`, drawn across the view box.
  void line(Point2 foot, Point2 dir, std::string color, double width = 0.5);

  [[nodiscard]] std::string render(const std::string& title) const;

 private:
  struct Stroke {
    std::vector<Point2> points;
    std::string color;
    double width;
    bool dashed;
    std::string label;
  };
  struct Line {
    Point2 foot, dir;
    std::string color;
    double width;
  };
  std::vector<Stroke> strokes_;
  std::vector<Line> lines_;
};

}  // namespace legendre::cli
