#include "qlozenge_cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

namespace qlozenge::cli {

namespace {

constexpr double kUnit = 24.0;
constexpr double kMargin = 12.0;
const double kRowHeight = std::sqrt(3.0) / 2.0;

using Point = std::pair<int, int>;  // lattice (i, j)

std::array<Point, 3> corners(const Triangle& t) {
  const int r = t.row, k = t.pos;
  if (t.is_up()) return {Point{k, r}, Point{k + 1, r}, Point{k, r + 1}};
  return {Point{k + 1, r}, Point{k + 1, r + 1}, Point{k, r + 1}};
}

// The four corners of a lozenge in cyclic order.
std::array<Point, 4> lozenge_corners(const Lozenge& l) {
  const auto a = corners(l.up);
  const auto b = corners(l.down);
  auto in = [](const std::array<Point, 3>& tri, const Point& p) { return std::find(tri.begin(), tri.end(), p) != tri.end(); };
  Point up_only{}, down_only{};
  std::vector<Point> shared;
  for (const auto& p : a) {
    if (in(b, p)) {
      shared.push_back(p);
    } else {
      up_only = p;
    }
  }
  for (const auto& p : b) {
    if (!in(a, p)) down_only = p;
  }
  return {up_only, shared[0], down_only, shared[1]};
}

const char* shade(LozengeKind k) {
  switch (k) {
    case LozengeKind::Left: return "#e6e6e6";
    case LozengeKind::Right: return "#a6a6a6";
    case LozengeKind::Vertical: return "#666666";
  }
  return "#ffffff";
}

class Canvas {
 public:
  explicit Canvas(const Region& region) {
    for (const auto& t : region.triangles()) {
      for (const auto& p : corners(t)) {
        const double x = p.first + p.second / 2.0;
        const double y = p.second * kRowHeight;
        min_x_ = std::min(min_x_, x);
        max_x_ = std::max(max_x_, x);
        min_y_ = std::min(min_y_, y);
        max_y_ = std::max(max_y_, y);
      }
    }
    if (region.empty()) min_x_ = max_x_ = min_y_ = max_y_ = 0;
  }

  double width() const { return (max_x_ - min_x_) * kUnit + 2 * kMargin; }
  double height() const { return (max_y_ - min_y_) * kUnit + 2 * kMargin; }

  // SVG y grows downward, lattice rows grow upward.
  std::string xy(const Point& p) const {
    const double x = (p.first + p.second / 2.0 - min_x_) * kUnit + kMargin;
    const double y = (max_y_ - p.second * kRowHeight) * kUnit + kMargin;
    return fmt(x) + "," + fmt(y);
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }

 private:
  double min_x_ = std::numeric_limits<double>::max();
  double max_x_ = std::numeric_limits<double>::lowest();
  double min_y_ = std::numeric_limits<double>::max();
  double max_y_ = std::numeric_limits<double>::lowest();
};

template <class Points>
std::string points_attr(const Canvas& c, const Points& pts) {
  std::string s;
  for (const auto& p : pts) {
    if (!s.empty()) s += ' ';
    s += c.xy(p);
  }
  return s;
}

void draw_cycles(std::ostringstream& os, const Canvas& canvas, const Region& region, const char* style) {
  for (const auto& cyc : boundary_cycles(region)) {
    os << "  <polygon points=\"" << points_attr(canvas, cyc.vertices) << "\" " << style << "/>\n";
  }
}

}  // namespace

std::string render_svg(const Region& region, const std::optional<Tiling>& tiling) {
  const Canvas canvas(region);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Canvas::fmt(canvas.width()) << "\" height=\""
     << Canvas::fmt(canvas.height()) << "\" viewBox=\"0 0 " << Canvas::fmt(canvas.width()) << ' '
     << Canvas::fmt(canvas.height()) << "\">\n";
  if (tiling) {
    os << " <g stroke=\"#000000\" stroke-width=\"0.8\" stroke-linejoin=\"round\">\n";
    for (const auto& l : tiling->lozenges) {
      os << "  <polygon points=\"" << points_attr(canvas, lozenge_corners(l)) << "\" fill=\"" << shade(l.kind())
         << "\"/>\n";
    }
    os << " </g>\n";
  } else {
    os << " <g stroke=\"#bbbbbb\" stroke-width=\"0.5\" fill=\"none\">\n";
    for (const auto& t : region.triangles()) {
      os << "  <polygon points=\"" << points_attr(canvas, corners(t)) << "\"/>\n";
    }
    os << " </g>\n";
  }
  os << " <g>\n";
  draw_cycles(os, canvas, region, "fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"");
  if (const auto& prov = region.provenance(); prov && prov->is_q_family()) {
    const auto& p = prov->params;
    if (p.m + p.a + p.b + p.c > 0) {
      const auto hole = build_shamrock(p.m, p.a, p.b, p.c, {p.x + p.c, 0});
      const Region shamrock(std::vector<Triangle>(hole.begin(), hole.end()));
      draw_cycles(os, canvas, shamrock, "fill=\"none\" stroke=\"#b00000\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"");
    }
  }
  os << " </g>\n</svg>\n";
  return os.str();
}

}  // namespace qlozenge::cli
