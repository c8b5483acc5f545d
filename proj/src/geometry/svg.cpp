#include "convexa/geometry/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "convexa/errors.hpp"

namespace convexa {

namespace {

// Vertices of a bounded planar body: feasible pairwise line intersections,
// ordered around their centroid.
std::vector<std::pair<double, double>> vertices_of(const HalfspaceBody& body) {
  std::vector<Constraint> weak = body.constraints;
  for (auto& c : weak) c.rel = Relation::Le;
  std::vector<RationalVector> found;
  for (std::size_t i = 0; i < weak.size(); ++i) {
    for (std::size_t j = i + 1; j < weak.size(); ++j) {
      const auto& a = weak[i].normal;
      const auto& b = weak[j].normal;
      const Rational det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      RationalVector p{(weak[i].offset * b[1] - a[1] * weak[j].offset) / det,
                       (a[0] * weak[j].offset - weak[i].offset * b[0]) / det};
      bool ok = true;
      for (const auto& c : weak) ok = ok && satisfies(c, p);
      if (ok && std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
    }
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : found) pts.emplace_back(p[0].convert_to<double>(), p[1].convert_to<double>());
  double cx = 0, cy = 0;
  for (auto [x, y] : pts) {
    cx += x;
    cy += y;
  }
  if (!pts.empty()) {
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
  }
  std::sort(pts.begin(), pts.end(), [&](auto u, auto v) {
    return std::atan2(u.second - cy, u.first - cx) < std::atan2(v.second - cy, v.first - cx);
  });
  return pts;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string render_svg(const Realization& r) {
  if (r.dim != 2) throw InvalidArgument("SVG output needs a planar realization");
  for (const auto& b : r.bodies) {
    if (!bounded(b, 2)) throw InvalidArgument("SVG output needs bounded bodies");
  }
  std::vector<std::vector<std::pair<double, double>>> shapes;
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const auto& b : r.bodies) {
    shapes.push_back(vertices_of(b));
    for (auto [x, y] : shapes.back()) {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  if (minx > maxx) minx = maxx = miny = maxy = 0;
  const double pad = 0.05 * std::max({maxx - minx, maxy - miny, 1.0});
  const double w = maxx - minx + 2 * pad, h = maxy - miny + 2 * pad;
  const double stroke = 0.006 * std::max(w, h);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx - pad << ' ' << -(maxy + pad) << ' ' << w << ' '
      << h << "\" width=\"480\" height=\"" << static_cast<int>(480 * h / w) << "\">\n";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const char* color = kPalette[i % 10];
    std::ostringstream pts;
    for (auto [x, y] : shapes[i]) pts << x << ',' << -y << ' ';
    if (shapes[i].size() >= 3) {
      out << "  <polygon points=\"" << pts.str() << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\""
          << color << "\" stroke-width=\"" << stroke << "\"><title>U" << i + 1 << "</title></polygon>\n";
    } else if (shapes[i].size() == 2) {
      out << "  <polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
          << 2 * stroke << "\"><title>U" << i + 1 << "</title></polyline>\n";
    } else if (shapes[i].size() == 1) {
      out << "  <circle cx=\"" << shapes[i][0].first << "\" cy=\"" << -shapes[i][0].second << "\" r=\"" << 2 * stroke
          << "\" fill=\"" << color << "\"><title>U" << i + 1 << "</title></circle>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace convexa
