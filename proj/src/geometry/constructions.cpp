#include "convexa/geometry/constructions.hpp"

#include <cmath>
#include <numbers>

#include "convexa/errors.hpp"

namespace convexa {

namespace {

Rational cross(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Constraint le(RationalVector normal, Rational offset) { return Constraint{std::move(normal), std::move(offset), Relation::Le}; }

RationalVector point(Rational x, Rational y) { return RationalVector{std::move(x), std::move(y)}; }

}  // namespace

HalfspaceBody polygon_body(const std::vector<RationalVector>& vertices) {
  const std::size_t k = vertices.size();
  if (k < 3) throw InvalidArgument("a polygon needs at least three vertices");
  Rational area = 0;
  for (std::size_t i = 0; i < k; ++i) area += cross(RationalVector{0, 0}, vertices[i], vertices[(i + 1) % k]);
  if (area == 0) throw InvalidArgument("degenerate polygon");
  const bool ccw = area > 0;
  HalfspaceBody body;
  for (std::size_t i = 0; i < k; ++i) {
    const RationalVector& p = vertices[i];
    const RationalVector& q = vertices[(i + 1) % k];
    // Outward normal of edge p→q for counterclockwise order.
    RationalVector n{q[1] - p[1], p[0] - q[0]};
    if (!ccw) n = RationalVector{-n[0], -n[1]};
    Rational off = dot(n, p);
    body.constraints.push_back(le(std::move(n), std::move(off)));
  }
  return body;
}

HalfspaceBody segment_body(const RationalVector& p, const RationalVector& q) {
  HalfspaceBody body;
  if (p == q) {
    body.constraints = {le({1, 0}, p[0]), le({-1, 0}, -p[0]), le({0, 1}, p[1]), le({0, -1}, -p[1])};
    return body;
  }
  const RationalVector d{q[0] - p[0], q[1] - p[1]};
  const RationalVector n{-d[1], d[0]};
  const Rational on = dot(n, p);
  body.constraints.push_back(le(n, on));
  body.constraints.push_back(le({-n[0], -n[1]}, -on));
  body.constraints.push_back(le(d, dot(d, q)));
  body.constraints.push_back(le({-d[0], -d[1]}, -dot(d, p)));
  return body;
}

Realization interval_realization(const std::vector<std::pair<Rational, Rational>>& intervals, RealizationMode mode) {
  Realization r;
  r.dim = 1;
  r.mode = mode;
  const Relation rel = mode == RealizationMode::Closed ? Relation::Le : Relation::Lt;
  for (const auto& [lo, hi] : intervals) {
    HalfspaceBody body;
    body.constraints.push_back(Constraint{{Rational(-1)}, Rational(-lo), rel});
    body.constraints.push_back(Constraint{{Rational(1)}, hi, rel});
    r.bodies.push_back(std::move(body));
  }
  return r;
}

Realization theta_figure_realization() {
  Realization r;
  r.dim = 2;
  const RationalVector apex = point(0, 7);
  r.bodies.push_back(polygon_body({apex, point(-9, -6), point(-5, -6)}));
  r.bodies.push_back(polygon_body({apex, point(-2, -6), point(2, -6)}));
  r.bodies.push_back(polygon_body({apex, point(9, -6), point(5, -6)}));
  const Rational x = Rational(69, 10);
  r.bodies.push_back(polygon_body({point(-9, -6), point(9, -6), point(x, -3), point(-x, -3)}));
  return r;
}

namespace {

Realization planar_sunflower() {
  const RationalVector a = point(-2, 0), b = point(2, 0), c = point(0, -2), d = point(0, 0);
  Realization r;
  r.dim = 2;
  r.bodies = {segment_body(d, b), segment_body(a, d), segment_body(a, b),
              segment_body(a, c), segment_body(b, c), segment_body(d, c)};
  return r;
}

// Rational point on the unit circle near angle theta, via t = tan(theta/2).
RationalVector circle_point(double theta) {
  const long long scaled = std::llround(std::tan(theta / 2) * 1000.0);
  const Rational t(scaled, 1000);
  const Rational denom = 1 + t * t;
  return point((1 - t * t) / denom, 2 * t / denom);
}

RationalVector lift(const RationalVector& v, Rational z) { return RationalVector{v[0], v[1], std::move(z)}; }

}  // namespace

Realization build_sunflower_realization(int n) {
  if (n < 2) throw InvalidArgument("sunflower realization needs n >= 2");
  if (n > 6) throw InvalidArgument("sunflower realization is limited to n <= 6");
  if (n == 2) return planar_sunflower();

  const int edges = (1 << n) - 2;
  const int ring = 2 * edges;
  // Even ring points are the polygon P; odd ones bulge out past each edge of
  // P, and the whole ring bounds the outer polygon Q standing in for the circle.
  std::vector<RationalVector> pts;
  for (int k = 0; k < ring; ++k) {
    pts.push_back(circle_point(-std::numbers::pi + std::numbers::pi * (2.0 * k + 1.0) / ring));
  }
  for (int k = 1; k < ring; ++k) {
    if (std::atan2(pts[k][1].convert_to<double>(), pts[k][0].convert_to<double>()) <=
        std::atan2(pts[k - 1][1].convert_to<double>(), pts[k - 1][0].convert_to<double>())) {
      throw InvalidArgument("ring points collided while rationalizing");
    }
  }
  std::vector<RationalVector> p_vertices, q_vertices = pts;
  for (int k = 0; k < ring; k += 2) p_vertices.push_back(pts[k]);
  const HalfspaceBody P = polygon_body(p_vertices);
  const HalfspaceBody Q = polygon_body(q_vertices);

  const int circle = n + 1;
  const int pyramid = 2 * n + 2;
  std::vector<HalfspaceBody> bodies(pyramid);
  auto flat = [](const HalfspaceBody& planar) {
    HalfspaceBody b;
    for (const auto& c : planar.constraints) b.constraints.push_back(le(lift(c.normal, 0), c.offset));
    b.constraints.push_back(le({0, 0, 1}, 0));
    b.constraints.push_back(le({0, 0, -1}, 0));
    return b;
  };
  bodies[circle - 1] = flat(Q);
  // Edge e of P carries the circle-edge codeword (mask e+1) ∪ {n+1}; neuron i
  // is cut back to the chord of every edge whose codeword omits i.
  for (int i = 1; i <= n; ++i) {
    HalfspaceBody cut = Q;
    for (int e = 0; e < edges; ++e) {
      if (!NeuronSet::from_mask(static_cast<std::uint64_t>(e + 1)).contains(i)) cut.constraints.push_back(P.constraints[e]);
    }
    bodies[i - 1] = flat(cut);
  }
  // Pyramid over P with apex (0,0,1).
  HalfspaceBody pyr;
  for (const auto& c : P.constraints) pyr.constraints.push_back(le(lift(c.normal, c.offset), c.offset));
  pyr.constraints.push_back(le({0, 0, -1}, 0));
  bodies[pyramid - 1] = pyr;
  // Segments from the apex to the centroid of the cap past the edge whose
  // codeword is [n] minus {i}.
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t want = NeuronSet::universe(n).without(i).mask();
    const int e = static_cast<int>(want) - 1;
    const RationalVector& a = pts[2 * e];
    const RationalVector& m = pts[2 * e + 1];
    const RationalVector& b = pts[(2 * e + 2) % ring];
    const Rational px = (a[0] + m[0] + b[0]) / 3;
    const Rational py = (a[1] + m[1] + b[1]) / 3;
    HalfspaceBody seg;
    seg.constraints = {le({1, 0, px}, px),  le({-1, 0, -px}, -px), le({0, 1, py}, py),
                       le({0, -1, -py}, -py), le({0, 0, 1}, 1),      le({0, 0, -1}, 0)};
    bodies[circle + i - 1] = seg;
  }

  Realization r;
  r.dim = 3;
  r.bodies = std::move(bodies);
  return r;
}

}  // namespace convexa
