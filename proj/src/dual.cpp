#include "billiards/dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace billiards {

DualBody DualBody::bounded(ConvexPolygon poly, Point z, std::vector<HalfPlane> constraints) {
  DualBody d;
  d.polygon_ = std::move(poly);
  d.center_ = z;
  d.halfplanes_ = std::move(constraints);
  return d;
}

DualBody DualBody::unbounded(std::vector<HalfPlane> constraints, Point z) {
  DualBody d;
  d.center_ = z;
  d.halfplanes_ = std::move(constraints);
  return d;
}

const ConvexPolygon& DualBody::polygon() const {
  if (!polygon_) throw Error("dual body is unbounded");
  return *polygon_;
}

bool DualBody::contains(Point y, double tol) const {
  for (const HalfPlane& h : halfplanes_) {
    if (dot(h.a, y) > h.c + tol) return false;
  }
  return true;
}

DualBody polar_dual(const ConvexPolygon& P, Point z) {
  std::vector<HalfPlane> constraints;
  constraints.reserve(P.size());
  for (const Point& v : P.vertices()) constraints.push_back({v - z, 1.0});

  double boundary_tol = kTol * std::max(1.0, P.scale());
  if (P.min_slack(z) > boundary_tol) {
    // dual vertex per primal edge: n_j / (b_j - <n_j, z>)
    std::vector<Point> verts;
    verts.reserve(P.size());
    for (int j = 0; j < P.size(); ++j) {
      double slack = P.edge_offset(j) - dot(P.edge_normal(j), z);
      verts.push_back(P.edge_normal(j) / slack);
    }
    return DualBody::bounded(ConvexPolygon(std::move(verts)), z, std::move(constraints));
  }
  return DualBody::unbounded(std::move(constraints), z);
}

ConvexPolygon dual_of_dual_roundtrip(const ConvexPolygon& P, Point z) {
  double boundary_tol = kTol * std::max(1.0, P.scale());
  if (P.min_slack(z) <= boundary_tol) throw NotInterior("center is not strictly interior");
  DualBody d = polar_dual(P, z);
  DualBody dd = polar_dual(d.polygon(), Point{0.0, 0.0});
  std::vector<Point> verts;
  for (const Point& v : dd.polygon().vertices()) verts.push_back(v + z);
  return ConvexPolygon(std::move(verts));
}

bool acute_dual_region_contains(const ConvexPolygon& T, Point z) {
  if (T.size() != 3) throw NotTriangle("expected a triangle");
  if (T.min_slack(z) <= kTol * std::max(1.0, T.scale())) throw NotInterior("point is not strictly interior");
  for (int i = 0; i < 3; ++i) {
    Point mid = 0.5 * (T.edge_start(i) + T.edge_end(i));
    if (dist(z, mid) >= 0.5 * T.edge_length(i)) return false;
  }
  return true;
}

double halfplane_support(const std::vector<HalfPlane>& hs, Vec2 u) {
  const double inf = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (const HalfPlane& h : hs) scale = std::max(scale, std::abs(h.c));
  double dir_tol = 1e-12;

  // unbounded iff some recession direction d (with <a_j, d> <= 0 for all j)
  // has positive component along u; enough to test u itself plus the
  // extreme-ray candidates given by constraint perpendiculars
  std::vector<Vec2> candidates{u};
  for (const HalfPlane& h : hs) {
    double an = norm(h.a);
    if (an < 1e-300) continue;
    candidates.push_back(perp(h.a) / an);
    candidates.push_back(-perp(h.a) / an);
    candidates.push_back(-h.a / an);
  }
  for (Vec2 d : candidates) {
    bool recession = true;
    for (const HalfPlane& g : hs) {
      if (dot(g.a, d) > dir_tol * std::max(1.0, norm(g.a))) {
        recession = false;
        break;
      }
    }
    if (recession && dot(u, d) > dir_tol) return inf;
  }

  double best = -inf;
  int m = static_cast<int>(hs.size());
  double feas_tol = 1e-9 * std::max(1.0, scale);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto p = intersect_lines(hs[i].a, hs[i].c, hs[j].a, hs[j].c);
      if (!p) continue;
      bool ok = true;
      for (const HalfPlane& g : hs) {
        if (dot(g.a, *p) > g.c + feas_tol * std::max(1.0, norm(g.a))) {
          ok = false;
          break;
        }
      }
      if (ok) best = std::max(best, dot(u, *p));
    }
  }
  if (!std::isfinite(best)) throw NumericFailure("half-plane support: no feasible vertex");
  return best;
}

double halfplane_width(const std::vector<HalfPlane>& hs, Vec2 u) {
  Vec2 un = normalized(u);
  double a = halfplane_support(hs, un);
  double b = halfplane_support(hs, -un);
  return a + b;  // +inf propagates
}

std::optional<double> min_finite_width(const std::vector<HalfPlane>& hs) {
  // collect recession rays among constraint perpendiculars
  std::vector<Vec2> rays;
  double dir_tol = 1e-9;
  for (const HalfPlane& h : hs) {
    double an = norm(h.a);
    if (an < 1e-300) continue;
    for (Vec2 d : {perp(h.a) / an, -perp(h.a) / an}) {
      bool recession = true;
      for (const HalfPlane& g : hs) {
        if (dot(g.a, d) > dir_tol * std::max(1.0, norm(g.a))) {
          recession = false;
          break;
        }
      }
      if (recession) rays.push_back(d);
    }
  }
  if (rays.empty()) return std::nullopt;
  // all rays must be parallel (a single ray or a full line); a genuinely
  // two-dimensional recession cone has no finite width in any direction
  for (const Vec2& r : rays) {
    if (std::abs(cross(rays[0], r)) > 1e-9) return std::nullopt;
  }
  double w = halfplane_width(hs, perp(rays[0]));
  if (!std::isfinite(w)) return std::nullopt;
  return w;
}

}  // namespace billiards
