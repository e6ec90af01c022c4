#include "billiards/product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace billiards {

ProductReport billiard_product(const ConvexPolygon& P) {
  ProductReport r;
  r.alpha = alpha_polygon(P).length;
  r.diameter = diameter(P).length;
  r.beta = 8.0 * r.alpha / r.diameter;
  return r;
}

ExtendedLength alpha_dual_at(const ConvexPolygon& P, Point z) {
  double boundary_tol = kTol * std::max(1.0, P.scale());
  double slack = P.min_slack(z);
  if (slack < -boundary_tol) return ExtendedLength::infinite();
  DualBody d = polar_dual(P, z);
  if (d.is_bounded()) return ExtendedLength::of(alpha_polygon(d.polygon()).length);
  auto w = min_finite_width(d.halfplanes());
  if (!w) return ExtendedLength::infinite();
  return ExtendedLength::of(2.0 * *w);
}

std::vector<Point> diameter_midpoints(const ConvexPolygon& P, double tol) {
  DiameterResult dia = diameter(P);
  std::vector<Point> mids;
  int n = P.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist(P.vertex(i), P.vertex(j)) >= dia.length - tol)
        mids.push_back(0.5 * (P.vertex(i) + P.vertex(j)));
    }
  }
  return mids;
}

SantaloResult santalo_scan(const ConvexPolygon& P, int resolution) {
  if (resolution < 8) throw DegenerateInput("santalo_scan needs resolution >= 8");

  double lox = P.vertices()[0].x, hix = lox, loy = P.vertices()[0].y, hiy = loy;
  for (const Point& v : P.vertices()) {
    lox = std::min(lox, v.x);
    hix = std::max(hix, v.x);
    loy = std::min(loy, v.y);
    hiy = std::max(hiy, v.y);
  }
  double diam = diameter(P).length;
  double margin = 1e-7 * diam;

  double best = std::numeric_limits<double>::infinity();
  Point argmin = P.centroid();
  auto consider = [&](Point z) {
    if (P.min_slack(z) <= margin) return;
    ExtendedLength a = alpha_dual_at(P, z);
    if (a.finite && a.value < best) {
      best = a.value;
      argmin = z;
    }
  };

  double dx = (hix - lox) / resolution;
  double dy = (hiy - loy) / resolution;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      consider({lox + (i + 0.5) * dx, loy + (j + 0.5) * dy});
    }
  }

  // derivative-free refinement from the best grid cell
  double step = std::max(dx, dy);
  Point z = argmin;
  int guard = 0;
  while (step > 1e-6 && guard++ < 400) {
    bool moved = false;
    for (Vec2 d : {Vec2{step, 0.0}, Vec2{-step, 0.0}, Vec2{0.0, step}, Vec2{0.0, -step}}) {
      Point cand = z + d;
      if (P.min_slack(cand) <= margin) continue;
      ExtendedLength a = alpha_dual_at(P, cand);
      if (a.finite && a.value < best) {
        best = a.value;
        z = cand;
        argmin = cand;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }

  // diameter midpoints realize the infimum; they may sit on the boundary
  for (const Point& mid : diameter_midpoints(P)) {
    ExtendedLength a = alpha_dual_at(P, mid);
    if (a.finite && a.value < best) {
      best = a.value;
      argmin = mid;
    }
  }

  return SantaloResult{best, argmin};
}

ProductReport product_report(const ConvexPolygon& P, int resolution) {
  ProductReport r = billiard_product(P);
  SantaloResult s = santalo_scan(P, resolution);
  r.santalo_min = s.min;
  r.santalo_argmin = s.argmin;
  r.grid_resolution = resolution;
  return r;
}

namespace {

double geometric_formula_for_vertex(const ConvexPolygon& T, Point z, int a_idx) {
  Point A = T.vertex(a_idx);
  Point B = T.vertex(a_idx + 1);
  Point C = T.vertex(a_idx + 2);
  // D = line through A and Z meeting line BC
  Vec2 az = z - A;
  Vec2 n_az = perp(az);
  Vec2 bc = C - B;
  Vec2 n_bc = perp(bc);
  auto D = intersect_lines(n_az, dot(n_az, A), n_bc, dot(n_bc, B));
  if (!D) throw NumericFailure("degenerate cevian through z");
  double inv = 1.0 / dist(A, z) + 1.0 / dist(z, *D);
  Vec2 zb = B - z, zc = C - z;
  double s = std::abs(cross(zb, zc)) / (norm(zb) * norm(zc));
  return 2.0 * inv * s;
}

}  // namespace

std::array<double, 3> alpha_dual_triangle_geometric_each(const ConvexPolygon& T, Point z) {
  if (!acute_dual_region_contains(T, z))
    throw NotInAcuteRegion("dual triangle is not acute for this center");
  return {geometric_formula_for_vertex(T, z, 0), geometric_formula_for_vertex(T, z, 1),
          geometric_formula_for_vertex(T, z, 2)};
}

double alpha_dual_triangle_geometric(const ConvexPolygon& T, Point z) {
  return alpha_dual_triangle_geometric_each(T, z)[0];
}

ConvexPolygon canonical_isosceles(double phi) {
  if (!(phi >= M_PI / 3.0 - 1e-12 && phi < M_PI / 2.0))
    throw BadAngle("base angle must lie in [pi/3, pi/2)");
  return ConvexPolygon({{std::cos(phi), 0.0}, {0.0, std::sin(phi)}, {-std::cos(phi), 0.0}});
}

double alpha_dual_isosceles(double phi, Point z) {
  ConvexPolygon T = canonical_isosceles(phi);
  if (!acute_dual_region_contains(T, z))
    throw NotInAcuteRegion("dual triangle is not acute for this center");
  Point a{0.0, std::sin(phi)}, b{std::cos(phi), 0.0}, c{-std::cos(phi), 0.0};
  return 2.0 * std::sin(2.0 * phi) / (dist(z, a) * dist(z, b) * dist(z, c));
}

}  // namespace billiards
