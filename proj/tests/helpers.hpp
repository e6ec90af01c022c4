#pragma once

#include <cmath>

#include "billiards/geom.hpp"

namespace billiards::testing {

inline ConvexPolygon unit_square() {
  return ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

inline ConvexPolygon equilateral_side1() {
  return ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}});
}

inline ConvexPolygon right_triangle() {
  return ConvexPolygon({{-1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
}

inline ConvexPolygon shrink(const ConvexPolygon& P, double factor) {
  Point c = P.centroid();
  std::vector<Point> vs;
  for (const Point& v : P.vertices()) vs.push_back(c + factor * (v - c));
  return ConvexPolygon(std::move(vs));
}

}  // namespace billiards::testing
