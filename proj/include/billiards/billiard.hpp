#pragma once

#include <vector>

#include "billiards/geom.hpp"

namespace billiards {

enum class OrbitKind { TwoBounce, ThreeBounce };

// Closed generalized billiard trajectory.  At every bounce point the stored
// normal is an outward unit normal of some supporting line there, and the
// incoming/outgoing directions make equal angles with that line.  A
// two-bounce orbit is traversed back and forth, so its length is twice the
// chord length.
struct Orbit {
  OrbitKind kind = OrbitKind::TwoBounce;
  std::vector<Point> points;
  std::vector<Vec2> normals;
  double length = 0.0;
};

// Shortest closed trajectory of a triangle: the Fagnano orbit through the
// altitude feet when the triangle is acute, otherwise the doubled altitude
// from the obtuse (or right) vertex.
Orbit alpha_triangle(const ConvexPolygon& T);

// The altitude-feet 3-orbit of a strictly acute triangle.
Orbit fagnano_orbit(const ConvexPolygon& T);

// Shortest closed trajectory of a convex polygon.  Minimizes over the
// minimal-width double normal, the Fagnano orbits of all acute triangles cut
// out by edge-line triples whose altitude feet land on the matching edges,
// and vertex-bounce 3-orbits found by rotating supporting lines inside
// vertex normal cones (see alpha_polygon in billiard.cpp).
Orbit alpha_polygon(const ConvexPolygon& P);

// Independent discretized check: minimum perimeter over all pairs/triples of
// an N-point boundary grid that cannot be translated into the interior.
double alpha_bruteforce(const ConvexPolygon& P, int N);

bool validate_orbit(const ConvexPolygon& P, const Orbit& o, double tol = 1e-7);

}  // namespace billiards
