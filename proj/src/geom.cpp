#include "billiards/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "billiards/detail/rng.hpp"

namespace billiards {

Vec2 normalized(Vec2 a) {
  double n = norm(a);
  if (n < 1e-300) throw DegenerateInput("cannot normalize zero vector");
  return a / n;
}

double wrap_angle(double t) {
  double two_pi = 2.0 * M_PI;
  t = std::fmod(t, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

double distance_point_segment(Point p, Point a, Point b) {
  Vec2 ab = b - a;
  double len2 = norm2(ab);
  if (len2 < 1e-300) return dist(p, a);
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + t * ab);
}

double distance_segments(Point a0, Point a1, Point b0, Point b1) {
  auto seg_intersect = [](Point p, Point q, Point r, Point s) {
    double d1 = cross(q - p, r - p);
    double d2 = cross(q - p, s - p);
    double d3 = cross(s - r, p - r);
    double d4 = cross(s - r, q - r);
    return d1 * d2 <= 0.0 && d3 * d4 <= 0.0;
  };
  if (seg_intersect(a0, a1, b0, b1)) return 0.0;
  return std::min(std::min(distance_point_segment(a0, b0, b1), distance_point_segment(a1, b0, b1)),
                  std::min(distance_point_segment(b0, a0, a1), distance_point_segment(b1, a0, a1)));
}

std::optional<Point> intersect_lines(Vec2 n1, double c1, Vec2 n2, double c2) {
  double det = cross(n1, n2);
  if (std::abs(det) < 1e-14) return std::nullopt;
  return Point{(c1 * n2.y - c2 * n1.y) / det, (n1.x * c2 - n2.x * c1) / det};
}

Direction::Direction(Vec2 v) : u_(normalized(v)) {}
Direction::Direction(double angle_radians) : u_(unit_from_angle(angle_radians)) {}

Point SimilarityTransform::apply(Point p) const {
  if (scale <= 0.0) throw BadParameter("similarity scale must be positive");
  Point q = reflect ? Point{p.x, -p.y} : p;
  double c = std::cos(rotation), s = std::sin(rotation);
  return {scale * (c * q.x - s * q.y) + translation.x, scale * (s * q.x + c * q.y) + translation.y};
}

bool AngleInterval::contains(double angle, double tol) const {
  double d = wrap_angle(angle - lo);
  if (d > M_PI) d -= 2.0 * M_PI;  // allow slightly-below-lo angles
  return d >= -tol && d <= width + tol;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw DegenerateInput("polygon needs at least 3 vertices");
  for (const Point& v : vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) throw DegenerateInput("non-finite vertex");
  }

  double signed_area = 0.0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % vertices.size()];
    signed_area += cross(a, b);
  }
  signed_area *= 0.5;
  if (signed_area < 0.0) {
    std::reverse(vertices.begin(), vertices.end());
    signed_area = -signed_area;
  }
  if (signed_area <= 1e-12) throw DegenerateInput("polygon area below 1e-12");

  double lox = vertices[0].x, hix = lox, loy = vertices[0].y, hiy = loy;
  for (const Point& v : vertices) {
    lox = std::min(lox, v.x);
    hix = std::max(hix, v.x);
    loy = std::min(loy, v.y);
    hiy = std::max(hiy, v.y);
  }
  scale_ = std::hypot(hix - lox, hiy - loy);
  double merge_tol = 1e-12 * scale_ * scale_;

  // merge collinear runs and duplicate points; reject reflex corners
  std::vector<Point> vs = std::move(vertices);
  bool changed = true;
  while (changed && vs.size() >= 3) {
    changed = false;
    std::vector<Point> out;
    out.reserve(vs.size());
    int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i) {
      Point prev = vs[(i + n - 1) % n];
      Point cur = vs[i];
      Point next = vs[(i + 1) % n];
      if (dist(cur, next) <= 1e-12 * scale_) {
        changed = true;
        continue;  // duplicate of the next vertex
      }
      double c = cross(cur - prev, next - cur);
      if (c < -merge_tol) throw DegenerateInput("polygon is not convex");
      if (c <= merge_tol) {
        changed = true;
        continue;  // collinear, drop
      }
      out.push_back(cur);
    }
    vs = std::move(out);
  }
  if (vs.size() < 3) throw DegenerateInput("polygon degenerates to a segment");

  // canonical start: lexicographically smallest vertex
  int start = 0;
  for (int i = 1; i < static_cast<int>(vs.size()); ++i) {
    if (vs[i].x < vs[start].x || (vs[i].x == vs[start].x && vs[i].y < vs[start].y)) start = i;
  }
  std::rotate(vs.begin(), vs.begin() + start, vs.end());

  verts_ = std::move(vs);
  int n = static_cast<int>(verts_.size());
  normals_.resize(n);
  offsets_.resize(n);
  for (int i = 0; i < n; ++i) {
    Vec2 e = verts_[(i + 1) % n] - verts_[i];
    Vec2 nrm = normalized(Vec2{e.y, -e.x});
    normals_[i] = nrm;
    offsets_[i] = dot(nrm, verts_[i]);
  }
}

double ConvexPolygon::area() const {
  double s = 0.0;
  int n = size();
  for (int i = 0; i < n; ++i) s += cross(verts_[i], verts_[(i + 1) % n]);
  return 0.5 * s;
}

double ConvexPolygon::perimeter() const {
  double s = 0.0;
  int n = size();
  for (int i = 0; i < n; ++i) s += dist(verts_[i], verts_[(i + 1) % n]);
  return s;
}

Point ConvexPolygon::centroid() const {
  double a = 0.0;
  Vec2 c{0.0, 0.0};
  int n = size();
  for (int i = 0; i < n; ++i) {
    double w = cross(verts_[i], verts_[(i + 1) % n]);
    a += w;
    c = c + w * (verts_[i] + verts_[(i + 1) % n]);
  }
  return c / (3.0 * a);
}

double ConvexPolygon::support(Vec2 u) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& v : verts_) best = std::max(best, dot(u, v));
  return best;
}

double ConvexPolygon::min_slack(Point p) const {
  double s = std::numeric_limits<double>::infinity();
  int n = size();
  for (int i = 0; i < n; ++i) s = std::min(s, offsets_[i] - dot(normals_[i], p));
  return s;
}

double ConvexPolygon::boundary_distance(Point p) const {
  double d = std::numeric_limits<double>::infinity();
  int n = size();
  for (int i = 0; i < n; ++i) d = std::min(d, distance_point_segment(p, edge_start(i), edge_end(i)));
  return d;
}

AngleInterval ConvexPolygon::vertex_normal_cone(int i) const {
  double a0 = angle_of(edge_normal(i - 1));
  double a1 = angle_of(edge_normal(i));
  double w = wrap_angle(a1 - a0);
  return AngleInterval{a0, w};
}

std::vector<Point> ConvexPolygon::vertices_from_halfplanes() const {
  std::vector<Point> out;
  int n = size();
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto p = intersect_lines(edge_normal(i - 1), edge_offset(i - 1), edge_normal(i), edge_offset(i));
    if (!p) throw NumericFailure("consecutive edges are parallel");
    out.push_back(*p);
  }
  return out;
}

ConvexPolygon convex_hull(const std::vector<Point>& points) {
  if (points.size() < 3) throw DegenerateInput("hull needs at least 3 points");
  std::vector<Point> pts = points;
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point a, Point b) { return dist(a, b) <= 1e-12; }),
            pts.end());
  if (pts.size() < 3) throw DegenerateInput("fewer than 3 distinct points");

  double span = dist(pts.front(), pts.back());
  for (const Point& p : pts) span = std::max(span, std::max(dist(p, pts.front()), dist(p, pts.back())));
  double turn_tol = 1e-12 * span * span;

  auto build = [&](auto begin, auto end) {
    std::vector<Point> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross(chain[chain.size() - 1] - chain[chain.size() - 2], *it - chain.back()) <= turn_tol)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Point> lower = build(pts.begin(), pts.end());
  std::vector<Point> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() < 3) throw DegenerateInput("points are collinear");
  return ConvexPolygon(std::move(lower));
}

DiameterResult diameter(const ConvexPolygon& P) {
  DiameterResult r;
  double best2 = -1.0;
  int n = P.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d2 = norm2(P.vertex(i) - P.vertex(j));
      if (d2 > best2) {
        best2 = d2;
        r.indices = {i, j};
      }
    }
  }
  r.length = std::sqrt(best2);
  r.endpoints = {P.vertex(r.indices.first), P.vertex(r.indices.second)};
  return r;
}

double width(const ConvexPolygon& P, const Direction& d) {
  Vec2 u = d.unit();
  return P.support(u) + P.support(-u);
}

MinWidthResult min_width(const ConvexPolygon& P) {
  int n = P.size();
  double best = std::numeric_limits<double>::infinity();
  int best_edge = 0, best_far = 0;
  for (int i = 0; i < n; ++i) {
    Vec2 nrm = P.edge_normal(i);
    double lo = std::numeric_limits<double>::infinity();
    int far = 0;
    for (int j = 0; j < n; ++j) {
      double v = dot(nrm, P.vertex(j));
      if (v < lo) {
        lo = v;
        far = j;
      }
    }
    double w = P.edge_offset(i) - lo;
    if (w < best) {
      best = w;
      best_edge = i;
      best_far = far;
    }
  }
  return MinWidthResult{best, Direction(P.edge_normal(best_edge)), best_edge, best_far};
}

namespace {

double directed_hausdorff(const ConvexPolygon& P, const ConvexPolygon& Q) {
  double worst = 0.0;
  for (const Point& v : P.vertices()) {
    double d = Q.contains(v, 0.0) ? 0.0 : Q.boundary_distance(v);
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const ConvexPolygon& P, const ConvexPolygon& Q) {
  return std::max(directed_hausdorff(P, Q), directed_hausdorff(Q, P));
}

double translation_slack(const ConvexPolygon& P, const std::vector<Point>& pts) {
  if (pts.empty()) throw DegenerateInput("no points given");
  int m = P.size();
  // constraints <n_j, t> + s <= c_j with c_j = b_j - max_i <n_j, p_i>;
  // only the tightest point per edge matters
  std::vector<double> c(m);
  for (int j = 0; j < m; ++j) {
    double hi = -std::numeric_limits<double>::infinity();
    for (const Point& p : pts) hi = std::max(hi, dot(P.edge_normal(j), p));
    c[j] = P.edge_offset(j) - hi;
  }
  double feas_tol = 1e-12 * std::max(1.0, P.scale());
  double best = -std::numeric_limits<double>::infinity();
  // maximize s over (t_x, t_y, s); optimum sits on three active constraints
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int d = b + 1; d < m; ++d) {
        Vec2 na = P.edge_normal(a), nb = P.edge_normal(b), nd = P.edge_normal(d);
        // solve [na 1; nb 1; nd 1] (t, s) = (c_a, c_b, c_d)
        double det = na.x * (nb.y - nd.y) - na.y * (nb.x - nd.x) + (nb.x * nd.y - nb.y * nd.x);
        if (std::abs(det) < 1e-12) continue;
        double ca = c[a], cb = c[b], cd = c[d];
        double tx = (ca * (nb.y - nd.y) - na.y * (cb - cd) + (cb * nd.y - cd * nb.y)) / det;
        double ty = (na.x * (cb - cd) - ca * (nb.x - nd.x) + (nb.x * cd - nd.x * cb)) / det;
        double s = (na.x * (nb.y * cd - nd.y * cb) - na.y * (nb.x * cd - nd.x * cb) +
                    ca * (nb.x * nd.y - nb.y * nd.x)) /
                   det;
        if (s <= best) continue;
        Vec2 t{tx, ty};
        bool ok = true;
        for (int j = 0; j < m; ++j) {
          if (dot(P.edge_normal(j), t) + s > c[j] + feas_tol) {
            ok = false;
            break;
          }
        }
        if (ok) best = s;
      }
    }
  }
  if (!std::isfinite(best)) throw NumericFailure("translation LP found no basic solution");
  return best;
}

bool can_translate_into_interior(const ConvexPolygon& P, const std::vector<Point>& pts, double tol) {
  return translation_slack(P, pts) > tol;
}

ConvexPolygon steiner_symmetrize(const ConvexPolygon& P, const Line& axis) {
  Vec2 u = normalized(axis.dir);
  Vec2 v = perp(u);
  int n = P.size();

  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = dot(P.vertex(i) - axis.point, u);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [&](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, P.scale()); }),
           xs.end());

  // chord length of P over the axis coordinate, evaluated at each breakpoint
  auto chord = [&](double x) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double tol = 1e-12 * std::max(1.0, P.scale());
    for (int i = 0; i < n; ++i) {
      double xa = dot(P.edge_start(i) - axis.point, u);
      double xb = dot(P.edge_end(i) - axis.point, u);
      double ya = dot(P.edge_start(i) - axis.point, v);
      double yb = dot(P.edge_end(i) - axis.point, v);
      if (std::abs(xa - x) <= tol) {
        lo = std::min(lo, ya);
        hi = std::max(hi, ya);
      }
      if ((xa - x) * (xb - x) < 0.0) {
        double t = (x - xa) / (xb - xa);
        double y = ya + t * (yb - ya);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
    }
    return std::pair<double, double>{lo, hi};
  };

  std::vector<Point> out;
  out.reserve(2 * xs.size());
  std::vector<double> half(xs.size());
  for (size_t k = 0; k < xs.size(); ++k) {
    auto [lo, hi] = chord(xs[k]);
    half[k] = std::max(0.0, hi - lo) * 0.5;
  }
  for (size_t k = 0; k < xs.size(); ++k) out.push_back(axis.point + xs[k] * u + half[k] * v);
  for (size_t k = xs.size(); k-- > 0;) {
    if (half[k] > 0.0) out.push_back(axis.point + xs[k] * u - half[k] * v);
  }
  return ConvexPolygon(std::move(out));
}

ConvexPolygon apply_similarity(const ConvexPolygon& P, const SimilarityTransform& T) {
  std::vector<Point> vs;
  vs.reserve(P.size());
  for (const Point& p : P.vertices()) vs.push_back(T.apply(p));
  return ConvexPolygon(std::move(vs));
}

ConvexPolygon random_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw DegenerateInput("random_polygon needs n >= 3");
  detail::Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<double> angles(n);
    for (double& a : angles) a = rng.uniform(0.0, 2.0 * M_PI);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    pts.reserve(n);
    for (double a : angles) {
      double r = rng.uniform(0.75, 1.25);
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    try {
      return convex_hull(pts);
    } catch (const DegenerateInput&) {
      continue;
    }
  }
  throw DegenerateInput("random_polygon failed to produce a hull");
}

}  // namespace billiards
