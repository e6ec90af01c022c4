#include "billiards/search.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "billiards/detail/nelder_mead.hpp"
#include "billiards/product.hpp"

namespace billiards {

ConvexPolygon regular_polygon(int n) {
  if (n < 3) throw BadParameter("regular polygon needs n >= 3");
  std::vector<Point> vs;
  vs.reserve(n);
  for (int k = 0; k < n; ++k) {
    double t = 2.0 * M_PI * k / n;
    vs.push_back({std::cos(t), std::sin(t)});
  }
  return ConvexPolygon(std::move(vs));
}

double alpha_regular_formula(int n) {
  if (n == 3) return 1.5 * std::sqrt(3.0);
  if (n % 2 == 1) return 2.0 * (1.0 + std::cos(M_PI / n));
  return 4.0 * std::cos(M_PI / n);
}

double beta_regular_formula(int n) {
  if (n == 3) return 12.0;
  if (n % 2 == 1) return 16.0 * std::cos(M_PI / (2.0 * n));
  return 16.0 * std::cos(M_PI / n);
}

std::vector<TableRow> regular_polygon_table(int n_max) {
  if (n_max < 3) throw BadParameter("table needs n_max >= 3");
  std::vector<TableRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    ProductReport r = billiard_product(regular_polygon(n));
    rows.push_back({n, r.alpha, r.diameter, r.beta});
  }
  return rows;
}

double isosceles_beta_bound(double phi) {
  double c = std::cos(0.5 * phi);
  return 32.0 * c * c * std::sin(0.5 * phi);
}

namespace {

std::optional<ConvexPolygon> triangle_from_base_angles(double theta, double phi) {
  if (theta <= 0.0 || phi <= 0.0 || theta + phi >= M_PI - 1e-6) return std::nullopt;
  double tt = std::tan(theta), tp = std::tan(phi);
  if (std::abs(tt + tp) < 1e-12) return std::nullopt;
  double x = tp / (tt + tp);
  double y = x * tt;
  if (!(y > 1e-9)) return std::nullopt;
  try {
    return ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {x, y}});
  } catch (const Error&) {
    return std::nullopt;
  }
}

double beta_of(const ConvexPolygon& P) { return billiard_product(P).beta; }

}  // namespace

SearchResult triangle_max_scan(int resolution) {
  if (resolution < 16) throw BadParameter("triangle_max_scan needs resolution >= 16");

  // sanity check on the isosceles bound curve: increasing up to the
  // equilateral apex angle
  double prev = -1.0;
  for (int i = 0; i <= 1024; ++i) {
    double v = isosceles_beta_bound(M_PI / 3.0 * i / 1024);
    if (v < prev - 1e-12) throw NumericFailure("isosceles bound curve is not monotone");
    prev = v;
  }

  long evals = 0;
  double lo = 0.01, hi = M_PI - 0.01;
  double best = -1.0, bt = 0.0, bp = 0.0;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      double theta = lo + (hi - lo) * (i + 0.5) / resolution;
      double phi = lo + (hi - lo) * (j + 0.5) / resolution;
      auto T = triangle_from_base_angles(theta, phi);
      if (!T) continue;
      ++evals;
      double b = beta_of(*T);
      if (b > best) {
        best = b;
        bt = theta;
        bp = phi;
      }
    }
  }

  double step = (hi - lo) / resolution;
  auto objective = [&](const std::vector<double>& x) {
    auto T = triangle_from_base_angles(x[0], x[1]);
    if (!T) return 1e9;
    return -beta_of(*T);
  };
  auto nm = detail::nelder_mead(objective, {bt, bp}, {step, step}, 400, 1e-10);
  evals += nm.evaluations;
  if (-nm.fx > best) {
    best = -nm.fx;
    bt = nm.x[0];
    bp = nm.x[1];
  }

  ConvexPolygon shape = *triangle_from_base_angles(bt, bp);
  double d = diameter(shape).length;
  SimilarityTransform unit_diam{1.0 / d, 0.0, {0.0, 0.0}, false};
  return SearchResult{best, apply_similarity(shape, unit_diam), {bt, bp}, evals};
}

namespace {

std::optional<ConvexPolygon> quad_edge_mode(double ga, double gb) {
  if (ga <= 1e-3 || ga >= M_PI / 2.0 - 1e-3 || gb <= 1e-3 || gb >= M_PI / 2.0 - 1e-3)
    return std::nullopt;
  Point A{-0.5, 0.0}, B{0.5, 0.0};
  double ta = std::min(1.0, 2.0 * std::cos(ga));
  double tb = std::min(1.0, 2.0 * std::cos(gb));
  Point C = A + ta * Vec2{std::cos(ga), std::sin(ga)};
  Point D = B + tb * Vec2{-std::cos(gb), std::sin(gb)};
  try {
    return convex_hull({A, B, C, D});
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<ConvexPolygon> quad_diag_mode(double ab, double ad, double lam) {
  if (ab <= 1e-3 || ab >= M_PI / 2.0 - 1e-3 || ad <= 1e-3 || ad >= M_PI / 2.0 - 1e-3)
    return std::nullopt;
  lam = std::clamp(lam, 0.0, 1.0);
  Point A{-0.5, 0.0}, C{0.5, 0.0};
  Vec2 ub{std::cos(ab), -std::sin(ab)};
  double rb = lam * std::min(1.0, 2.0 * std::cos(ab));
  Point B = A + rb * ub;
  Vec2 ud{-std::cos(ad), std::sin(ad)};
  double rd = std::min(1.0, 2.0 * std::cos(ad));
  // cap the second extension so the new diagonal BD stays within diameter 1
  double b2 = 2.0 * dot(ud, C - B);
  double c0 = norm2(C - B) - 1.0;
  double disc = b2 * b2 - 4.0 * c0;
  if (disc < 0.0) return std::nullopt;
  double rplus = 0.5 * (-b2 + std::sqrt(disc));
  rd = std::min(rd, rplus);
  if (rd <= 1e-6) return std::nullopt;
  Point D = C + rd * ud;
  try {
    return convex_hull({A, B, C, D});
  } catch (const Error&) {
    return std::nullopt;
  }
}

double quad_beta(const std::optional<ConvexPolygon>& Q) {
  if (!Q) return -1.0;
  double d = diameter(*Q).length;
  if (d > 1.0 + 1e-9 || d < 1.0 - 1e-9) return -1.0;  // reject off-diameter shapes
  return billiard_product(*Q).beta;
}

}  // namespace

SearchResult quad_search(QuadMode mode, int resolution) {
  if (resolution < 16) throw BadParameter("quad_search needs resolution >= 16");
  long evals = 0;
  double best = -1.0;
  std::vector<double> bx;

  if (mode == QuadMode::EdgeDiameter) {
    double lo = 0.02, hi = M_PI / 2.0 - 0.02;
    for (int i = 0; i < resolution; ++i) {
      for (int j = 0; j < resolution; ++j) {
        double ga = lo + (hi - lo) * (i + 0.5) / resolution;
        double gb = lo + (hi - lo) * (j + 0.5) / resolution;
        ++evals;
        double b = quad_beta(quad_edge_mode(ga, gb));
        if (b > best) {
          best = b;
          bx = {ga, gb};
        }
      }
    }
    double step = (hi - lo) / resolution;
    auto objective = [&](const std::vector<double>& x) {
      double b = quad_beta(quad_edge_mode(x[0], x[1]));
      return b < 0.0 ? 1e9 : -b;
    };
    auto nm = detail::nelder_mead(objective, bx, {step, step}, 400, 1e-10);
    evals += nm.evaluations;
    if (-nm.fx > best) {
      best = -nm.fx;
      bx = nm.x;
    }
  } else {
    double lo = 0.02, hi = M_PI / 2.0 - 0.02;
    int lam_steps = 9;
    for (int i = 0; i < resolution; ++i) {
      for (int j = 0; j < resolution; ++j) {
        for (int k = 1; k <= lam_steps; ++k) {
          double ab = lo + (hi - lo) * (i + 0.5) / resolution;
          double ad = lo + (hi - lo) * (j + 0.5) / resolution;
          double lam = static_cast<double>(k) / lam_steps;
          ++evals;
          double b = quad_beta(quad_diag_mode(ab, ad, lam));
          if (b > best) {
            best = b;
            bx = {ab, ad, lam};
          }
        }
      }
    }
    double step = (hi - lo) / resolution;
    auto objective = [&](const std::vector<double>& x) {
      double b = quad_beta(quad_diag_mode(x[0], x[1], x[2]));
      return b < 0.0 ? 1e9 : -b;
    };
    auto nm = detail::nelder_mead(objective, bx, {step, step, 1.0 / lam_steps}, 400, 1e-10);
    evals += nm.evaluations;
    if (-nm.fx > best) {
      best = -nm.fx;
      bx = nm.x;
    }
  }

  double conjectured = 8.0 * std::sqrt(3.0) * std::cos(M_PI / 12.0);
  if (best > conjectured + 1e-6) {
    std::fprintf(stderr,
                 "WARNING: quad_search found beta %.12g exceeding the conjectured maximum %.12g\n",
                 best, conjectured);
  }

  std::optional<ConvexPolygon> shape =
      mode == QuadMode::EdgeDiameter ? quad_edge_mode(bx[0], bx[1]) : quad_diag_mode(bx[0], bx[1], bx[2]);
  if (!shape) throw NumericFailure("quad_search lost its best shape");
  return SearchResult{best, *shape, bx, evals};
}

ConvexPolygon truncate_regular_odd(int n, double eps) {
  if (n < 3 || n % 2 == 0) throw BadParameter("n must be odd and >= 3");
  ConvexPolygon R = regular_polygon(n);
  // deepest admissible cut: vertex to the chord between its neighbours
  double depth_max = 1.0 - std::cos(2.0 * M_PI / n);
  if (!(eps > 0.0) || eps >= 0.999 * depth_max)
    throw BadParameter("cut depth out of range");

  // cut the vertex at angle 0 with a vertical chord
  double cx = 1.0 - eps;
  std::vector<Point> vs;
  for (int k = 0; k < n; ++k) {
    double t = 2.0 * M_PI * k / n;
    vs.push_back({std::cos(t), std::sin(t)});
  }
  std::vector<Point> out;
  for (int k = 0; k < n; ++k) {
    Point a = vs[k], b = vs[(k + 1) % n];
    if (a.x <= cx) out.push_back(a);
    if ((a.x - cx) * (b.x - cx) < 0.0) {
      double t = (cx - a.x) / (b.x - a.x);
      out.push_back(a + t * (b - a));
    }
  }
  return ConvexPolygon(std::move(out));
}

ConvexPolygon reuleaux_polygon(double width, int n) {
  if (!(width > 0.0)) throw BadParameter("width must be positive");
  if (n < 30 || n % 3 != 0) throw BadParameter("n must be >= 30 and divisible by 3");
  // arc i is centered at corner i and spans between the two other corners
  std::vector<Point> corners;
  double R = width / std::sqrt(3.0);
  for (int i = 0; i < 3; ++i) {
    double t = M_PI / 2.0 + 2.0 * M_PI * i / 3.0;
    corners.push_back({R * std::cos(t), R * std::sin(t)});
  }
  int per_arc = n / 3;
  std::vector<Point> vs;
  vs.reserve(n);
  for (int i = 0; i < 3; ++i) {
    Point c = corners[i];
    Point from = corners[(i + 1) % 3];
    double a0 = angle_of(from - c);
    for (int k = 0; k < per_arc; ++k) {
      double t = a0 + (M_PI / 3.0) * k / per_arc;
      vs.push_back(c + width * unit_from_angle(t));
    }
  }
  return ConvexPolygon(std::move(vs));
}

}  // namespace billiards
