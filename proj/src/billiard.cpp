#include "billiards/billiard.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <set>

namespace billiards {

namespace {

std::array<double, 3> triangle_angles(const ConvexPolygon& T) {
  std::array<double, 3> a{};
  for (int i = 0; i < 3; ++i) {
    Vec2 u = T.vertex(i - 1) - T.vertex(i);
    Vec2 v = T.vertex(i + 1) - T.vertex(i);
    double c = dot(u, v) / (norm(u) * norm(v));
    a[i] = std::acos(std::clamp(c, -1.0, 1.0));
  }
  return a;
}

Point project_on_line(Point p, Vec2 n, double c) { return p + (c - dot(n, p)) * n; }

double polyline_loop_length(const std::vector<Point>& pts) {
  double s = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) s += dist(pts[i], pts[(i + 1) % pts.size()]);
  return s;
}

Orbit make_two_bounce(Point on_edge, Point far_vertex, Vec2 edge_normal) {
  Orbit o;
  o.kind = OrbitKind::TwoBounce;
  o.points = {on_edge, far_vertex};
  o.normals = {edge_normal, -edge_normal};
  o.length = 2.0 * dist(on_edge, far_vertex);
  return o;
}

Orbit min_width_double_normal(const ConvexPolygon& P) {
  int m = P.size();
  std::vector<std::pair<double, int>> widths;
  widths.reserve(m);
  for (int i = 0; i < m; ++i) {
    Vec2 n = P.edge_normal(i);
    double lo = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) lo = std::min(lo, dot(n, P.vertex(j)));
    widths.push_back({P.edge_offset(i) - lo, i});
  }
  std::sort(widths.begin(), widths.end());
  double tol = 1e-7 * std::max(1.0, P.scale());
  for (auto [w, i] : widths) {
    Vec2 n = P.edge_normal(i);
    double lo = std::numeric_limits<double>::infinity();
    int far = 0;
    for (int j = 0; j < m; ++j) {
      double v = dot(n, P.vertex(j));
      if (v < lo) {
        lo = v;
        far = j;
      }
    }
    Point foot = P.vertex(far) + w * n;
    Vec2 e = P.edge_vec(i);
    double len = norm(e);
    double s = dot(foot - P.edge_start(i), e / len);
    if (s >= -tol && s <= len + tol) {
      foot = P.edge_start(i) + std::clamp(s, 0.0, len) * (e / len);
      return make_two_bounce(foot, P.vertex(far), n);
    }
  }
  throw NumericFailure("no realizable minimal-width double normal");
}

// Triangle cut out by three oriented lines <n_k, x> = c_k (n_k outward) and
// the feet of its altitudes.  valid is false when the lines do not bound a
// triangle with these outward normals or when the triangle is not acute
// (feet must fall strictly inside the opposite sides).
struct TripleOrbit {
  bool valid = false;
  std::array<Point, 3> corners{};  // corner k is opposite line k
  std::array<Point, 3> feet{};
  double length = 0.0;
};

TripleOrbit fagnano_of_lines(const std::array<Vec2, 3>& n, const std::array<double, 3>& c,
                             double scale) {
  TripleOrbit r;
  double eps = 1e-12 * scale;
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    auto X = intersect_lines(n[i], c[i], n[j], c[j]);
    if (!X) return r;
    r.corners[k] = *X;
  }
  for (int k = 0; k < 3; ++k) {
    if (dot(n[k], r.corners[k]) >= c[k] - eps) return r;  // normals inconsistent
    r.feet[k] = project_on_line(r.corners[k], n[k], c[k]);
  }
  // acute iff every altitude foot is strictly inside the opposite side
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    Vec2 side = r.corners[j] - r.corners[i];
    double L2 = norm2(side);
    if (L2 < eps * eps) return r;
    double t = dot(r.feet[k] - r.corners[i], side) / L2;
    if (t <= 1e-12 || t >= 1.0 - 1e-12) return r;
  }
  r.valid = true;
  r.length = dist(r.feet[0], r.feet[1]) + dist(r.feet[1], r.feet[2]) + dist(r.feet[2], r.feet[0]);
  return r;
}

}  // namespace

Orbit alpha_triangle(const ConvexPolygon& T) {
  if (T.size() != 3) throw DegenerateInput("expected a triangle");
  auto ang = triangle_angles(T);
  int big = 0;
  for (int i = 1; i < 3; ++i) {
    if (ang[i] > ang[big]) big = i;
  }
  if (ang[big] < M_PI / 2.0 - kTol) return fagnano_orbit(T);
  // altitude from the obtuse (or right) vertex to the opposite side
  int opposite = big + 1;
  Vec2 n = T.edge_normal(opposite);
  Point foot = project_on_line(T.vertex(big), n, T.edge_offset(opposite));
  return make_two_bounce(foot, T.vertex(big), n);
}

Orbit fagnano_orbit(const ConvexPolygon& T) {
  if (T.size() != 3) throw DegenerateInput("expected a triangle");
  auto ang = triangle_angles(T);
  if (*std::max_element(ang.begin(), ang.end()) >= M_PI / 2.0 - kTol)
    throw NotAcute("Fagnano orbit requires a strictly acute triangle");
  Orbit o;
  o.kind = OrbitKind::ThreeBounce;
  for (int i = 0; i < 3; ++i) {
    int opposite = i + 1;
    Vec2 n = T.edge_normal(opposite);
    o.points.push_back(project_on_line(T.vertex(i), n, T.edge_offset(opposite)));
    o.normals.push_back(n);
  }
  o.length = polyline_loop_length(o.points);
  return o;
}

namespace {

// boundary feature of a polygon: an edge (fixed supporting line) or a vertex
// (supporting line free to rotate in the normal cone)
struct Feat {
  bool is_vertex = false;
  int idx = 0;
  double rep = 0.0;   // representative normal angle
  double half = 0.0;  // half-width of the admissible normal-angle interval
  double cone_lo = 0.0;
  double cone_w = 0.0;
};

struct ComboContext {
  const ConvexPolygon* P = nullptr;
  std::array<int, 3> feat;  // feature ids: 0..m-1 edges, m..2m-1 vertices
  std::array<bool, 3> is_vertex{};
  std::array<int, 3> idx{};
  int n_vertex = 0;
};

struct ComboEval {
  TripleOrbit orb;
  std::array<double, 3> g{};  // tangential offset foot - vertex, per slot
  bool feasible = false;
};

ComboEval eval_combo(const ComboContext& ctx, const std::array<double, 3>& theta, double scale) {
  ComboEval ev;
  std::array<Vec2, 3> n;
  std::array<double, 3> c;
  const ConvexPolygon& P = *ctx.P;
  for (int t = 0; t < 3; ++t) {
    if (ctx.is_vertex[t]) {
      n[t] = unit_from_angle(theta[t]);
      c[t] = dot(n[t], P.vertex(ctx.idx[t]));
    } else {
      n[t] = P.edge_normal(ctx.idx[t]);
      c[t] = P.edge_offset(ctx.idx[t]);
    }
  }
  ev.orb = fagnano_of_lines(n, c, scale);
  if (!ev.orb.valid) return ev;
  for (int t = 0; t < 3; ++t) {
    if (ctx.is_vertex[t]) ev.g[t] = dot(perp(n[t]), ev.orb.feet[t] - P.vertex(ctx.idx[t]));
  }
  ev.feasible = true;
  return ev;
}

// candidate orbit from a solved combo, nullopt when any edge foot leaves its
// edge or a vertex residual is out of tolerance
std::optional<Orbit> finish_combo(const ComboContext& ctx, const std::array<double, 3>& theta,
                                  const ComboEval& ev, double tol_len) {
  const ConvexPolygon& P = *ctx.P;
  Orbit o;
  o.kind = OrbitKind::ThreeBounce;
  o.points.resize(3);
  o.normals.resize(3);
  for (int t = 0; t < 3; ++t) {
    if (ctx.is_vertex[t]) {
      if (std::abs(ev.g[t]) > tol_len) return std::nullopt;
      o.points[t] = P.vertex(ctx.idx[t]);
      o.normals[t] = unit_from_angle(theta[t]);
    } else {
      Vec2 e = P.edge_vec(ctx.idx[t]);
      double len = norm(e);
      double s = dot(ev.orb.feet[t] - P.edge_start(ctx.idx[t]), e / len);
      if (s < -tol_len || s > len + tol_len) return std::nullopt;
      o.points[t] = P.edge_start(ctx.idx[t]) + std::clamp(s, 0.0, len) * (e / len);
      o.normals[t] = P.edge_normal(ctx.idx[t]);
    }
  }
  o.length = polyline_loop_length(o.points);
  return o;
}

void solve_combo(const ComboContext& ctx, const std::vector<Feat>& feats, double scale,
                 double tol_len, Orbit& best) {
  // unknown angles live in the vertex normal cones
  std::array<double, 3> lo{}, hi{};
  for (int t = 0; t < 3; ++t) {
    if (ctx.is_vertex[t]) {
      const Feat& f = feats[ctx.feat[t]];
      lo[t] = f.cone_lo;
      hi[t] = f.cone_lo + f.cone_w;
    }
  }
  double res_tol = 1e-10 * scale;

  if (ctx.n_vertex == 1) {
    int t = 0;
    while (!ctx.is_vertex[t]) ++t;
    double w = hi[t] - lo[t];
    int K = std::clamp(static_cast<int>(w / 0.02) + 2, 5, 33);
    std::array<double, 3> th{};
    double prev_g = 0.0, prev_th = 0.0;
    bool prev_ok = false;
    for (int k = 0; k < K; ++k) {
      th[t] = lo[t] + w * k / (K - 1);
      ComboEval ev = eval_combo(ctx, th, scale);
      if (!ev.feasible) {
        prev_ok = false;
        continue;
      }
      if (prev_ok && (prev_g <= 0.0) != (ev.g[t] <= 0.0)) {
        double a = prev_th, b = th[t], ga = prev_g;
        bool bad = false;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (a + b);
          th[t] = mid;
          ComboEval em = eval_combo(ctx, th, scale);
          if (!em.feasible) {
            bad = true;
            break;
          }
          if ((ga <= 0.0) != (em.g[t] <= 0.0)) {
            b = mid;
          } else {
            a = mid;
            ga = em.g[t];
          }
        }
        if (!bad) {
          th[t] = 0.5 * (a + b);
          ComboEval ef = eval_combo(ctx, th, scale);
          if (ef.feasible && std::abs(ef.g[t]) <= res_tol) {
            if (auto orb = finish_combo(ctx, th, ef, tol_len)) {
              if (orb->length < best.length) best = *orb;
            }
          }
        }
      }
      prev_ok = true;
      prev_g = ev.g[t];
      prev_th = th[t];
    }
    return;
  }

  // 2 or 3 unknowns: coarse grid, then damped Newton from the best starts
  std::vector<int> vslots;
  for (int t = 0; t < 3; ++t) {
    if (ctx.is_vertex[t]) vslots.push_back(t);
  }
  int d = static_cast<int>(vslots.size());
  int G = d == 2 ? 6 : 4;
  struct Start {
    std::array<double, 3> th;
    double score;
  };
  std::vector<Start> starts;
  std::array<int, 3> g_idx{};
  int total = 1;
  for (int i = 0; i < d; ++i) total *= G;
  for (int cell = 0; cell < total; ++cell) {
    int rem = cell;
    std::array<double, 3> th{};
    for (int i = 0; i < d; ++i) {
      g_idx[i] = rem % G;
      rem /= G;
      int t = vslots[i];
      th[t] = lo[t] + (hi[t] - lo[t]) * (g_idx[i] + 0.5) / G;
    }
    ComboEval ev = eval_combo(ctx, th, scale);
    if (!ev.feasible) continue;
    double sc = 0.0;
    for (int t : vslots) sc += ev.g[t] * ev.g[t];
    starts.push_back({th, sc});
  }
  std::sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) { return a.score < b.score; });
  if (starts.size() > 4) starts.resize(4);

  for (const Start& s0 : starts) {
    std::array<double, 3> th = s0.th;
    ComboEval ev = eval_combo(ctx, th, scale);
    if (!ev.feasible) continue;
    for (int iter = 0; iter < 40; ++iter) {
      double gmax = 0.0;
      for (int t : vslots) gmax = std::max(gmax, std::abs(ev.g[t]));
      if (gmax <= res_tol) break;
      // finite-difference Jacobian
      double h = 1e-7;
      double J[3][3] = {};
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) {
        std::array<double, 3> thp = th;
        thp[vslots[i]] += h;
        ComboEval evp = eval_combo(ctx, thp, scale);
        if (!evp.feasible) {
          thp[vslots[i]] -= 2.0 * h;
          evp = eval_combo(ctx, thp, scale);
          if (!evp.feasible) {
            ok = false;
            break;
          }
          for (int r = 0; r < d; ++r) J[r][i] = (ev.g[vslots[r]] - evp.g[vslots[r]]) / h;
        } else {
          for (int r = 0; r < d; ++r) J[r][i] = (evp.g[vslots[r]] - ev.g[vslots[r]]) / h;
        }
      }
      if (!ok) break;
      // solve J * delta = -g
      std::array<double, 3> delta{};
      if (d == 2) {
        double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
        if (std::abs(det) < 1e-14) break;
        double b0 = -ev.g[vslots[0]], b1 = -ev.g[vslots[1]];
        delta[0] = (b0 * J[1][1] - b1 * J[0][1]) / det;
        delta[1] = (J[0][0] * b1 - J[1][0] * b0) / det;
      } else {
        double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                     J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                     J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
        if (std::abs(det) < 1e-16) break;
        double b[3] = {-ev.g[vslots[0]], -ev.g[vslots[1]], -ev.g[vslots[2]]};
        delta[0] = (b[0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                    J[0][1] * (b[1] * J[2][2] - J[1][2] * b[2]) +
                    J[0][2] * (b[1] * J[2][1] - J[1][1] * b[2])) /
                   det;
        delta[1] = (J[0][0] * (b[1] * J[2][2] - J[1][2] * b[2]) - b[0] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                    J[0][2] * (J[1][0] * b[2] - b[1] * J[2][0])) /
                   det;
        delta[2] = (J[0][0] * (J[1][1] * b[2] - b[1] * J[2][1]) - J[0][1] * (J[1][0] * b[2] - b[1] * J[2][0]) +
                    b[0] * (J[1][0] * J[2][1] - J[1][1] * J[2][0])) /
                   det;
      }
      // damped, box-clamped update
      double step_scale = 1.0;
      bool improved = false;
      for (int bt = 0; bt < 3; ++bt) {
        std::array<double, 3> thn = th;
        for (int i = 0; i < d; ++i) {
          int t = vslots[i];
          double wbox = hi[t] - lo[t];
          double dlt = std::clamp(step_scale * delta[i], -0.5 * wbox - 1e-3, 0.5 * wbox + 1e-3);
          thn[t] = std::clamp(th[t] + dlt, lo[t] - 0.02 * wbox, hi[t] + 0.02 * wbox);
        }
        ComboEval evn = eval_combo(ctx, thn, scale);
        if (evn.feasible) {
          double gn = 0.0, go = 0.0;
          for (int t : vslots) {
            gn = std::max(gn, std::abs(evn.g[t]));
            go = std::max(go, std::abs(ev.g[t]));
          }
          if (gn < go) {
            th = thn;
            ev = evn;
            improved = true;
            break;
          }
        }
        step_scale *= 0.5;
      }
      if (!improved) break;
    }
    double gmax = 0.0;
    for (int t : vslots) gmax = std::max(gmax, std::abs(ev.g[t]));
    if (ev.feasible && gmax <= res_tol) {
      // solution must stay inside the cones
      bool inside = true;
      for (int t : vslots) {
        if (th[t] < lo[t] - 1e-9 || th[t] > hi[t] + 1e-9) inside = false;
      }
      if (inside) {
        if (auto orb = finish_combo(ctx, th, ev, tol_len)) {
          if (orb->length < best.length) best = *orb;
        }
      }
    }
  }
}

}  // namespace

Orbit alpha_polygon(const ConvexPolygon& P) {
  const int m = P.size();
  const double scale = std::max(1.0, P.scale());
  const double tol_len = 1e-9 * scale;
  constexpr int kExhaustiveLimit = 18;  // full vertex-combo sweep up to this size

  Orbit best = min_width_double_normal(P);

  // features: edges 0..m-1, vertices m..2m-1
  std::vector<Feat> feats(2 * m);
  for (int i = 0; i < m; ++i) {
    feats[i] = Feat{false, i, wrap_angle(angle_of(P.edge_normal(i))), 0.0, 0.0, 0.0};
  }
  for (int i = 0; i < m; ++i) {
    AngleInterval cone = P.vertex_normal_cone(i);
    feats[m + i] = Feat{true, i, wrap_angle(cone.lo + 0.5 * cone.width), 0.5 * cone.width,
                        cone.lo, cone.width};
  }

  // pairwise minimum distances between features, for perimeter pruning
  std::vector<double> fdist(4 * m * m);
  auto fd = [&](int a, int b) -> double& { return fdist[a * 2 * m + b]; };
  for (int a = 0; a < 2 * m; ++a) {
    for (int b = a; b < 2 * m; ++b) {
      double v;
      if (a == b) {
        v = 0.0;
      } else if (!feats[a].is_vertex && !feats[b].is_vertex) {
        v = distance_segments(P.edge_start(feats[a].idx), P.edge_end(feats[a].idx),
                              P.edge_start(feats[b].idx), P.edge_end(feats[b].idx));
      } else if (feats[a].is_vertex && feats[b].is_vertex) {
        v = dist(P.vertex(feats[a].idx), P.vertex(feats[b].idx));
      } else {
        const Feat& ve = feats[a].is_vertex ? feats[a] : feats[b];
        const Feat& ed = feats[a].is_vertex ? feats[b] : feats[a];
        v = distance_point_segment(P.vertex(ve.idx), P.edge_start(ed.idx), P.edge_end(ed.idx));
      }
      fd(a, b) = v;
      fd(b, a) = v;
    }
  }

  // necessary condition for an acute supporting-line triangle: the three
  // normal angles must have pairwise ccw gaps in (pi/2, pi)
  auto gaps_ok = [&](int fa, int fb, int fc) {
    std::array<const Feat*, 3> f{&feats[fa], &feats[fb], &feats[fc]};
    std::sort(f.begin(), f.end(), [](const Feat* x, const Feat* y) { return x->rep < y->rep; });
    double g01 = f[1]->rep - f[0]->rep;
    double g12 = f[2]->rep - f[1]->rep;
    double g20 = 2.0 * M_PI - g01 - g12;
    double m01 = f[0]->half + f[1]->half, m12 = f[1]->half + f[2]->half, m20 = f[2]->half + f[0]->half;
    return g01 > M_PI / 2.0 - m01 && g01 < M_PI + m01 && g12 > M_PI / 2.0 - m12 &&
           g12 < M_PI + m12 && g20 > M_PI / 2.0 - m20 && g20 < M_PI + m20;
  };

  auto perimeter_lower_bound = [&](int fa, int fb, int fc) {
    return 2.0 * std::max(fd(fa, fb), std::max(fd(fb, fc), fd(fa, fc)));
  };

  std::set<std::array<int, 3>> near_miss;

  // --- pure edge triples: Fagnano orbits of acute supporting-line triangles ---
  std::array<Vec2, 3> n;
  std::array<double, 3> c;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        if (!gaps_ok(i, j, k)) continue;
        if (perimeter_lower_bound(i, j, k) >= best.length) continue;
        n = {P.edge_normal(i), P.edge_normal(j), P.edge_normal(k)};
        c = {P.edge_offset(i), P.edge_offset(j), P.edge_offset(k)};
        TripleOrbit to = fagnano_of_lines(n, c, scale);
        if (!to.valid) continue;
        std::array<int, 3> eidx{i, j, k};
        std::array<int, 3> sub{i, j, k};
        bool all_on = true, substitutable = true;
        for (int t = 0; t < 3 && substitutable; ++t) {
          Vec2 e = P.edge_vec(eidx[t]);
          double len = norm(e);
          double sp = dot(to.feet[t] - P.edge_start(eidx[t]), e / len);
          if (sp >= -tol_len && sp <= len + tol_len) continue;
          all_on = false;
          // foot ran past an endpoint; try the bounce at that vertex instead
          if (sp < 0.0) {
            double window = 1.5 * P.edge_length(eidx[t] - 1) + 1e-6 * scale;
            if (-sp <= window) {
              sub[t] = m + eidx[t];
            } else {
              substitutable = false;
            }
          } else {
            double window = 1.5 * P.edge_length(eidx[t] + 1) + 1e-6 * scale;
            if (sp - len <= window) {
              sub[t] = m + (eidx[t] + 1) % m;
            } else {
              substitutable = false;
            }
          }
        }
        if (all_on) {
          if (to.length < best.length) {
            Orbit o;
            o.kind = OrbitKind::ThreeBounce;
            o.points = {to.feet[0], to.feet[1], to.feet[2]};
            o.normals = {n[0], n[1], n[2]};
            o.length = to.length;
            best = o;
          }
        } else if (substitutable) {
          std::sort(sub.begin(), sub.end());
          if (sub[0] != sub[1] && sub[1] != sub[2]) near_miss.insert(sub);
        }
      }
    }
  }

  auto run_combo = [&](std::array<int, 3> fs) {
    std::sort(fs.begin(), fs.end());
    if (!gaps_ok(fs[0], fs[1], fs[2])) return;
    if (perimeter_lower_bound(fs[0], fs[1], fs[2]) >= best.length) return;
    ComboContext ctx;
    ctx.P = &P;
    ctx.feat = fs;
    for (int t = 0; t < 3; ++t) {
      ctx.is_vertex[t] = feats[fs[t]].is_vertex;
      ctx.idx[t] = feats[fs[t]].idx;
      if (ctx.is_vertex[t]) ++ctx.n_vertex;
    }
    solve_combo(ctx, feats, scale, tol_len, best);
  };

  if (m <= kExhaustiveLimit) {
    for (int a = 0; a < 2 * m; ++a) {
      for (int b = a + 1; b < 2 * m; ++b) {
        for (int cf = b + 1; cf < 2 * m; ++cf) {
          if (a < m && b < m && cf < m) continue;  // edge triples done above
          run_combo({a, b, cf});
        }
      }
    }
  } else {
    // one vertex, two edges: still exhaustive
    for (int v = 0; v < m; ++v) {
      for (int j = 0; j < m; ++j) {
        for (int k = j + 1; k < m; ++k) {
          if (!gaps_ok(m + v, j, k)) continue;
          if (perimeter_lower_bound(m + v, j, k) >= best.length) continue;
          run_combo({m + v, j, k});
        }
      }
    }
    for (const auto& fs : near_miss) run_combo(fs);
  }

  return best;
}

namespace {

std::vector<Point> boundary_grid(const ConvexPolygon& P, int N) {
  int m = P.size();
  double perim = P.perimeter();
  std::vector<double> cum(m + 1, 0.0);
  for (int i = 0; i < m; ++i) cum[i + 1] = cum[i] + P.edge_length(i);

  std::vector<std::pair<double, Point>> samples;
  samples.reserve(N + m);
  for (int i = 0; i < m; ++i) samples.push_back({cum[i], P.vertex(i)});
  double step = perim / N;
  int edge = 0;
  for (int i = 0; i < N; ++i) {
    double s = i * step;
    while (edge + 1 <= m && cum[edge + 1] < s) ++edge;
    double t = (s - cum[edge]) / (cum[edge + 1] - cum[edge]);
    samples.push_back({s, P.edge_start(edge) + t * P.edge_vec(edge)});
  }
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Point> out;
  out.reserve(samples.size());
  double dedupe = 1e-12 * std::max(1.0, perim);
  for (const auto& [s, p] : samples) {
    if (!out.empty() && dist(out.back(), p) <= dedupe) continue;
    out.push_back(p);
  }
  if (dist(out.front(), out.back()) <= dedupe) out.pop_back();
  return out;
}

}  // namespace

double alpha_bruteforce(const ConvexPolygon& P, int N) {
  if (N < 12) throw BadParameter("alpha_bruteforce needs N >= 12");
  std::vector<Point> grid = boundary_grid(P, N);
  int G = static_cast<int>(grid.size());
  // Configurations count as non-translatable when their best slack stays at
  // the geometric tolerance: orbits snapped along their own edges keep exact
  // zero slack, so no coarser threshold is needed.
  double slack_tol = kTol * std::max(1.0, P.scale());
  double best = std::numeric_limits<double>::infinity();

  struct Pair {
    double per;
    int i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(G * (G - 1) / 2);
  for (int i = 0; i < G; ++i) {
    for (int j = i + 1; j < G; ++j) pairs.push_back({2.0 * dist(grid[i], grid[j]), i, j});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.per < b.per; });
  for (const Pair& pr : pairs) {
    if (pr.per >= best) break;
    if (translation_slack(P, {grid[pr.i], grid[pr.j]}) <= slack_tol) {
      best = pr.per;
      break;
    }
  }

  struct Triple {
    double per;
    int i, j, k;
  };
  std::vector<Triple> triples;
  for (int i = 0; i < G; ++i) {
    for (int j = i + 1; j < G; ++j) {
      double dij = dist(grid[i], grid[j]);
      if (2.0 * dij >= best) continue;
      for (int k = j + 1; k < G; ++k) {
        double per = dij + dist(grid[j], grid[k]) + dist(grid[k], grid[i]);
        if (per < best) triples.push_back({per, i, j, k});
      }
    }
  }
  std::sort(triples.begin(), triples.end(),
            [](const Triple& a, const Triple& b) { return a.per < b.per; });
  for (const Triple& tr : triples) {
    if (tr.per >= best) break;
    if (translation_slack(P, {grid[tr.i], grid[tr.j], grid[tr.k]}) <= slack_tol) {
      best = tr.per;
      break;
    }
  }
  return best;
}

bool validate_orbit(const ConvexPolygon& P, const Orbit& o, double tol) {
  size_t want = o.kind == OrbitKind::TwoBounce ? 2 : 3;
  if (o.points.size() != want || o.normals.size() != want) return false;
  double s = std::max(1.0, P.scale());

  for (size_t t = 0; t < want; ++t) {
    if (P.boundary_distance(o.points[t]) > tol * s) return false;
    if (std::abs(norm(o.normals[t]) - 1.0) > 1e-9) return false;
    // supporting-line condition covers both edge normals and vertex cones
    if (P.support(o.normals[t]) > dot(o.normals[t], o.points[t]) + tol * s) return false;
  }

  int k = static_cast<int>(want);
  for (int t = 0; t < k; ++t) {
    Point prev = o.points[(t + k - 1) % k];
    Point cur = o.points[t];
    Point next = o.points[(t + 1) % k];
    if (dist(prev, cur) < 1e-12 * s || dist(cur, next) < 1e-12 * s) return false;
    Vec2 din = normalized(cur - prev);
    Vec2 dout = normalized(next - cur);
    Vec2 nrm = o.normals[t];
    if (dot(din, nrm) < -tol) return false;
    Vec2 mirror = din - 2.0 * dot(din, nrm) * nrm;
    if (norm(dout - mirror) > tol) return false;
  }

  double len = o.kind == OrbitKind::TwoBounce ? 2.0 * dist(o.points[0], o.points[1])
                                              : polyline_loop_length(o.points);
  return std::abs(len - o.length) <= tol * std::max(1.0, len);
}

}  // namespace billiards
