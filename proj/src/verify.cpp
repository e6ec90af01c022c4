#include "billiards/verify.hpp"

#include <algorithm>
#include <cmath>

#include "billiards/billiard.hpp"
#include "billiards/detail/rng.hpp"
#include "billiards/dual.hpp"
#include "billiards/geom.hpp"
#include "billiards/product.hpp"

namespace billiards {

namespace {

ConvexPolygon random_small_polygon(detail::Rng& rng) {
  int n = 4 + static_cast<int>(rng.uniform(0.0, 7.0));
  auto seed = rng.bits();
  return random_polygon(n, seed);
}

ConvexPolygon shrink_toward_centroid(const ConvexPolygon& P, double factor) {
  Point c = P.centroid();
  std::vector<Point> vs;
  for (const Point& v : P.vertices()) vs.push_back(c + factor * (v - c));
  return ConvexPolygon(std::move(vs));
}

// hull of boundary points of P: a nested, generally dissimilar body
ConvexPolygon inner_hull(const ConvexPolygon& P, detail::Rng& rng) {
  std::vector<Point> pts;
  int n = P.size();
  for (int tries = 0; tries < 20; ++tries) {
    pts.clear();
    int k = 4 + static_cast<int>(rng.uniform(0.0, 5.0));
    for (int i = 0; i < k; ++i) {
      int e = static_cast<int>(rng.uniform(0.0, n));
      e = std::min(e, n - 1);
      double t = rng.uniform();
      pts.push_back(P.edge_start(e) + t * P.edge_vec(e));
    }
    try {
      return convex_hull(pts);
    } catch (const DegenerateInput&) {
    }
  }
  return shrink_toward_centroid(P, 0.5);
}

void record(SuiteResult& r, double violation) {
  ++r.cases;
  r.worst = std::max(r.worst, violation);
  if (violation > 0.0) ++r.failures;
}

SuiteResult finish(SuiteResult r) {
  r.pass = r.failures == 0;
  return r;
}

}  // namespace

SuiteResult run_lipschitz_suite(std::uint64_t seed, int cases) {
  if (cases <= 0) cases = 200;
  SuiteResult r{"lipschitz", 0, 0, -1e300, false};
  detail::Rng rng(seed * 1000003 + 11);
  for (int i = 0; i < cases; ++i) {
    ConvexPolygon T = random_small_polygon(rng);
    ConvexPolygon K = (i % 2 == 0) ? random_small_polygon(rng)
                                   : shrink_toward_centroid(T, rng.uniform(0.5, 0.99));
    double da = std::abs(alpha_polygon(K).length - alpha_polygon(T).length);
    double dh = hausdorff_distance(K, T);
    record(r, da - (6.0 * dh + 1e-9));
  }
  return finish(r);
}

SuiteResult run_monotonicity_suite(std::uint64_t seed, int cases) {
  if (cases <= 0) cases = 100;
  SuiteResult r{"monotonicity", 0, 0, -1e300, false};
  detail::Rng rng(seed * 1000033 + 23);
  for (int i = 0; i < cases; ++i) {
    ConvexPolygon T = random_small_polygon(rng);
    ConvexPolygon K =
        (i % 2 == 0) ? shrink_toward_centroid(T, rng.uniform(0.3, 0.95)) : inner_hull(T, rng);
    record(r, alpha_polygon(K).length - alpha_polygon(T).length - 1e-9);
  }
  return finish(r);
}

SuiteResult run_similarity_suite(std::uint64_t seed, int cases) {
  if (cases <= 0) cases = 100;
  SuiteResult r{"similarity", 0, 0, -1e300, false};
  detail::Rng rng(seed * 1000211 + 37);
  for (int i = 0; i < cases; ++i) {
    ConvexPolygon P = random_small_polygon(rng);
    SimilarityTransform T;
    T.scale = rng.uniform(0.3, 3.0);
    T.rotation = rng.uniform(0.0, 2.0 * M_PI);
    T.translation = {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    T.reflect = rng.uniform() < 0.5;
    double b0 = billiard_product(P).beta;
    double b1 = billiard_product(apply_similarity(P, T)).beta;
    record(r, std::abs(b1 - b0) - 1e-9);
  }
  return finish(r);
}

SuiteResult run_oracle_suite(std::uint64_t seed, int cases, int N) {
  if (cases <= 0) cases = 50;
  if (N <= 0) N = 120;
  SuiteResult r{"oracle", 0, 0, -1e300, false};
  detail::Rng rng(seed * 1000253 + 41);
  for (int i = 0; i < cases; ++i) {
    ConvexPolygon P = random_small_polygon(rng);
    double fast = alpha_polygon(P).length;
    double oracle = alpha_bruteforce(P, N);
    double d = diameter(P).length;
    double low_violation = (fast - 1e-6) - oracle;     // oracle must not beat the true minimum
    double high_violation = oracle - fast - 0.03 * d;  // and must land close above it
    record(r, std::max(low_violation, high_violation));
  }
  return finish(r);
}

SuiteResult run_dual_formula_suite(std::uint64_t seed, int cases) {
  if (cases <= 0) cases = 200;
  SuiteResult r{"dual-formulas", 0, 0, -1e300, false};
  detail::Rng rng(seed * 1000303 + 53);
  int done = 0;
  while (done < cases) {
    bool canonical = done % 2 == 1;
    double phi = rng.uniform(M_PI / 3.0, M_PI / 2.0 - 0.05);
    ConvexPolygon T = canonical ? canonical_isosceles(phi) : random_polygon(3, rng.bits());
    // admissible center: inside the triangle and well inside all three
    // side-diameter disks
    Point z{};
    bool found = false;
    double margin = 1e-3 * std::max(1.0, T.scale());
    for (int tries = 0; tries < 200 && !found; ++tries) {
      double u = rng.uniform(), v = rng.uniform();
      if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
      }
      Point cand = T.vertex(0) + u * (T.vertex(1) - T.vertex(0)) + v * (T.vertex(2) - T.vertex(0));
      if (T.min_slack(cand) <= margin) continue;
      bool ok = true;
      for (int e = 0; e < 3; ++e) {
        Point mid = 0.5 * (T.edge_start(e) + T.edge_end(e));
        if (dist(cand, mid) >= 0.5 * T.edge_length(e) - margin) ok = false;
      }
      if (ok) {
        z = cand;
        found = true;
      }
    }
    if (!found) continue;  // thin triangle with (almost) empty acute region

    auto each = alpha_dual_triangle_geometric_each(T, z);
    double spread = std::max({each[0], each[1], each[2]}) - std::min({each[0], each[1], each[2]});
    ExtendedLength pipeline = alpha_dual_at(T, z);
    double worst = spread - 1e-9;
    if (!pipeline.finite) {
      worst = 1.0;
    } else {
      worst = std::max(worst, std::abs(pipeline.value - each[0]) - 1e-6);
      if (canonical) {
        double iso = alpha_dual_isosceles(phi, z);
        worst = std::max(worst, std::abs(iso - each[0]) - 1e-6);
        worst = std::max(worst, std::abs(iso - pipeline.value) - 1e-6);
      }
    }
    record(r, worst);
    ++done;
  }
  return finish(r);
}

SuiteResult run_involution_suite(std::uint64_t seed, int cases) {
  if (cases <= 0) cases = 100;
  SuiteResult r{"involution", 0, 0, -1e300, false};
  detail::Rng rng(seed * 1000319 + 67);
  for (int i = 0; i < cases; ++i) {
    ConvexPolygon P = random_small_polygon(rng);
    Point c = P.centroid();
    // random interior center, biased toward the middle
    Point z = c + rng.uniform(0.0, 0.5) * (Point{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    if (P.min_slack(z) <= 1e-3) z = c;
    ConvexPolygon back = dual_of_dual_roundtrip(P, z);
    record(r, hausdorff_distance(P, back) - 1e-6);
  }
  return finish(r);
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int cases) {
  return {run_lipschitz_suite(seed, cases),    run_monotonicity_suite(seed, cases),
          run_similarity_suite(seed, cases),   run_oracle_suite(seed, cases, 120),
          run_dual_formula_suite(seed, cases), run_involution_suite(seed, cases)};
}

}  // namespace billiards
