#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "billiards/billiard.hpp"
#include "billiards/dual.hpp"
#include "billiards/io.hpp"
#include "billiards/product.hpp"
#include "billiards/search.hpp"
#include "billiards/steiner.hpp"
#include "billiards/verify.hpp"

namespace {

using namespace billiards;

ConvexPolygon load(const std::string& path) {
  io::ParsedPolygon p = io::load_polygon_file(path);
  if (p.reordered)
    std::cerr << "warning: input vertices were reordered to the convex hull sequence\n";
  return std::move(p.polygon);
}

Point parse_point(const std::string& s) {
  double x, y;
  if (std::sscanf(s.c_str(), "%lf,%lf", &x, &y) != 2)
    throw BadParameter("expected a point as X,Y");
  return {x, y};
}

Line parse_axis(const std::string& s) {
  double x1, y1, x2, y2;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf,%lf", &x1, &y1, &x2, &y2) != 4)
    throw BadParameter("expected an axis as X1,Y1,X2,Y2");
  if (std::hypot(x2 - x1, y2 - y1) < 1e-12) throw BadParameter("axis points coincide");
  return Line{{x1, y1}, {x2 - x1, y2 - y1}};
}

int run(int argc, char** argv) {
  CLI::App app{"shortest closed billiard trajectories, polar duals, and the billiard product"};
  app.require_subcommand(1);

  std::string poly_path, z_str, axis_str, svg_path, mode_str = "edge", suite = "all";
  int oracle_n = 0, grid = 60, max_n = 8, res = 64, cases = 0;
  unsigned long long seed = 1;
  bool csv = false;

  auto* alpha_cmd = app.add_subcommand("alpha", "shortest closed billiard trajectory");
  alpha_cmd->add_option("poly", poly_path, "polygon JSON file")->required();
  alpha_cmd->add_option("--oracle", oracle_n, "cross-check with the N-point boundary oracle")
      ->check(CLI::PositiveNumber);
  alpha_cmd->add_option("--svg", svg_path, "write polygon + orbit SVG to this path");

  auto* beta_cmd = app.add_subcommand("beta", "billiard product 8 alpha / diam");
  beta_cmd->add_option("poly", poly_path, "polygon JSON file")->required();

  auto* dual_cmd = app.add_subcommand("dual", "polar dual with respect to a center");
  dual_cmd->add_option("poly", poly_path, "polygon JSON file")->required();
  dual_cmd->add_option("--z", z_str, "center as X,Y")->required();

  auto* santalo_cmd = app.add_subcommand("santalo", "minimize alpha of the dual over centers");
  santalo_cmd->add_option("poly", poly_path, "polygon JSON file")->required();
  santalo_cmd->add_option("--grid", grid, "grid resolution")->check(CLI::PositiveNumber);

  auto* table_cmd = app.add_subcommand("table", "alpha/beta of regular polygons");
  table_cmd->add_option("--max-n", max_n, "largest vertex count")->check(CLI::PositiveNumber);
  table_cmd->add_flag("--csv", csv, "emit CSV instead of JSON");
  table_cmd->add_option("--svg", svg_path, "write beta(R_n) - 16 residual scatter SVG");

  auto* tri_cmd = app.add_subcommand("tri-scan", "maximize beta over triangles");
  tri_cmd->add_option("--res", res, "angle grid resolution")->check(CLI::PositiveNumber);
  tri_cmd->add_flag("--csv", csv, "emit CSV instead of JSON");

  auto* quad_cmd = app.add_subcommand("quad-search", "maximize beta over quadrilaterals");
  quad_cmd->add_option("--mode", mode_str, "edge or diagonal")
      ->check(CLI::IsMember({"edge", "diagonal"}));
  quad_cmd->add_option("--res", res, "grid resolution")->check(CLI::PositiveNumber);
  quad_cmd->add_flag("--csv", csv, "emit CSV instead of JSON");

  auto* steiner_cmd = app.add_subcommand("steiner", "Steiner symmetrization and beta");
  steiner_cmd->add_option("poly", poly_path, "polygon JSON file")->required();
  steiner_cmd->add_option("--axis", axis_str, "axis as X1,Y1,X2,Y2 (default: triangle altitudes)");
  steiner_cmd->add_flag("--csv", csv, "emit CSV instead of JSON");

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--suite", suite,
                         "all, lipschitz, monotonicity, similarity, oracle, dual-formulas, involution");
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--cases", cases, "cases per suite (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*alpha_cmd) {
      ConvexPolygon P = load(poly_path);
      Orbit o = alpha_polygon(P);
      if (!svg_path.empty()) io::write_file(svg_path, io::polygon_svg(P, &o));
      std::string out = io::orbit_json(o);
      if (oracle_n > 0) {
        double oracle = alpha_bruteforce(P, oracle_n);
        out.pop_back();
        out += ", \"oracle\": " + io::format_number(oracle) + "}";
      }
      std::cout << out << "\n";
    } else if (*beta_cmd) {
      std::cout << io::product_json(billiard_product(load(poly_path))) << "\n";
    } else if (*dual_cmd) {
      std::cout << io::dual_json(polar_dual(load(poly_path), parse_point(z_str))) << "\n";
    } else if (*santalo_cmd) {
      ConvexPolygon P = load(poly_path);
      std::cout << io::santalo_json(santalo_scan(P, grid), grid) << "\n";
    } else if (*table_cmd) {
      auto rows = regular_polygon_table(max_n);
      if (!svg_path.empty()) {
        // residual scatter beta(R_n) - 16
        std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                          "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 400\">\n";
        double lo = -6.0, hi = 0.0;
        for (size_t i = 0; i < rows.size(); ++i) {
          double x = 40.0 + 560.0 * i / std::max<size_t>(1, rows.size() - 1);
          double y = 380.0 - 360.0 * (rows[i].beta - 16.0 - lo) / (hi - lo);
          svg += "  <circle cx=\"" + io::format_number(x) + "\" cy=\"" + io::format_number(y) +
                 "\" r=\"4\" fill=\"black\"/>\n";
        }
        svg += "  <line x1=\"40\" y1=\"20\" x2=\"40\" y2=\"380\" stroke=\"black\"/>\n";
        svg += "  <line x1=\"40\" y1=\"380\" x2=\"620\" y2=\"380\" stroke=\"black\"/>\n</svg>\n";
        io::write_file(svg_path, svg);
      }
      std::cout << (csv ? io::table_csv(rows) : io::table_json(rows) + "\n");
    } else if (*tri_cmd) {
      SearchResult r = triangle_max_scan(res);
      std::cout << (csv ? io::search_csv(r) : io::search_json(r) + "\n");
    } else if (*quad_cmd) {
      QuadMode m = mode_str == "edge" ? QuadMode::EdgeDiameter : QuadMode::DiagonalDiameter;
      SearchResult r = quad_search(m, res);
      std::cout << (csv ? io::search_csv(r) : io::search_json(r) + "\n");
    } else if (*steiner_cmd) {
      ConvexPolygon P = load(poly_path);
      if (axis_str.empty()) {
        SteinerReport r = steiner_beta_report(P);
        std::cout << (csv ? io::steiner_report_csv(r) : io::steiner_report_json(r) + "\n");
      } else {
        auto [before, after] = steiner_beta_any_axis(P, parse_axis(axis_str));
        std::cout << io::steiner_pair_json(before, after) << "\n";
      }
    } else if (*verify_cmd) {
      std::vector<SuiteResult> results;
      if (suite == "all") {
        results = run_all_suites(seed, cases);
      } else if (suite == "lipschitz") {
        results = {run_lipschitz_suite(seed, cases)};
      } else if (suite == "monotonicity") {
        results = {run_monotonicity_suite(seed, cases)};
      } else if (suite == "similarity") {
        results = {run_similarity_suite(seed, cases)};
      } else if (suite == "oracle") {
        results = {run_oracle_suite(seed, cases, 120)};
      } else if (suite == "dual-formulas") {
        results = {run_dual_formula_suite(seed, cases)};
      } else if (suite == "involution") {
        results = {run_involution_suite(seed, cases)};
      } else {
        throw BadParameter("unknown suite: " + suite);
      }
      bool all_pass = true;
      std::string out = "[";
      for (size_t i = 0; i < results.size(); ++i) {
        if (i) out += ", ";
        out += "{\"suite\": \"" + results[i].name + "\", \"cases\": " + std::to_string(results[i].cases) +
               ", \"failures\": " + std::to_string(results[i].failures) +
               ", \"worst_violation\": " + io::format_number(results[i].worst) +
               ", \"pass\": " + (results[i].pass ? "true" : "false") + "}";
        all_pass = all_pass && results[i].pass;
      }
      out += "]";
      std::cout << out << "\n";
      if (!all_pass) return 2;
    }
  } catch (const NumericFailure& e) {
    std::cerr << "NumericFailure: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    std::cerr << "DegenerateInput: " << e.what() << "\n";
    return 1;
  } catch (const NotInterior& e) {
    std::cerr << "NotInterior: " << e.what() << "\n";
    return 1;
  } catch (const NotTriangle& e) {
    std::cerr << "NotTriangle: " << e.what() << "\n";
    return 1;
  } catch (const NotAcute& e) {
    std::cerr << "NotAcute: " << e.what() << "\n";
    return 1;
  } catch (const NotInAcuteRegion& e) {
    std::cerr << "NotInAcuteRegion: " << e.what() << "\n";
    return 1;
  } catch (const BadAngle& e) {
    std::cerr << "BadAngle: " << e.what() << "\n";
    return 1;
  } catch (const BadParameter& e) {
    std::cerr << "BadParameter: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
