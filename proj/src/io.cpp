#include "billiards/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace billiards::io {

ParsedPolygon parse_polygon_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DegenerateInput(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw DegenerateInput("polygon JSON needs a \"vertices\" array");
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw DegenerateInput("each vertex must be [x, y]");
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  ConvexPolygon poly = convex_hull(pts);

  // hull normalization may drop or reorder input vertices
  bool reordered = poly.size() != static_cast<int>(pts.size());
  if (!reordered) {
    int n = poly.size();
    int shift = -1;
    for (int s = 0; s < n; ++s) {
      if (dist(pts[s], poly.vertex(0)) <= 1e-9 * std::max(1.0, poly.scale())) shift = s;
    }
    if (shift < 0) {
      reordered = true;
    } else {
      for (int i = 0; i < n; ++i) {
        if (dist(pts[(shift + i) % n], poly.vertex(i)) > 1e-9 * std::max(1.0, poly.scale()))
          reordered = true;
      }
    }
  }
  return ParsedPolygon{std::move(poly), reordered};
}

ParsedPolygon load_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DegenerateInput("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polygon_json(ss.str());
}

std::string format_number(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string point_json(Point p) { return "[" + format_number(p.x) + ", " + format_number(p.y) + "]"; }

std::string points_json(const std::vector<Point>& pts) {
  std::string s = "[";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += point_json(pts[i]);
  }
  return s + "]";
}

}  // namespace

std::string orbit_json(const Orbit& o) {
  std::string s = "{\"kind\": ";
  s += o.kind == OrbitKind::TwoBounce ? "\"two\"" : "\"three\"";
  s += ", \"points\": " + points_json(o.points);
  s += ", \"normals\": " + points_json(o.normals);
  s += ", \"length\": " + format_number(o.length) + "}";
  return s;
}

std::string dual_json(const DualBody& d) {
  if (d.is_bounded()) {
    return "{\"bounded\": true, \"vertices\": " + points_json(d.polygon().vertices()) + "}";
  }
  std::string s = "{\"bounded\": false, \"halfplanes\": [";
  const auto& hs = d.halfplanes();
  for (size_t i = 0; i < hs.size(); ++i) {
    if (i) s += ", ";
    s += "[" + format_number(hs[i].a.x) + ", " + format_number(hs[i].a.y) + ", " +
         format_number(hs[i].c) + "]";
  }
  return s + "]}";
}

std::string product_json(const ProductReport& r) {
  std::string s = "{\"alpha\": " + format_number(r.alpha);
  s += ", \"diameter\": " + format_number(r.diameter);
  s += ", \"beta\": " + format_number(r.beta);
  if (r.grid_resolution > 0) {
    s += ", \"santalo_min\": " + format_number(r.santalo_min);
    s += ", \"santalo_argmin\": " + point_json(r.santalo_argmin);
    s += ", \"grid_resolution\": " + std::to_string(r.grid_resolution);
  }
  return s + "}";
}

std::string santalo_json(const SantaloResult& s, int resolution) {
  return "{\"min\": " + format_number(s.min) + ", \"argmin\": " + point_json(s.argmin) +
         ", \"grid_resolution\": " + std::to_string(resolution) + "}";
}

std::string table_json(const std::vector<TableRow>& rows) {
  std::string s = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ", ";
    s += "{\"n\": " + std::to_string(rows[i].n) + ", \"alpha\": " + format_number(rows[i].alpha) +
         ", \"diam\": " + format_number(rows[i].diameter) +
         ", \"beta\": " + format_number(rows[i].beta) + "}";
  }
  return s + "]";
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string s = "n,alpha,diam,beta\n";
  for (const TableRow& r : rows) {
    s += std::to_string(r.n) + "," + format_number(r.alpha) + "," + format_number(r.diameter) +
         "," + format_number(r.beta) + "\n";
  }
  return s;
}

std::string search_json(const SearchResult& r) {
  std::string s = "{\"best_beta\": " + format_number(r.best_beta);
  s += ", \"best_shape\": " + points_json(r.best_shape.vertices());
  s += ", \"parameters\": [";
  for (size_t i = 0; i < r.parameters.size(); ++i) {
    if (i) s += ", ";
    s += format_number(r.parameters[i]);
  }
  s += "], \"evaluations\": " + std::to_string(r.evaluations) + "}";
  return s;
}

std::string search_csv(const SearchResult& r) {
  std::string s = "best_beta,evaluations,parameters\n";
  s += format_number(r.best_beta) + "," + std::to_string(r.evaluations) + ",\"";
  for (size_t i = 0; i < r.parameters.size(); ++i) {
    if (i) s += " ";
    s += format_number(r.parameters[i]);
  }
  return s + "\"\n";
}

std::string steiner_report_json(const SteinerReport& r) {
  std::string s = "{\"original_beta\": " + format_number(r.original_beta) + ", \"axes\": [";
  for (size_t i = 0; i < r.axes.size(); ++i) {
    if (i) s += ", ";
    const SteinerAxisEntry& e = r.axes[i];
    s += "{\"axis\": \"" + e.axis_label + "\", \"symmetrized\": " +
         points_json(e.symmetrized.vertices()) + ", \"beta\": " + format_number(e.beta) +
         ", \"delta\": " + format_number(e.delta) + "}";
  }
  return s + "]}";
}

std::string steiner_report_csv(const SteinerReport& r) {
  std::string s = "axis,beta,delta\n";
  for (const SteinerAxisEntry& e : r.axes) {
    s += e.axis_label + "," + format_number(e.beta) + "," + format_number(e.delta) + "\n";
  }
  return s;
}

std::string steiner_pair_json(double before, double after) {
  return "{\"beta_before\": " + format_number(before) + ", \"beta_after\": " + format_number(after) +
         "}";
}

std::string polygon_svg(const ConvexPolygon& P, const Orbit* orbit) {
  double lox = P.vertices()[0].x, hix = lox, loy = P.vertices()[0].y, hiy = loy;
  for (const Point& v : P.vertices()) {
    lox = std::min(lox, v.x);
    hix = std::max(hix, v.x);
    loy = std::min(loy, v.y);
    hiy = std::max(hiy, v.y);
  }
  double pad = 0.05 * std::max(hix - lox, hiy - loy);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(lox - pad) << " "
      << format_number(-(hiy + pad)) << " " << format_number(hix - lox + 2 * pad) << " "
      << format_number(hiy - loy + 2 * pad) << "\">\n";
  auto path_of = [](const std::vector<Point>& pts) {
    std::string d;
    for (size_t i = 0; i < pts.size(); ++i) {
      d += (i == 0 ? "M " : "L ");
      d += format_number(pts[i].x) + " " + format_number(-pts[i].y) + " ";
    }
    d += "Z";
    return d;
  };
  out << "  <path id=\"polygon\" d=\"" << path_of(P.vertices())
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
      << format_number(0.01 * std::max(1e-6, hix - lox + 2 * pad)) << "\"/>\n";
  if (orbit) {
    std::vector<Point> pts = orbit->points;
    out << "  <path id=\"orbit\" d=\"" << path_of(pts)
        << "\" fill=\"none\" stroke=\"blue\" stroke-width=\""
        << format_number(0.01 * std::max(1e-6, hix - lox + 2 * pad)) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace billiards::io
