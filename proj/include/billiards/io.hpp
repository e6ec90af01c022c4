#pragma once

#include <string>
#include <vector>

#include "billiards/billiard.hpp"
#include "billiards/dual.hpp"
#include "billiards/product.hpp"
#include "billiards/search.hpp"
#include "billiards/steiner.hpp"

namespace billiards::io {

struct ParsedPolygon {
  ConvexPolygon polygon;
  bool reordered = false;  // input was not already the hull vertex sequence
};

ParsedPolygon parse_polygon_json(const std::string& text);
ParsedPolygon load_polygon_file(const std::string& path);

// JSON numbers are printed with 12 significant digits so identical inputs
// give byte-identical output.
std::string format_number(double v);

std::string orbit_json(const Orbit& o);
std::string dual_json(const DualBody& d);
std::string product_json(const ProductReport& r);
std::string santalo_json(const SantaloResult& s, int resolution);
std::string table_json(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::string search_json(const SearchResult& r);
std::string search_csv(const SearchResult& r);
std::string steiner_report_json(const SteinerReport& r);
std::string steiner_report_csv(const SteinerReport& r);
std::string steiner_pair_json(double before, double after);

std::string polygon_svg(const ConvexPolygon& P, const Orbit* orbit);
void write_file(const std::string& path, const std::string& content);

}  // namespace billiards::io
