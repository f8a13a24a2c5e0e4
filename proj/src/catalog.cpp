#include "pindex/catalog.hpp"

#include "pindex/error.hpp"

#include <algorithm>

namespace pindex {

namespace {

PlaneField poly(std::string_view p, std::string_view q) {
  return PlaneField::vector_polynomial(parse_polynomial(p), parse_polynomial(q));
}

CatalogEntry entry(std::string name, PlaneField field, int doubled, bool loops, std::string provenance) {
  const bool orientable = !field.is_line_field() || doubled % 2 == 0;
  PlaneField labelled = field.with_label(name);
  return {std::move(name), std::move(labelled), HalfIndex::from_doubled(doubled), loops, orientable,
          std::move(provenance)};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  out.push_back(entry("node", poly("x", "y"), 2, false, "radial field, no tangencies with circles"));
  out.push_back(entry("saddle", poly("x", "-y"), -2, false,
                      "4 external tangencies: 1 + (0 - 4)/2; dense-sample winding"));
  out.push_back(entry("rotation", poly("-y", "x"), 2, false, "one full turn by rotational symmetry"));
  out.push_back(entry("center", poly("-y", "x"), 2, false, "same field as rotation; circles are leaves"));
  // Concentric circles are leaves here; an off-centre circle has one
  // internal and one external tangency.
  out[2].census_offset = 0.1;
  out[3].census_offset = 0.1;
  out.push_back(entry("focus", poly("x - y", "x + y"), 2, false, "outward spiral, no tangencies with circles"));
  out.push_back(entry("dipole", poly("x^2 - y^2", "2*x*y"), 4, true,
                      "z^2; 2 internal tangencies: 1 + (2 - 0)/2; leaves are circles through the origin"));
  out.push_back(entry("monkey-saddle", poly("x^2 - y^2", "-2*x*y"), -4, false,
                      "conj(z)^2; 6 external tangencies: 1 + (0 - 6)/2"));
  out.push_back(entry("lemon", PlaneField::line_model(1), 1, false,
                      "line model theta = phi/2; 1 external tangency"));
  out.push_back(entry("tripod", PlaneField::line_model(-1), -1, false,
                      "line model theta = -phi/2; 3 external tangencies"));
  out.push_back(entry("star", PlaneField::line_model(3), 3, true,
                      "line model theta = 3*phi/2; 1 internal tangency; leaves r = C sin^2(phi/2) are loops"));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_get(std::string_view name) {
  const auto& entries = catalog_entries();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw Error(ErrorCode::UnknownName, "unknown catalog entry '" + std::string(name) + "'");
  return *it;
}

}  // namespace pindex
