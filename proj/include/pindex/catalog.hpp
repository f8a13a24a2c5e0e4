#pragma once

#include "pindex/field.hpp"
#include "pindex/half_index.hpp"
#include "pindex/winding.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pindex {

struct CatalogEntry {
  std::string name;
  PlaneField field;
  HalfIndex expected_index;
  bool has_loops = false;  // some leaf has both ends at the singularity
  bool orientable = true;
  std::string provenance;  // how expected_index was established
  /// Census circles are shifted off the singular point by this fraction of
  /// their radius along +x. Nonzero only where concentric circles are leaves.
  double census_offset = 0.0;

  Circle census_circle(double radius) const {
    const Vec2 s = field.singular_point();
    return {{s.x + census_offset * radius, s.y}, radius};
  }
};

/// Throws UnknownName.
const CatalogEntry& catalog_get(std::string_view name);

const std::vector<CatalogEntry>& catalog_entries();

}  // namespace pindex
