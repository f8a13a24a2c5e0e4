#pragma once

#include "pindex/field.hpp"

#include <json.hpp>

#include <filesystem>
#include <string_view>

namespace pindex {

/// Field file schema:
///   {"kind":"vector_polynomial","P":"<expr>","Q":"<expr>"}
///   {"kind":"line_model","two_j":<int>}
///   {"kind":"builtin","name":"<catalog name>"}
/// An optional "singular_point":[x,y] sets the singular-locus hint.
PlaneField field_from_json(const nlohmann::json& doc);
nlohmann::json field_to_json(const PlaneField& field);

PlaneField parse_field_text(std::string_view text);
PlaneField load_field(const std::filesystem::path& path);

}  // namespace pindex
