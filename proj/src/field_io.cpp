#include "pindex/field_io.hpp"

#include "pindex/catalog.hpp"
#include "pindex/error.hpp"

#include <fstream>
#include <sstream>

namespace pindex {

namespace {

const nlohmann::json& member(const nlohmann::json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorCode::FormatError, std::string("field file: missing \"") + key + "\"");
  return *it;
}

std::string string_member(const nlohmann::json& doc, const char* key) {
  const auto& v = member(doc, key);
  if (!v.is_string()) throw Error(ErrorCode::FormatError, std::string("field file: \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

PlaneField field_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::FormatError, "field file: expected a JSON object");

  Vec2 singular{};
  bool has_singular = false;
  if (auto it = doc.find("singular_point"); it != doc.end()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number())
      throw Error(ErrorCode::FormatError, "field file: \"singular_point\" must be [x, y]");
    singular = {(*it)[0].get<double>(), (*it)[1].get<double>()};
    has_singular = true;
  }

  const std::string kind = string_member(doc, "kind");
  if (kind == "vector_polynomial") {
    return PlaneField::vector_polynomial(parse_polynomial(string_member(doc, "P")),
                                         parse_polynomial(string_member(doc, "Q")), singular);
  }
  if (kind == "line_model") {
    const auto& v = member(doc, "two_j");
    if (!v.is_number_integer()) throw Error(ErrorCode::FormatError, "field file: \"two_j\" must be an integer");
    return PlaneField::line_model(v.get<int>(), singular);
  }
  if (kind == "builtin") {
    const std::string name = string_member(doc, "name");
    const PlaneField& f = catalog_get(name).field;
    if (has_singular)
      throw Error(ErrorCode::FormatError, "field file: builtin fields are centred at the origin");
    return f;
  }
  throw Error(ErrorCode::FormatError, "field file: unknown kind '" + kind + "'");
}

nlohmann::json field_to_json(const PlaneField& field) {
  nlohmann::json doc;
  if (const auto* f = std::get_if<VectorPolynomial>(&field.model())) {
    doc = {{"kind", "vector_polynomial"}, {"P", f->p.to_string()}, {"Q", f->q.to_string()}};
  } else if (const auto* f = std::get_if<LineModel>(&field.model())) {
    doc = {{"kind", "line_model"}, {"two_j", f->two_j}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "pullback fields have no file representation");
  }
  const Vec2 s = field.singular_point();
  if (s.x != 0.0 || s.y != 0.0) doc["singular_point"] = {s.x, s.y};
  return doc;
}

PlaneField parse_field_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::FormatError, std::string("field file: ") + e.what());
  }
  return field_from_json(doc);
}

PlaneField load_field(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FormatError, "cannot open field file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_field_text(ss.str());
}

}  // namespace pindex
