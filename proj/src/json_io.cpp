#include "wildcount/json_io.hpp"

#include "wildcount/error.hpp"

#include <fstream>
#include <memory>
#include <sstream>

namespace wildcount {

namespace {

template <typename T>
T field_of(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw UserError(std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UserError(std::string(what) + ": bad \"" + key + "\": " + e.what());
  }
}

}  // namespace

json field_to_json(const FiniteField& field) {
  return {{"p", field.p()}, {"d", field.degree()}, {"modulus", field.modulus()}};
}

FiniteField field_from_json(const json& j) {
  const int p = field_of<int>(j, "p", "field");
  if (j.contains("modulus")) {
    FiniteField F(p, field_of<std::vector<int>>(j, "modulus", "field"));
    if (j.contains("d") && field_of<int>(j, "d", "field") != F.degree())
      throw UserError("field: \"d\" does not match the modulus degree");
    return F;
  }
  return FiniteField::create(p, j.contains("d") ? field_of<int>(j, "d", "field") : 1);
}

json ring_element_to_json(const RingElement& x) { return x.c; }

json ring_to_json(const GaloisRing& ring) {
  return {{"p", ring.p()},
          {"n", ring.n()},
          {"d", ring.degree()},
          {"lifted_modulus", ring.lifted_modulus()},
          {"frobenius_image", ring_element_to_json(ring.frobenius_image())}};
}

json algebra_to_json(const LieAlgebraSpec& spec) {
  json brackets = json::array();
  for (const auto& bc : spec.brackets) brackets.push_back({{"i", bc.i}, {"j", bc.j}, {"value", bc.value}});
  return {{"p", spec.p}, {"orders", spec.orders}, {"brackets", brackets}};
}

LieAlgebraSpec algebra_from_json(const json& j) {
  LieAlgebraSpec spec;
  spec.p = field_of<int>(j, "p", "algebra");
  spec.orders = field_of<std::vector<int>>(j, "orders", "algebra");
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_array()) throw UserError("algebra: \"brackets\" must be an array");
    for (const auto& b : j.at("brackets")) {
      spec.brackets.push_back({field_of<int>(b, "i", "bracket"), field_of<int>(b, "j", "bracket"),
                               field_of<std::vector<std::int64_t>>(b, "value", "bracket")});
    }
  }
  return spec;
}

json datum_to_json(const LocalDatum& D) {
  json support = json::array();
  for (const auto& [b, value] : D.support()) support.push_back({{"b", b}, {"value", D.lie().coords(value)}});
  return {{"field", field_to_json(D.lie().field())},
          {"algebra", algebra_to_json(D.lie().algebra().spec())},
          {"support", support}};
}

LocalDatum datum_from_json(const json& j) {
  if (!j.is_object()) throw UserError("datum must be a JSON object");
  FiniteField F = field_from_json(field_of<json>(j, "field", "datum"));
  auto algebra = std::make_shared<const LieAlgebra>(algebra_from_json(field_of<json>(j, "algebra", "datum")));
  auto lie = std::make_shared<const LieBaseChange>(algebra, F);
  LocalDatum D(lie);
  if (j.contains("support")) {
    if (!j.at("support").is_array()) throw UserError("datum: \"support\" must be an array");
    for (const auto& entry : j.at("support")) {
      const auto b = field_of<std::int64_t>(entry, "b", "support entry");
      if (D.find(b)) throw UserError("support key " + std::to_string(b) + " given twice");
      D.set(b, lie->from_coords(field_of<std::vector<std::vector<std::int64_t>>>(entry, "value", "support entry")));
    }
  }
  return D;
}

json report_to_json(const AsymptoticsReport& report) {
  json S = json::array();
  for (const auto& n : report.S) S.push_back(to_compact(n));
  return {{"A", to_compact(report.A)},
          {"B", report.B},
          {"M", to_compact(report.M)},
          {"S", S},
          {"hypothesis_ok", report.hypothesis_ok},
          {"flags", report.flags}};
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw UserError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

}  // namespace wildcount
