#pragma once

#include "wildcount/asymptotics.hpp"
#include "wildcount/galois_ring.hpp"
#include "wildcount/lie_algebra.hpp"
#include "wildcount/ramification.hpp"

#include "json.hpp"

#include <string>

namespace wildcount {

using nlohmann::json;

// {"p", "d", "modulus"}; the modulus is optional on input.
json field_to_json(const FiniteField& field);
FiniteField field_from_json(const json& j);

// {"p", "n", "d", "lifted_modulus", "frobenius_image"}
json ring_to_json(const GaloisRing& ring);
json ring_element_to_json(const RingElement& x);

// {"p", "orders", "brackets": [{"i", "j", "value"}]}
json algebra_to_json(const LieAlgebraSpec& spec);
LieAlgebraSpec algebra_from_json(const json& j);

// {"field", "algebra", "support": [{"b", "value": [[int]]}]}
json datum_to_json(const LocalDatum& D);
LocalDatum datum_from_json(const json& j);

json report_to_json(const AsymptoticsReport& report);

// Parses text, turning syntax errors into UserError with line and column.
json parse_json_text(const std::string& text, const std::string& origin);
json read_json_file(const std::string& path);

}  // namespace wildcount
