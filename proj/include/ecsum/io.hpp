#pragma once

#include <nlohmann/json.hpp>

#include <string_view>
#include <vector>

#include "ecsum/curve.hpp"
#include "ecsum/suites.hpp"

namespace ecsum {

using Json = nlohmann::ordered_json;

// Curve descriptor: ("Q" | "Fp:<prime>") ["," "a=<val>" "," "b=<val>"].
// Omitted coefficients default to a=1, b=1 over F_p and the test-corpus
// curve a=0, b=17 over Q.
Curve parse_curve_descriptor(std::string_view text);

// Point list: "(x,y);(x,y);O;..." with values in the field's canonical text
// form ("num/den" allowed over Q).
std::vector<Point> parse_point_list(std::string_view text, const Field& field);

// {"x": "<canonical>", "y": "<canonical>"} for affine points, "O" for the
// point at infinity.
Json point_to_json(const Point& p);
Point point_from_json(const Json& j, const Field& field);

// {"a": "...", "b": "...", "field": "Fp:10007"}.
Json curve_to_json(const Curve& curve);
Curve curve_from_json(const Json& j);

Json suite_result_to_json(const SuiteResult& result);

}  // namespace ecsum
