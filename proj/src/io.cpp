#include "ecsum/io.hpp"

namespace ecsum {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

Curve parse_curve_descriptor(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.empty() || parts[0].empty()) {
        throw ParseError("empty curve descriptor");
    }
    const Field field = Field::parse(parts[0]);
    FieldValue a = field.is_rationals() ? field.from_int(0) : field.from_int(1);
    FieldValue b = field.is_rationals() ? field.from_int(17) : field.from_int(1);
    for (size_t i = 1; i < parts.size(); ++i) {
        const std::string_view part = parts[i];
        if (part.substr(0, 2) == "a=") {
            a = field.parse_value(part.substr(2));
        } else if (part.substr(0, 2) == "b=") {
            b = field.parse_value(part.substr(2));
        } else {
            throw ParseError("bad curve descriptor component: " + std::string(part));
        }
    }
    return Curve(a, b);
}

std::vector<Point> parse_point_list(std::string_view text, const Field& field) {
    std::vector<Point> points;
    for (std::string_view part : split(text, ';')) {
        if (part.empty()) {
            throw ParseError("empty entry in point list");
        }
        if (part == "O") {
            points.push_back(Point::infinity());
            continue;
        }
        if (part.front() != '(' || part.back() != ')') {
            throw ParseError("bad point (want \"(x,y)\" or \"O\"): " + std::string(part));
        }
        const auto coords = split(part.substr(1, part.size() - 2), ',');
        if (coords.size() != 2) {
            throw ParseError("bad point (want two coordinates): " + std::string(part));
        }
        points.push_back(
            Point::affine(field.parse_value(coords[0]), field.parse_value(coords[1])));
    }
    return points;
}

Json point_to_json(const Point& p) {
    if (p.is_infinity()) return Json("O");
    Json j;
    j["x"] = p.x().to_string();
    j["y"] = p.y().to_string();
    return j;
}

Point point_from_json(const Json& j, const Field& field) {
    if (j.is_string()) {
        if (j.get<std::string>() == "O") return Point::infinity();
        throw ParseError("bad point JSON: " + j.dump());
    }
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
        throw ParseError("bad point JSON (want {\"x\":...,\"y\":...} or \"O\"): " + j.dump());
    }
    return Point::affine(field.parse_value(j.at("x").get<std::string>()),
                         field.parse_value(j.at("y").get<std::string>()));
}

Json curve_to_json(const Curve& curve) {
    Json j;
    j["a"] = curve.a().to_string();
    j["b"] = curve.b().to_string();
    j["field"] = curve.field().to_string();
    return j;
}

Curve curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("field")) {
        throw ParseError("bad curve JSON (want {\"a\",\"b\",\"field\"}): " + j.dump());
    }
    const Field field = Field::parse(j.at("field").get<std::string>());
    return Curve(field.parse_value(j.at("a").get<std::string>()),
                 field.parse_value(j.at("b").get<std::string>()));
}

Json suite_result_to_json(const SuiteResult& result) {
    Json j;
    j["suite"] = result.name;
    j["seed"] = result.seed;
    j["trials"] = result.trials;
    j["checks"] = result.checks;
    j["failures"] = result.failures;
    j["passed"] = result.passed();
    Json counters = Json::object();
    for (const auto& [key, value] : result.counters) counters[key] = value;
    j["counters"] = counters;
    j["failure_notes"] = result.failure_notes;
    return j;
}

}  // namespace ecsum
