#include "cayley/json_io.hpp"

#include <nlohmann/json.hpp>

#include "cayley/errors.hpp"

namespace cayley {

using nlohmann::json;

namespace {

json complex_to_json(const complexd& v) { return json::array({v.real(), v.imag()}); }

double number_from_json(const json& doc, const char* what) {
    if (!doc.is_number()) {
        throw ParseError(std::string("expected a number for ") + what);
    }
    return doc.get<double>();
}

complexd complex_from_json(const json& doc, const char* what) {
    if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number() || !doc[1].is_number()) {
        throw ParseError(std::string("expected [re, im] for ") + what);
    }
    return {doc[0].get<double>(), doc[1].get<double>()};
}

const json& member(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return doc.at(key);
}

const json& sized_array(const json& doc, std::size_t n, const char* what) {
    if (!doc.is_array() || doc.size() != n) {
        throw ParseError(std::string(what) + " must be an array of length " + std::to_string(n));
    }
    return doc;
}

} // namespace

json to_json(const OctonionR& o) {
    json a = json::array();
    for (double v : o.c) a.push_back(v);
    return a;
}

json to_json(const OctonionC& o) {
    json a = json::array();
    for (const auto& v : o.c) a.push_back(complex_to_json(v));
    return a;
}

json to_json(const JordanR& j) {
    json doc;
    doc["xi"] = json::array({j.xi[0], j.xi[1], j.xi[2]});
    doc["x"] = json::array({to_json(j.x[0]), to_json(j.x[1]), to_json(j.x[2])});
    return doc;
}

json to_json(const JordanC& j) {
    json doc;
    doc["xi"] =
        json::array({complex_to_json(j.xi[0]), complex_to_json(j.xi[1]), complex_to_json(j.xi[2])});
    doc["x"] = json::array({to_json(j.x[0]), to_json(j.x[1]), to_json(j.x[2])});
    return doc;
}

json to_json(const TangentPair& s) {
    json doc;
    doc["X"] = to_json(s.X);
    doc["Y"] = to_json(s.Y);
    return doc;
}

json to_json(const Matrix8C& m) {
    json rows = json::array();
    for (int i = 0; i < 8; ++i) {
        json row = json::array();
        for (int j = 0; j < 8; ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const FormValueReport& r) {
    return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"rel_err", r.rel_err}, {"fd_step", r.fd_step}};
}

OctonionR octonion_from_json(const json& doc) {
    const json& a = sized_array(doc, 8, "octonion");
    OctonionR o;
    for (int i = 0; i < 8; ++i) o.c[i] = number_from_json(a[static_cast<std::size_t>(i)], "octonion coefficient");
    return o;
}

OctonionC octonion_c_from_json(const json& doc) {
    const json& a = sized_array(doc, 8, "octonion");
    OctonionC o;
    for (int i = 0; i < 8; ++i)
        o.c[i] = complex_from_json(a[static_cast<std::size_t>(i)], "octonion coefficient");
    return o;
}

JordanR jordan_from_json(const json& doc) {
    const json& xi = sized_array(member(doc, "xi"), 3, "\"xi\"");
    const json& x = sized_array(member(doc, "x"), 3, "\"x\"");
    JordanR j;
    for (int i = 0; i < 3; ++i) {
        j.xi[i] = number_from_json(xi[static_cast<std::size_t>(i)], "diagonal entry");
        j.x[i] = octonion_from_json(x[static_cast<std::size_t>(i)]);
    }
    return j;
}

JordanC jordan_c_from_json(const json& doc) {
    const json& xi = sized_array(member(doc, "xi"), 3, "\"xi\"");
    const json& x = sized_array(member(doc, "x"), 3, "\"x\"");
    JordanC j;
    for (int i = 0; i < 3; ++i) {
        j.xi[i] = complex_from_json(xi[static_cast<std::size_t>(i)], "diagonal entry");
        j.x[i] = octonion_c_from_json(x[static_cast<std::size_t>(i)]);
    }
    return j;
}

TangentPair tangent_pair_from_json(const json& doc) {
    TangentPair s;
    s.X = jordan_from_json(member(doc, "X"));
    s.Y = jordan_from_json(member(doc, "Y"));
    return s;
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError("malformed JSON input");
    }
    return doc;
}

} // namespace cayley
