#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "w3/bipoly.hpp"
#include "w3/qseries.hpp"
#include "w3/singular.hpp"
#include "w3/state.hpp"

namespace w3 {

using Json = nlohmann::ordered_json;

inline Json to_json(const StateVector& v) {
    Json arr = Json::array();
    for (const auto& [m, c] : v.terms())
        arr.push_back({{"m", m.l}, {"n", m.j}, {"coef", rat_str(c)}});
    return arr;
}

inline StateVector state_vector_from_json(const Json& arr) {
    StateVector v;
    for (const auto& t : arr) {
        NormalMonomial m{t.at("m").get<std::vector<int>>(), t.at("n").get<std::vector<int>>()};
        if (!m.well_formed())
            throw std::invalid_argument("state vector term is not a normal monomial");
        v.add_term(m, rat_parse(t.at("coef").get<std::string>()));
    }
    return v;
}

inline Json to_json(const BiPoly& p) {
    Json arr = Json::array();
    for (const auto& [k, c] : p.terms())
        arr.push_back({{"dx", k.first}, {"dy", k.second}, {"coef", rat_str(c)}});
    return arr;
}

inline BiPoly bipoly_from_json(const Json& arr) {
    BiPoly p;
    for (const auto& t : arr)
        p.add_term(t.at("dx").get<int>(), t.at("dy").get<int>(),
                   rat_parse(t.at("coef").get<std::string>()));
    return p;
}

inline Json to_json(const QuadRat& v) {
    return Json{{"rat", rat_str(v.re)}, {"coef_sqrt_m3", rat_str(v.im)}};
}

inline Json to_json(const SingularReport& rep) {
    Json j;
    j["weight"] = rep.weight;
    j["kernel_dimension"] = rep.kernel_dimension;
    Json vecs = Json::array();
    for (const auto& v : rep.vectors) vecs.push_back(to_json(v));
    j["vectors"] = vecs;
    j["j0_action"] = to_json(rep.j0_action);
    return j;
}

inline Json to_json(const QSeries& s) {
    Json arr = Json::array();
    for (const auto& [e, c] : s.terms())
        arr.push_back({{"exponent", rat_str(exponent_value(e))}, {"coef", rat_str(c)}});
    Json j;
    j["truncation"] = rat_str(exponent_value(s.trunc()));
    j["terms"] = arr;
    return j;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

// Golden files wrap the term list in {"description", ..., "terms": [...]}.
inline StateVector load_golden_vector(const std::string& path) {
    return state_vector_from_json(load_json_file(path).at("terms"));
}

inline BiPoly load_golden_bipoly(const std::string& path) {
    return bipoly_from_json(load_json_file(path).at("terms"));
}

}  // namespace w3
