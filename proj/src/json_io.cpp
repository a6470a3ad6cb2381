#include "rootshift/json_io.hpp"

#include <string>

namespace rootshift {

using nlohmann::json;

namespace {

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

Complex parse_complex(const json& j, const char* where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FormatError(std::string(where) + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> parse_complex_list(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw FormatError(std::string("expected an object with array field \"") + key + "\"");
    std::vector<Complex> out;
    for (const auto& e : j.at(key)) out.push_back(parse_complex(e, key));
    return out;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const Poly& p) {
    json cs = json::array();
    for (const auto& c : p.coeffs()) cs.push_back(complex_pair(c));
    return {{"coeffs", cs}};
}

json to_json(const DiffOperator& T) {
    json as = json::array();
    for (const auto& a : T.alphas()) as.push_back(complex_pair(a));
    return {{"alphas", as}, {"n", T.n()}};
}

json to_json(const RootMultiset& rs) {
    json out = json::array();
    for (const auto& e : rs.entries) {
        const Complex v = e.value + e.tail;
        out.push_back(json::array({v.real(), v.imag(), e.multiplicity}));
    }
    return out;
}

json to_json(const BoundSet& b) {
    return {{"n", b.n},
            {"r_phi", b.r_phi},
            {"gamma_prime", b.gamma_prime},
            {"gamma", b.gamma},
            {"gamma_alpha", optional_number(b.gamma_alpha)},
            {"kf_estimate", optional_number(b.kf_estimate)},
            {"gamma_double_prime", optional_number(b.gamma_double_prime)}};
}

json to_json(const CheckRecord& c) {
    return {{"name", c.name},         {"hypothesis_met", c.hypothesis_met}, {"holds", c.holds},
            {"lhs", c.lhs},           {"rhs", c.rhs},                       {"boundary", c.boundary},
            {"violation", c.violation()}};
}

json to_json(const PerturbationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"operator", to_json(r.op)},
            {"poly", to_json(r.poly)},
            {"kf", r.kf},
            {"roots", to_json(r.roots)},
            {"critical_points", to_json(r.critical)},
            {"moved_roots", to_json(r.moved)},
            {"tau", r.tau},
            {"sep1", r.sep1},
            {"r_t", r.r_t},
            {"d_f", r.d_f},
            {"d_f_translated", r.d_f_translated},
            {"bounds", to_json(r.bounds)},
            {"checks", checks},
            {"converged", r.converged},
            {"violation", r.has_violation()}};
}

json to_json(const TrendRecord& t) {
    return {{"name", t.name},
            {"grid", t.grid},
            {"values", t.values},
            {"epsilon", t.epsilon},
            {"tail_decreasing", t.tail_decreasing},
            {"decreasing", t.decreasing},
            {"final_below_epsilon", t.final_below_epsilon},
            {"converged", t.converged}};
}

Poly poly_from_json(const json& j) { return Poly(parse_complex_list(j, "coeffs")); }

DiffOperator operator_from_json(const json& j) {
    auto alphas = parse_complex_list(j, "alphas");
    if (!j.contains("n") || !j.at("n").is_number_integer()) throw FormatError("operator: expected integer field \"n\"");
    const int n = j.at("n").get<int>();
    if (n < 0 || alphas.size() != static_cast<std::size_t>(n) + 1)
        throw FormatError("operator: \"alphas\" must have n + 1 entries");
    return DiffOperator(std::move(alphas), n);
}

RootMultiset roots_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("roots: expected an array of [re, im, multiplicity]");
    RootMultiset rs;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number() || !e[1].is_number() ||
            !e[2].is_number_integer() || e[2].get<int>() < 1)
            throw FormatError("roots: expected [re, im, multiplicity >= 1]");
        rs.entries.push_back({{e[0].get<double>(), e[1].get<double>()}, e[2].get<int>(), {}});
    }
    return rs;
}

}  // namespace rootshift
