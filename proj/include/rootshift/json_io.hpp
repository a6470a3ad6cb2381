#pragma once

// JSON wire formats:
//   polynomial  {"coeffs": [[re, im], ...]}            ascending degree
//   operator    {"alphas": [[re, im], ...], "n": int}   alphas.size() == n + 1
//   roots       [[re, im, multiplicity], ...]

#include <stdexcept>

#include <json.hpp>

#include "rootshift/bounds.hpp"
#include "rootshift/harness.hpp"
#include "rootshift/poly.hpp"
#include "rootshift/rootfind.hpp"

namespace rootshift {

/// Malformed or out-of-schema input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const DiffOperator& T);
nlohmann::json to_json(const RootMultiset& rs);
nlohmann::json to_json(const BoundSet& b);
nlohmann::json to_json(const CheckRecord& c);
nlohmann::json to_json(const PerturbationReport& r);
nlohmann::json to_json(const TrendRecord& t);

Poly poly_from_json(const nlohmann::json& j);
DiffOperator operator_from_json(const nlohmann::json& j);
RootMultiset roots_from_json(const nlohmann::json& j);

}  // namespace rootshift
