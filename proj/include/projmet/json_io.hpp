#pragma once

#include <string>

#include <json.hpp>

#include "projmet/parent.hpp"

namespace projmet {

// {"p": int, "e": int, "modulus": [int,...]}
nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

// {"field": descriptor, "N": int, "points": [[int,...],...]}
nlohmann::json family_to_json(const SpanningFamily& fam);
SpanningFamily family_from_json(const nlohmann::json& j);

// {"field": descriptor, "n": int, "basis": [[int,...],...]}
nlohmann::json code_to_json(const LinearCode& code);
LinearCode code_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const FqVector& v);
FqVector vector_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json matrix_to_json(const FqMatrix& m);

// Parse `name:params` or `@file.json` into a family over the given field.
SpanningFamily parse_family_spec(const std::string& spec, const Field& f,
                                 const Budget& budget = {});

} // namespace projmet
