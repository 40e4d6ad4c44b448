#pragma once

#include "hecke/engine.hpp"

#include <json.hpp>

namespace hecke {

nlohmann::json to_json(const BigInt& x);
BigInt bigint_from_json(const nlohmann::json& j);
nlohmann::json to_json(const UPoly& f);
nlohmann::json to_json(const QPoly& f);
UPoly upoly_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClassPolynomial& f);
ClassPolynomial class_polynomial_from_json(const nlohmann::json& j, Mode mode);

}  // namespace hecke
