#pragma once

#include <string>

#include <json.hpp>

#include "modinv/ratfun.hpp"

namespace modinv {

/// [{"exp": [i, j], "coeff": "p/q"}, ...] in graded-lex order.
nlohmann::json to_json(const MPoly& p);
/// {"num": [...], "den": [...]}
nlohmann::json to_json(const RatFun& f);

/// Univariate input ("exp" of length 1) is read in `univariate_var`.
MPoly mpoly_from_json(const nlohmann::json& j, Vars univariate_var = Vars::t);
RatFun ratfun_from_json(const nlohmann::json& j, Vars univariate_var = Vars::t);

/// Human-readable form, e.g. "1 + 2*u*v - 1/2*u^2*v".
std::string to_pretty(const MPoly& p);
std::string to_pretty(const RatFun& f);

}  // namespace modinv
