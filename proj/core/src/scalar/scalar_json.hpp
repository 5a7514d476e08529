#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "state4/scalar/cyclotomic.hpp"

namespace state4::detail {

/// Accepts {"conductor","coeffs"}, {"zeta":[N,k]}, a printed-form string, or
/// a JSON integer. Throws ParseError tagged with `where`.
Cyclotomic scalar_from_json(const nlohmann::json& j, const std::string& where);
/// Rationals are written as "q/p" strings, everything else in the
/// {"conductor","coeffs"} form.
nlohmann::json scalar_to_json(const Cyclotomic& c);

}  // namespace state4::detail
