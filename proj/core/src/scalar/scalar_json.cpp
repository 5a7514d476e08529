#include "scalar/scalar_json.hpp"

#include "state4/errors.hpp"

namespace state4::detail {

Cyclotomic scalar_from_json(const nlohmann::json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Cyclotomic(j.get<long>());
    if (j.is_string()) {
      try {
        return Cyclotomic::parse(j.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError("bad scalar '" + j.get<std::string>() + "' (" + e.what() + ")", where);
      }
    }
    if (j.is_object() && j.contains("zeta")) {
      const auto& z = j.at("zeta");
      if (!z.is_array() || z.size() != 2) throw ParseError("\"zeta\" must be [N, k]", where);
      int n = z[0].get<int>();
      if (n <= 0) throw ParseError("zeta conductor must be positive", where);
      return Cyclotomic::zeta(n, z[1].get<long>());
    }
    if (j.is_object() && j.contains("conductor")) {
      int n = j.at("conductor").get<int>();
      if (n <= 0) throw ParseError("conductor must be positive", where);
      std::vector<Rational> coeffs;
      for (const auto& c : j.at("coeffs")) {
        if (c.is_array() && c.size() == 2)
          coeffs.push_back(Rational::parse(c[0].get<std::string>()) /
                           Rational::parse(c[1].get<std::string>()));
        else if (c.is_string())
          coeffs.push_back(Rational::parse(c.get<std::string>()));
        else if (c.is_number_integer())
          coeffs.emplace_back(c.get<long>());
        else
          throw ParseError("bad coefficient", where);
      }
      return Cyclotomic::from_coeffs(n, std::move(coeffs));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), where);
  }
  throw ParseError("unrecognized scalar encoding", where);
}

nlohmann::json scalar_to_json(const Cyclotomic& c) {
  if (c.is_rational()) return c.rational_part().to_string();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : c.coeffs())
    coeffs.push_back({q.numerator().get_str(), q.denominator().get_str()});
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

}  // namespace state4::detail
