#include "state4/simplicial/complex_io.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "state4/errors.hpp"

namespace state4 {

using nlohmann::json;

namespace {

ComplexFile parse_complex_impl(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!j.is_object()) throw ParseError("triangulation must be a JSON object", "/");
  if (!j.contains("facets") || !j["facets"].is_array()) throw ParseError("missing \"facets\" array", "/facets");

  std::vector<std::string> names;
  auto name_of = [](const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    throw ParseError("vertex ids must be strings or integers", where);
  };
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array", "/vertices");
    for (size_t i = 0; i < j["vertices"].size(); ++i)
      names.push_back(name_of(j["vertices"][i], "/vertices/" + std::to_string(i)));
  } else {
    for (size_t f = 0; f < j["facets"].size(); ++f)
      for (size_t i = 0; i < j["facets"][f].size(); ++i) {
        auto n = name_of(j["facets"][f][i], "/facets/" + std::to_string(f) + "/" + std::to_string(i));
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
      }
  }
  std::vector<Simplex> facets;
  for (size_t f = 0; f < j["facets"].size(); ++f) {
    const auto& arr = j["facets"][f];
    std::string where = "/facets/" + std::to_string(f);
    if (!arr.is_array()) throw ParseError("facet must be an array", where);
    Simplex s;
    for (size_t i = 0; i < arr.size(); ++i) {
      auto n = name_of(arr[i], where + "/" + std::to_string(i));
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) throw ParseError("unknown vertex '" + n + "'", where + "/" + std::to_string(i));
      s.push_back(static_cast<int>(it - names.begin()));
    }
    facets.push_back(std::move(s));
  }
  ComplexFile out;
  std::vector<Simplex> listed = facets;
  out.complex = SimplicialComplex(names, std::move(facets));
  if (j.contains("order")) {
    std::vector<std::string> order;
    for (size_t i = 0; i < j["order"].size(); ++i) order.push_back(name_of(j["order"][i], "/order/" + std::to_string(i)));
    out.order = std::move(order);
  }
  if (j.contains("signs")) {
    const auto& sj = j["signs"];
    if (!sj.is_array() || sj.size() != listed.size())
      throw ParseError("\"signs\" must have one entry per facet", "/signs");
    std::vector<int> signs(out.complex.facets().size(), 0);
    for (size_t f = 0; f < listed.size(); ++f) {
      int s = sj[f].get<int>();
      if (s != 1 && s != -1) throw ParseError("sign must be +1 or -1", "/signs/" + std::to_string(f));
      Simplex sorted = listed[f];
      std::sort(sorted.begin(), sorted.end());
      auto idx = std::lower_bound(out.complex.facets().begin(), out.complex.facets().end(), sorted) -
                 out.complex.facets().begin();
      signs[idx] = s;
    }
    out.signs = std::move(signs);
  }
  return out;
}

}  // namespace

ComplexFile parse_complex(const std::string& text) {
  try {
    return parse_complex_impl(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what(), "/");
  }
}

ComplexFile read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_complex(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), path);
  }
}

OrderedOrientedComplex to_oriented(const ComplexFile& f) {
  if (!f.signs) return OrderedOrientedComplex::from_complex(f.complex, f.order);
  // Stored signs are relative to the stored order.
  OrderedOrientedComplex base(f.complex, *f.signs);
  if (!f.order) return base;
  std::vector<int> perm;
  for (const auto& n : *f.order) {
    int v = f.complex.vertex_index(n);
    if (v < 0) throw ValidationError("order names unknown vertex '" + n + "'");
    perm.push_back(v);
  }
  return base.reorder(perm);
}

OrderedOrientedComplex load_oriented_complex(const std::string& path) { return to_oriented(read_complex_file(path)); }

namespace {

json complex_json(const SimplicialComplex& c) {
  json j;
  j["vertices"] = c.vertex_names();
  json facets = json::array();
  for (const auto& f : c.facets()) {
    json row = json::array();
    for (int v : f) row.push_back(c.name(v));
    facets.push_back(std::move(row));
  }
  j["facets"] = std::move(facets);
  return j;
}

}  // namespace

std::string serialize_complex(const SimplicialComplex& c) { return complex_json(c).dump(1) + "\n"; }

std::string serialize_complex(const OrderedOrientedComplex& k, const std::vector<MoveRecord>* moves,
                              std::optional<std::uint64_t> seed) {
  json j = complex_json(k.complex());
  j["signs"] = k.signs();
  if (moves) {
    json log = json::array();
    for (const auto& m : *moves) log.push_back(m.describe());
    j["moves"] = std::move(log);
    j["rng"] = Rng::kAlgorithm;
  }
  if (seed) j["seed"] = *seed;
  return j.dump(1) + "\n";
}

}  // namespace state4
