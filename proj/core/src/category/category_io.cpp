#include "state4/category/category_io.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "scalar/scalar_json.hpp"
#include "state4/category/generators.hpp"
#include "state4/errors.hpp"

namespace state4 {

using nlohmann::json;
using detail::scalar_from_json;
using detail::scalar_to_json;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"", where);
  return j.at(key);
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError("expected a string", where);
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected an array", where);
  return j;
}

std::string at(const std::string& where, size_t i) { return where + "/" + std::to_string(i); }

GroupPresentation parse_group(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return GroupPresentation::preset(j.get<std::string>());
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), where);
    }
  }
  std::vector<std::string> names;
  const auto& el = array(need(j, "elements", where), where + "/elements");
  for (size_t i = 0; i < el.size(); ++i) names.push_back(str(el[i], at(where + "/elements", i)));
  auto index = [&](const json& v, const std::string& w) {
    if (v.is_number_integer()) {
      long k = v.get<long>();
      if (k < 0 || k >= static_cast<long>(names.size())) throw ParseError("element index out of range", w);
      return static_cast<int>(k);
    }
    auto name = str(v, w);
    for (size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) return static_cast<int>(k);
    throw ParseError("unknown element '" + name + "'", w);
  };
  const auto& mul = array(need(j, "mul", where), where + "/mul");
  std::vector<std::vector<int>> table;
  for (size_t r = 0; r < mul.size(); ++r) {
    const auto& row = array(mul[r], at(where + "/mul", r));
    table.emplace_back();
    for (size_t c = 0; c < row.size(); ++c) table.back().push_back(index(row[c], at(at(where + "/mul", r), c)));
  }
  return GroupPresentation(std::move(names), std::move(table));
}

json group_json(const GroupPresentation& g) {
  if (!g.preset_name().empty()) return g.preset_name();
  json j;
  j["elements"] = g.names();
  json mul = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.name(g.mul(a, b)));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  return j;
}

std::vector<Cyclotomic> scalar_list(const json& j, const std::string& where) {
  std::vector<Cyclotomic> out;
  const auto& a = array(j, where);
  for (size_t i = 0; i < a.size(); ++i) out.push_back(scalar_from_json(a[i], at(where, i)));
  return out;
}

CochainTable flat_table(const GroupPresentation& g, int degree, const json& j, const std::string& where) {
  CochainTable t = CochainTable::trivial(g, degree);
  auto vals = scalar_list(j, where);
  if (vals.size() != t.values.size())
    throw ParseError("expected " + std::to_string(t.values.size()) + " values", where);
  t.values = std::move(vals);
  return t;
}

// ω: "trivial", {"table": [|G|^4 values]} or {"coboundary": [|G|^3 values]}.
CochainTable parse_omega(const GroupPresentation& g, const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "trivial") return CochainTable::trivial(g, 4);
    throw ParseError("omega must be \"trivial\" or an object", where);
  }
  if (j.is_object() && j.contains("table")) return flat_table(g, 4, j["table"], where + "/table");
  if (j.is_object() && j.contains("coboundary")) return coboundary(flat_table(g, 3, j["coboundary"], where + "/coboundary"));
  throw ParseError("omega needs \"table\" or \"coboundary\"", where);
}

// R as full rows or lower-triangular rows (row x holds R(x, 0..x)).
std::vector<Cyclotomic> parse_r(const GroupPresentation& a, const json& j, const std::string& where) {
  const int n = a.order();
  const auto& rows = array(j, where);
  if (static_cast<int>(rows.size()) != n) throw ParseError("R needs one row per element", where);
  std::vector<Cyclotomic> r(static_cast<size_t>(n) * n);
  bool triangular = true;
  for (int x = 0; x < n; ++x) {
    const auto& row = array(rows[x], at(where, x));
    if (static_cast<int>(row.size()) != x + 1) triangular = false;
    if (static_cast<int>(row.size()) != x + 1 && static_cast<int>(row.size()) != n)
      throw ParseError("R rows must have " + std::to_string(n) + " or row-index + 1 entries", at(where, x));
  }
  for (int x = 0; x < n; ++x) {
    const auto& row = rows[x];
    for (size_t y = 0; y < row.size(); ++y) {
      auto v = scalar_from_json(row[y], at(at(where, x), y));
      r[x * n + y] = v;
      if (triangular) r[y * n + x] = v;
    }
  }
  return r;
}

BraidedData parse_braided(const GroupPresentation& a, const json& j, const std::string& where) {
  if (j.contains("preset")) {
    auto name = str(j["preset"], where + "/preset");
    BraidedData d;
    try {
      d = BraidedData::preset(name);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), where + "/preset");
    }
    if (!(d.group() == a)) throw ParseError("preset '" + name + "' lives on another group", where + "/preset");
    return d;
  }
  BraidedData d = BraidedData::trivial(a);
  if (j.contains("R")) d.R = parse_r(a, j["R"], where + "/R");
  json f = j.contains("F") ? j["F"] : json(j.contains("R") ? "auto" : "trivial");
  if (f.is_string() && f.get<std::string>() == "auto") {
    // Cyclic A with generator "1": F(x,y,z) = R(x,1)^{n carry(y,z)}.
    int g = a.index("1");
    const int n = a.order();
    bool cyclic = g >= 0;
    for (int k = 0, x = a.unit(); cyclic && k < n; ++k, x = a.mul(x, g))
      if (x != a.index(std::to_string(k))) cyclic = false;
    if (!cyclic) throw ParseError("F \"auto\" needs a cyclic group named 0..n-1", where + "/F");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int yi = std::stoi(a.name(y)), zi = std::stoi(a.name(z));
          if (yi + zi >= n) d.F.at(std::vector<int>{x, y, z}) = d.r(x, g).pow(n);
        }
  } else if (f.is_string() && f.get<std::string>() == "trivial") {
  } else if (f.is_object() && f.contains("table")) {
    d.F = flat_table(a, 3, f["table"], where + "/F/table");
  } else {
    throw ParseError("F must be \"auto\", \"trivial\" or {\"table\": [...]}", where + "/F");
  }
  return d;
}

Fusion2CatData from_generator(const json& j, bool check_cocycles) {
  auto kind = str(j["generator"], "/generator");
  if (kind == "trivial") return trivial_category();
  if (kind == "dw") {
    auto g = parse_group(need(j, "group", "/"), "/group");
    auto omega = j.contains("omega") ? parse_omega(g, j["omega"], "/omega") : CochainTable::trivial(g, 4);
    return gen_twisted_dw(g, omega, check_cocycles);
  }
  if (kind == "pointed") {
    auto a = parse_group(need(j, "group", "/"), "/group");
    if (!a.is_abelian()) throw ParseError("pointed generator needs an abelian group", "/group");
    auto data = parse_braided(a, j, "");
    std::vector<Cyclotomic> dims;
    if (j.contains("dims")) dims = scalar_list(j["dims"], "/dims");
    return gen_pointed_braided(data, dims);
  }
  if (kind == "yetter") {
    auto g = parse_group(need(j, "G", "/"), "/G");
    auto a = parse_group(need(j, "A", "/"), "/A");
    YetterTwist twist;
    auto truthy = [&](const char* key) { return j.contains(key) && !j[key].is_null() && j[key] != false; };
    twist.action = truthy("action");
    twist.postnikov = truthy("postnikov");
    if (j.contains("omega")) twist.omega = parse_omega(g, j["omega"], "/omega");
    if (j.contains("braiding")) {
      const auto& b = j["braiding"];
      twist.braiding = b.is_string() ? parse_braided(a, json{{"preset", b}}, "/braiding")
                                     : parse_braided(a, b, "/braiding");
    }
    return gen_yetter_2group(g, a, twist);
  }
  throw ParseError("unknown generator '" + kind + "'", "/generator");
}

Fusion2CatData from_tables(const json& j) {
  Fusion2CatData cat;
  const auto& objs = array(need(j, "objects", "/"), "/objects");
  for (size_t i = 0; i < objs.size(); ++i) cat.objects.push_back(str(objs[i], at("/objects", i)));
  auto object = [&](const json& v, const std::string& w) {
    int k = -1;
    auto name = str(v, w);
    for (size_t i = 0; i < cat.objects.size(); ++i)
      if (cat.objects[i] == name) k = static_cast<int>(i);
    if (k < 0) throw ParseError("unknown object '" + name + "'", w);
    return k;
  };
  if (j.contains("components")) {
    const auto& comps = array(j["components"], "/components");
    for (size_t c = 0; c < comps.size(); ++c) {
      cat.components.emplace_back();
      const auto& list = array(comps[c], at("/components", c));
      for (size_t i = 0; i < list.size(); ++i) cat.components.back().push_back(object(list[i], at(at("/components", c), i)));
    }
  } else {
    for (size_t i = 0; i < cat.objects.size(); ++i) cat.components.push_back({static_cast<int>(i)});
  }
  cat.dim_obj = scalar_list(need(j, "dim_obj", "/"), "/dim_obj");
  cat.dim_end = scalar_list(need(j, "dim_end", "/"), "/dim_end");
  if (cat.dim_obj.size() != cat.objects.size()) throw ParseError("one dim_obj per object", "/dim_obj");
  if (cat.dim_end.size() != cat.objects.size()) throw ParseError("one dim_end per object", "/dim_end");

  const auto& dim_mor = need(j, "dim_mor", "/");
  if (!dim_mor.is_object()) throw ParseError("dim_mor must map morphism names to scalars", "/dim_mor");
  const auto& fusion = array(need(j, "fusion", "/"), "/fusion");
  for (size_t i = 0; i < fusion.size(); ++i) {
    std::string w = at("/fusion", i);
    const auto& src = array(need(fusion[i], "source", w), w + "/source");
    if (src.size() != 2) throw ParseError("source must list two objects", w + "/source");
    int l = object(src[0], w + "/source/0"), r = object(src[1], w + "/source/1");
    int t = object(need(fusion[i], "target", w), w + "/target");
    const auto& ms = array(need(fusion[i], "morphisms", w), w + "/morphisms");
    for (size_t k = 0; k < ms.size(); ++k) {
      Morphism m;
      m.name = str(ms[k], at(w + "/morphisms", k));
      m.left = l;
      m.right = r;
      m.target = t;
      if (!dim_mor.contains(m.name)) throw ParseError("no dimension for morphism '" + m.name + "'", "/dim_mor");
      m.dim = scalar_from_json(dim_mor[m.name], "/dim_mor/" + m.name);
      for (const auto& other : cat.morphisms)
        if (other.name == m.name) throw ParseError("duplicate morphism '" + m.name + "'", at(w + "/morphisms", k));
      cat.morphisms.push_back(std::move(m));
    }
  }
  auto morphism = [&](const json& v, const std::string& w) {
    auto name = str(v, w);
    for (size_t i = 0; i < cat.morphisms.size(); ++i)
      if (cat.morphisms[i].name == name) return static_cast<int>(i);
    throw ParseError("unknown morphism '" + name + "'", w);
  };
  auto matrix = [&](const json& v, const std::string& w) {
    Matrix m;
    const auto& rows = array(v, w);
    for (size_t r = 0; r < rows.size(); ++r) m.push_back(scalar_list(rows[r], at(w, r)));
    return m;
  };
  if (j.contains("tetra")) {
    const auto& tetra = array(j["tetra"], "/tetra");
    for (size_t i = 0; i < tetra.size(); ++i) {
      std::string w = at("/tetra", i);
      const auto& labels = array(need(tetra[i], "labels", w), w + "/labels");
      if (labels.size() != 4) throw ParseError("tetra labels list four morphisms", w + "/labels");
      TetraKey key{};
      for (int k = 0; k < 4; ++k) key[k] = morphism(labels[k], at(w + "/labels", k));
      TetraBlock block;
      block.dim = need(tetra[i], "dim", w).get<int>();
      block.pairing = matrix(need(tetra[i], "pairing", w), w + "/pairing");
      if (!cat.tetra.emplace(key, std::move(block)).second) throw ParseError("duplicate tetra entry", w);
    }
  }
  if (j.contains("ten_j")) {
    const auto& tj = array(j["ten_j"], "/ten_j");
    for (size_t i = 0; i < tj.size(); ++i) {
      std::string w = at("/ten_j", i);
      const auto& labels = array(need(tj[i], "labels", w), w + "/labels");
      if (labels.size() != 10) throw ParseError("ten_j labels list ten morphisms", w + "/labels");
      TenJKey key{};
      for (int k = 0; k < 10; ++k) key[k] = morphism(labels[k], at(w + "/labels", k));
      TenJEntry e{scalar_list(need(tj[i], "plus", w), w + "/plus"), scalar_list(need(tj[i], "minus", w), w + "/minus")};
      if (!cat.ten_j.emplace(key, std::move(e)).second) throw ParseError("duplicate ten_j entry", w);
    }
  }
  if (j.contains("unit")) cat.unit = object(j["unit"], "/unit");
  if (j.contains("canonical_bases")) cat.canonical_bases = j["canonical_bases"].get<bool>();
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    GroupLabels gl{parse_group(need(l, "G", "/labels"), "/labels/G"), parse_group(need(l, "A", "/labels"), "/labels/A"),
                   need(l, "object_grade", "/labels").get<std::vector<int>>(),
                   need(l, "morphism_label", "/labels").get<std::vector<int>>()};
    if (gl.object_grade.size() != cat.objects.size() || gl.morphism_label.size() != cat.morphisms.size())
      throw ParseError("labels must cover every object and morphism", "/labels");
    cat.labels = std::move(gl);
  }
  // Zero dimensions would make build() divide by zero; report them as
  // invariant violations first.
  std::vector<std::string> bad;
  for (const auto& m : cat.morphisms)
    if (m.dim.is_zero()) bad.push_back("dim(" + m.name + ") = 0");
  for (size_t a = 0; a < cat.objects.size(); ++a)
    if (cat.dim_obj[a].is_zero() || cat.dim_end[a].is_zero()) bad.push_back("d(" + cat.objects[a] + ") = 0");
  if (!bad.empty()) {
    std::string msg = "category violates invariants:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw ValidationError(msg);
  }
  cat.build();
  auto rep = validate_category(cat);
  if (!rep.pass) {
    std::string msg = "category violates invariants:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
  return cat;
}

Fusion2CatData parse_impl(const std::string& text, bool check_cocycles) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!j.is_object()) throw ParseError("category must be a JSON object", "/");
  if (j.contains("generator")) {
    auto cat = from_generator(j, check_cocycles);
    cat.generator = j.dump();
    return cat;
  }
  return from_tables(j);
}

json tables_json(const Fusion2CatData& cat) {
  json j;
  j["objects"] = cat.objects;
  json comps = json::array();
  for (const auto& c : cat.components) {
    json row = json::array();
    for (int a : c) row.push_back(cat.objects[a]);
    comps.push_back(std::move(row));
  }
  j["components"] = std::move(comps);
  auto list = [](const std::vector<Cyclotomic>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(scalar_to_json(x));
    return a;
  };
  j["dim_obj"] = list(cat.dim_obj);
  j["dim_end"] = list(cat.dim_end);
  json fusion = json::array(), dim_mor = json::object();
  for (size_t i = 0; i < cat.morphisms.size();) {
    const auto& m = cat.morphisms[i];
    json entry{{"source", {cat.objects[m.left], cat.objects[m.right]}}, {"target", cat.objects[m.target]}};
    json names = json::array();
    for (; i < cat.morphisms.size() && cat.morphisms[i].left == m.left && cat.morphisms[i].right == m.right &&
           cat.morphisms[i].target == m.target;
         ++i) {
      names.push_back(cat.morphisms[i].name);
      dim_mor[cat.morphisms[i].name] = scalar_to_json(cat.morphisms[i].dim);
    }
    entry["morphisms"] = std::move(names);
    fusion.push_back(std::move(entry));
  }
  j["fusion"] = std::move(fusion);
  j["dim_mor"] = std::move(dim_mor);
  // Sorted keys give a stable file.
  std::vector<TetraKey> tkeys;
  for (const auto& [k, b] : cat.tetra) tkeys.push_back(k);
  std::sort(tkeys.begin(), tkeys.end());
  json tetra = json::array();
  for (const auto& k : tkeys) {
    const auto& b = cat.tetra.at(k);
    json labels = json::array(), pairing = json::array();
    for (int m : k) labels.push_back(cat.morphisms[m].name);
    for (const auto& row : b.pairing) pairing.push_back(list(row));
    tetra.push_back({{"labels", labels}, {"dim", b.dim}, {"pairing", pairing}});
  }
  j["tetra"] = std::move(tetra);
  std::vector<TenJKey> jkeys;
  for (const auto& [k, e] : cat.ten_j) jkeys.push_back(k);
  std::sort(jkeys.begin(), jkeys.end());
  json tj = json::array();
  for (const auto& k : jkeys) {
    const auto& e = cat.ten_j.at(k);
    json labels = json::array();
    for (int m : k) labels.push_back(cat.morphisms[m].name);
    tj.push_back({{"labels", labels}, {"plus", list(e.plus)}, {"minus", list(e.minus)}});
  }
  j["ten_j"] = std::move(tj);
  if (cat.unit) j["unit"] = cat.objects[*cat.unit];
  j["canonical_bases"] = cat.canonical_bases;
  if (cat.labels) {
    j["labels"] = {{"G", group_json(cat.labels->G)},
                   {"A", group_json(cat.labels->A)},
                   {"object_grade", cat.labels->object_grade},
                   {"morphism_label", cat.labels->morphism_label}};
  }
  return j;
}

}  // namespace

Fusion2CatData parse_category(const std::string& text, bool check_cocycles) {
  try {
    return parse_impl(text, check_cocycles);
  } catch (const json::exception& e) {
    throw ParseError(e.what(), "/");
  }
}

Fusion2CatData load_category(const std::string& path, bool check_cocycles) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_category(ss.str(), check_cocycles);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), path);
  }
}

std::string serialize_category(const Fusion2CatData& cat, bool tables) {
  if (!tables && !cat.generator.empty()) return json::parse(cat.generator).dump(1) + "\n";
  return tables_json(cat).dump(1) + "\n";
}

void save_category(const Fusion2CatData& cat, const std::string& path, bool tables) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file", path);
  out << serialize_category(cat, tables);
}

}  // namespace state4
