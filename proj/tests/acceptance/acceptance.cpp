// Acceptance run: one PASS/FAIL line per criterion, details with --verbose.
//
//   state4_acceptance [--fixtures DIR] [--data DIR] [--only N,...] [--expect-fail N,...] [--verbose]
//
// The exit status is the number of failed criteria that were not listed in
// --expect-fail; an expected failure that passes is reported but not counted.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flat_oracle.hpp"
#include "state4/category/category_io.hpp"
#include "state4/category/generators.hpp"
#include "state4/category/identities.hpp"
#include "state4/category/pachner.hpp"
#include "state4/errors.hpp"
#include "state4/simplicial/bistellar.hpp"
#include "state4/simplicial/complex_io.hpp"
#include "state4/statesum/state_sum.hpp"

using namespace state4;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Settings {
  std::string fixtures = STATE4_FIXTURE_DIR;
  std::string data = STATE4_TEST_DATA_DIR;
  std::set<int> only, expect_fail;
  bool verbose = false;
};

Settings settings;

// Collects per-check outcomes of one criterion.
struct Outcome {
  int checks = 0, failures = 0;
  std::vector<std::string> notes;  // failures first, then remarks

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      notes.insert(notes.begin() + (failures - 1), what);
    }
    if (settings.verbose) std::cerr << "    " << (ok ? "ok   " : "FAIL ") << what << "\n";
  }
  void remark(const std::string& s) {
    notes.push_back(s);
    if (settings.verbose) std::cerr << "    note " << s << "\n";
  }
};

Cyclotomic q(long a, long b = 1) { return Cyclotomic(Rational(a, b)); }

const std::vector<std::string> kComplexes = {"boundary_delta5", "s1xs3_staircase", "cp2_kuhnel9"};
const std::vector<std::string> kCategories = {"trivial", "dw_z2",      "dw_z3",     "boson",
                                              "semion",  "antisemion", "fermion",   "yetter_z2_z2"};

OrderedOrientedComplex complex_fixture(const std::string& name) {
  return load_oriented_complex(settings.fixtures + "/complexes/" + name + ".json");
}

const Fusion2CatData& category_fixture(const std::string& name) {
  static std::map<std::string, Fusion2CatData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_category(settings.fixtures + "/categories/" + name + ".json")).first;
  return it->second;
}

bool group_labelled(const Fusion2CatData& c) { return c.labels.has_value(); }

// log2 of the number of admissible states, read off a reduced run: the
// representatives times the coboundary orbit times the vertex gauge orbit.
double log2_full_states(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const StateSumStats& st) {
  const auto& gl = *cat.labels;
  auto p = gl.A.prime_exponent();
  int comps = 0;
  {
    std::vector<int> up(k.complex().num_vertices());
    for (size_t v = 0; v < up.size(); ++v) up[v] = static_cast<int>(v);
    std::function<int(int)> find = [&](int v) { return up[v] == v ? v : up[v] = find(up[v]); };
    for (const auto& e : k.complex().simplices(1)) up[find(e[0])] = find(e[1]);
    for (size_t v = 0; v < up.size(); ++v) comps += find(static_cast<int>(v)) == static_cast<int>(v);
  }
  double bits = std::log2(std::max<long long>(st.states, 1));
  if (p && *p > 1) bits += static_cast<double>(st.multiplier_log) * std::log2(*p);
  bits += (k.complex().num_vertices() - comps) * std::log2(gl.G.order());
  return bits;
}

// Full enumeration is attempted up to this many states.
constexpr double kFullBits = 24.0;

struct Eval {
  Cyclotomic value;
  std::string mode;
};

// Z by full enumeration when the state space is small enough, by the reduced
// mode otherwise.
Eval evaluate(const OrderedOrientedComplex& k, const Fusion2CatData& cat) {
  if (!group_labelled(cat)) return {state_sum(k, cat), "full"};
  StateSumStats st;
  Cyclotomic r = state_sum_reduced(k, cat, {}, &st);
  if (log2_full_states(k, cat, st) > kFullBits) return {r, "reduced"};
  Cyclotomic f = state_sum(k, cat);
  if (f != r) throw std::runtime_error("reduced " + r.to_string() + " differs from full " + f.to_string());
  return {f, "both"};
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  rng.shuffle(p);
  return p;
}

// ---------------------------------------------------------------- criteria

void trivial_category_is_one(Outcome& o) {
  auto cat = trivial_category();
  for (const auto& name : kComplexes) {
    auto k = complex_fixture(name);
    auto t = Clock::now();
    auto z = state_sum(k, cat);
    double s = seconds_since(t);
    o.expect(z == q(1), name + ": Z = " + z.to_string());
    o.expect(s < 1.0, name + ": " + std::to_string(s) + " s (limit 1 s)");
  }
}

void dijkgraaf_witten_matches_oracle(Outcome& o) {
  for (const char* gname : {"Z2", "Z3"}) {
    auto g = GroupPresentation::preset(gname);
    auto cat = gen_twisted_dw(g, CochainTable::trivial(g, 4));
    const long n = g.order();
    for (const auto& [name, limit, want] :
         {std::tuple{std::string("boundary_delta5"), 1.0, q(1, n)}, {"s1xs3_staircase", 60.0, q(n, n)}}) {
      auto k = complex_fixture(name);
      auto t = Clock::now();
      auto z = state_sum(k, cat);
      double s = seconds_since(t);
      auto oracle = oracle::dw_untwisted(k.complex(), g);
      std::string tag = std::string(gname) + " on " + name;
      o.expect(z == want, tag + ": Z = " + z.to_string() + ", expected " + want.to_string());
      o.expect(z == oracle, tag + ": flat-connection oracle gives " + oracle.to_string());
      o.expect(s < limit, tag + ": " + std::to_string(s) + " s (limit " + std::to_string(int(limit)) + " s)");
    }
  }
}

void bistellar_invariance(Outcome& o) {
  auto start = complex_fixture("boundary_delta5");
  std::vector<MoveRecord> log;
  auto end = random_move_walk(start, 20, 20260101, {}, &log);
  o.expect(log.size() == 20, "walk applied " + std::to_string(log.size()) + " moves");
  for (const char* name : {"dw_z2", "dw_z3", "semion", "fermion", "yetter_z2_z2"}) {
    const auto& cat = category_fixture(name);
    auto base = evaluate(start, cat).value;
    // Replay the walk one move at a time so every intermediate complex is checked.
    auto k = start;
    std::map<std::string, int> modes;
    bool same = true;
    for (int i = 1; i <= 20 && same; ++i) {
      k = random_move_walk(start, i, 20260101);
      auto e = evaluate(k, cat);
      ++modes[e.mode];
      if (e.value != base) {
        same = false;
        o.expect(false, std::string(name) + ": after move " + std::to_string(i) + " (" + log[i - 1].describe() +
                            ") Z = " + e.value.to_string() + ", on ∂Δ⁵ " + base.to_string());
      }
    }
    if (same) o.expect(serialize_complex(k) == serialize_complex(end), std::string(name) + ": replay reaches the walk's end");
    if (same) o.expect(true, std::string(name) + ": Z = " + base.to_string() + " after each of 20 moves");
    std::string m;
    for (const auto& [mode, count] : modes) m += " " + mode + "=" + std::to_string(count);
    o.remark(std::string(name) + " modes:" + m);
  }
}

void ordering_invariance(Outcome& o) {
  auto sphere = complex_fixture("boundary_delta5");
  auto moved = random_move_walk(sphere, 4, 7);
  Rng rng(99);
  for (const auto& [label, k] : {std::pair{std::string("∂Δ⁵"), sphere}, {"∂Δ⁵ after 4 moves", moved}}) {
    std::vector<std::vector<int>> perms;
    for (int i = 0; i < 10; ++i) perms.push_back(random_permutation(k.complex().num_vertices(), rng));
    for (const auto& name : kCategories) {
      const auto& cat = category_fixture(name);
      auto base = evaluate(k, cat).value;
      int agree = 0;
      for (const auto& p : perms) {
        auto z = evaluate(k.reorder(p), cat).value;
        if (z == base)
          ++agree;
        else
          o.expect(false, name + " on " + label + ": order " + join(p) + " gives " + z.to_string() + ", not " +
                              base.to_string());
      }
      if (agree == 10) o.expect(true, name + " on " + label + ": Z = " + base.to_string() + " for 10 orders");
    }
  }
}

void cohomologous_twists(Outcome& o) {
  auto g = GroupPresentation::preset("Z2");
  auto untwisted = gen_twisted_dw(g, CochainTable::trivial(g, 4));
  Rng rng(5);
  for (int i = 0; i < 3; ++i) {
    auto nu = random_cochain(g, 3, 4, rng);
    auto twisted = gen_twisted_dw(g, coboundary(nu));
    for (const auto& name : kComplexes) {
      auto k = complex_fixture(name);
      auto a = state_sum(k, untwisted), b = state_sum(k, twisted);
      o.expect(a == b, "ν #" + std::to_string(i + 1) + " on " + name + ": " + b.to_string() + " vs " + a.to_string());
    }
  }
}

void pachner_identities(Outcome& o) {
  auto g = GroupPresentation::preset("Z2");
  Rng rng(11);
  std::vector<std::pair<std::string, Fusion2CatData>> cats = {
      {"dw_z2", category_fixture("dw_z2")},
      {"dw_z2 with ω = dν", gen_twisted_dw(g, coboundary(random_cochain(g, 3, 4, rng)))},
  };
  for (const char* name : {"semion", "fermion", "boson", "antisemion", "yetter_z2_z2"})
    cats.emplace_back(name, category_fixture(name));
  for (const auto& [name, cat] : cats)
    for (int p : {3, 2, 1}) {
      auto r = check_pachner_exhaustive(cat, p);
      o.expect(r.pass && r.complete, name + " " + r.check + ": " + std::to_string(r.labelings) + " labelings" +
                                         (r.pass ? "" : ", witness " + r.witness));
    }
  // Negative controls: each must fail some move and name the labeling.
  for (const auto& [file, check] : {std::pair{"dw_z2_bad_omega.json", false}, {"semion_corrupt_ten_j.json", true}}) {
    auto cat = load_category(settings.data + "/" + file, check);
    bool caught = false;
    std::string witness;
    for (int p : {3, 2, 1}) {
      auto r = check_pachner_exhaustive(cat, p);
      if (!r.pass && r.failing && !r.witness.empty()) {
        caught = true;
        witness = r.check + " " + r.witness;
        break;
      }
    }
    o.expect(caught, std::string(file) + (caught ? " fails at " + witness : " was not caught"));
  }
}

void dimension_identities(Outcome& o) {
  auto G = [](const char* n) { return GroupPresentation::preset(n); };
  auto dw = [&](const char* n) { return gen_twisted_dw(G(n), CochainTable::trivial(G(n), 4)); };
  std::vector<std::tuple<std::string, Fusion2CatData, Cyclotomic>> cats = {
      {"trivial", trivial_category(), q(1)},
      {"dw Z2", dw("Z2"), q(2)},
      {"dw Z3", dw("Z3"), q(3)},
      {"dw S3", dw("S3"), q(6)},
      {"dw Z2xZ2", dw("Z2xZ2"), q(4)},
      {"pointed Z3:2", gen_pointed_braided(BraidedData::preset("Z3:2")), q(1, 3)},
      {"yetter Z2,Z2", gen_yetter_2group(G("Z2"), G("Z2")), q(1)},
      {"yetter Z3,Z2", gen_yetter_2group(G("Z3"), G("Z2")), q(3, 2)},
  };
  for (const char* p : {"boson", "semion", "fermion", "antisemion"})
    cats.emplace_back(std::string("pointed ") + p, gen_pointed_braided(BraidedData::preset(p)), q(1, 2));
  for (const auto& name : kCategories) cats.emplace_back("fixture " + name, category_fixture(name), Cyclotomic());
  for (const auto& [name, cat, want] : cats) {
    auto rep = check_dimension_identities(cat);
    int passed = 0, skipped = 0;
    std::string failed;
    for (const auto& r : rep.results) {
      if (r.status == IdentityStatus::Pass) ++passed;
      if (r.status == IdentityStatus::Skipped) ++skipped;
      if (r.status == IdentityStatus::Fail) failed += " " + r.name + " (" + r.detail + ")";
    }
    o.expect(rep.pass, name + ": " + std::to_string(passed) + " pass, " + std::to_string(skipped) + " skipped" +
                           (failed.empty() ? "" : ", failed:" + failed));
    const auto* gd = rep.find("global dimension");
    if (!want.is_zero())
      o.expect(gd && gd->value && *gd->value == want,
               name + ": dim(C) = " + (gd && gd->value ? gd->value->to_string() : "?") + ", expected " +
                   want.to_string());
  }
}

void reduction_soundness(Outcome& o) {
  int both = 0;
  std::vector<std::string> infeasible;
  for (const char* cx : {"boundary_delta5", "s1xs3_staircase"}) {
    auto k = complex_fixture(cx);
    for (const auto& name : kCategories) {
      const auto& cat = category_fixture(name);
      StateSumStats st;
      Cyclotomic r;
      try {
        r = state_sum_reduced(k, cat, {}, &st);
      } catch (const Error& e) {
        o.expect(false, name + " on " + cx + ": reduced mode threw " + e.what());
        continue;
      }
      o.expect(st.self_checks >= 32, name + " on " + cx + ": " + std::to_string(st.self_checks) + " self-checks");
      double bits = log2_full_states(k, cat, st);
      if (bits > kFullBits) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "2^%.0f", bits);
        infeasible.push_back(name + " on " + cx + " (" + buf + " states)");
        continue;
      }
      auto f = state_sum(k, cat);
      ++both;
      o.expect(f == r, name + " on " + cx + ": reduced " + r.to_string() + ", full " + f.to_string());
    }
  }
  // The first complexes of a move walk are small enough for both modes.
  auto sphere = complex_fixture("boundary_delta5");
  for (int i = 1; i <= 4; ++i) {
    auto k = random_move_walk(sphere, i, 7);
    for (const char* name : {"semion", "fermion", "yetter_z2_z2"}) {
      const auto& cat = category_fixture(name);
      auto r = state_sum_reduced(k, cat);
      auto f = state_sum(k, cat);
      ++both;
      o.expect(f == r, std::string(name) + " after " + std::to_string(i) + " moves: reduced " + r.to_string() +
                           ", full " + f.to_string());
    }
  }
  o.remark(std::to_string(both) + " instances ran in both modes");
  for (const auto& s : infeasible) o.expect(false, "full mode not run: " + s);
}

void golden_values(Outcome& o) {
  std::ifstream in(settings.fixtures + "/golden/state_sums.json");
  auto doc = nlohmann::json::parse(in);
  std::map<std::string, std::string> seen;
  for (const auto& e : doc.at("values")) {
    std::string cx = e.at("complex"), name = e.at("category"), want = e.at("value");
    auto k = complex_fixture(cx);
    auto got = state_sum_reduced(k, category_fixture(name)).to_string();
    o.expect(got == want, name + " on " + cx + ": \"" + got + "\", frozen \"" + want + "\"");
    seen[cx + "/" + name] = got;
  }
  o.expect(seen.count("cp2_kuhnel9/semion") && seen.count("cp2_kuhnel9/fermion") &&
               seen["cp2_kuhnel9/semion"] != seen["cp2_kuhnel9/fermion"],
           "semion and fermion differ on CP²");
  for (const char* p : {"boson", "semion", "fermion", "antisemion"})
    o.expect(seen.count(std::string("boundary_delta5/") + p), std::string(p) + " on ∂Δ⁵ is frozen");
}

void degenerations(Outcome& o) {
  auto trivial = GroupPresentation::preset("1");
  for (const char* gname : {"Z2", "Z3"}) {
    auto g = GroupPresentation::preset(gname);
    auto y = gen_yetter_2group(g, trivial);
    auto d = gen_twisted_dw(g, CochainTable::trivial(g, 4));
    o.expect(same_data_ignoring_names(y, d), std::string("yetter(") + gname + ", 1) equals dw " + gname);
    for (const auto& name : kComplexes) {
      auto k = complex_fixture(name);
      auto a = evaluate(k, y).value, b = state_sum(k, d);
      o.expect(a == b, std::string(gname) + " on " + name + ": " + a.to_string() + " vs " + b.to_string());
    }
  }
  for (const char* aname : {"Z2", "Z3"}) {
    auto a = GroupPresentation::preset(aname);
    auto y = gen_yetter_2group(trivial, a);
    auto p = gen_pointed_braided(BraidedData::trivial(a));
    for (const auto& name : kComplexes) {
      auto k = complex_fixture(name);
      auto zy = state_sum_reduced(k, y), zp = state_sum_reduced(k, p);
      o.expect(zy == zp, std::string("yetter(1, ") + aname + ") on " + name + ": " + zy.to_string() + " vs " +
                             zp.to_string());
    }
  }
}

void multiplicativity(Outcome& o) {
  auto sphere = complex_fixture("boundary_delta5").complex();
  for (const auto& other : kComplexes) {
    auto b = complex_fixture(other).complex();
    auto ka = OrderedOrientedComplex::from_complex(sphere);
    auto kb = OrderedOrientedComplex::from_complex(b);
    auto ku = OrderedOrientedComplex::from_complex(disjoint_union(sphere, b));
    for (const auto& name : kCategories) {
      const auto& cat = category_fixture(name);
      auto za = state_sum_reduced(ka, cat), zb = state_sum_reduced(kb, cat), zu = state_sum_reduced(ku, cat);
      o.expect(zu == za * zb, name + " on ∂Δ⁵ ⊔ " + other + ": " + zu.to_string() + " vs " + za.to_string() +
                                  " · " + zb.to_string());
    }
  }
  // One full-mode union, independent of the reduction.
  auto ku = OrderedOrientedComplex::from_complex(disjoint_union(sphere, sphere));
  for (const char* name : {"dw_z3", "semion"}) {
    auto z1 = state_sum(complex_fixture("boundary_delta5"), category_fixture(name));
    auto zu = state_sum(ku, category_fixture(name));
    o.expect(zu == z1 * z1, std::string(name) + " full on ∂Δ⁵ ⊔ ∂Δ⁵: " + zu.to_string());
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  void (*run)(Outcome&);
};

const Criterion kCriteria[] = {
    {1, "trivial category gives 1", 3, trivial_category_is_one},
    {2, "Dijkgraaf-Witten matches the flat-connection count", 62, dijkgraaf_witten_matches_oracle},
    {3, "invariance under 20 random bistellar moves", 600, bistellar_invariance},
    {4, "invariance under vertex reordering", 300, ordering_invariance},
    {5, "cohomologous twists give equal values", 120, cohomologous_twists},
    {6, "exhaustive Pachner identities and corrupted controls", 600, pachner_identities},
    {7, "dimension identities", 60, dimension_identities},
    {8, "reduced mode equals full enumeration", 600, reduction_soundness},
    {9, "frozen golden values", 1800, golden_values},
    {10, "generator degenerations", 120, degenerations},
    {11, "multiplicativity over disjoint union", 120, multiplicativity},
};

std::set<int> parse_ids(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) throw std::runtime_error(a + " needs a value");
      return argv[++i];
    };
    if (a == "--fixtures")
      settings.fixtures = next();
    else if (a == "--data")
      settings.data = next();
    else if (a == "--only")
      settings.only = parse_ids(next());
    else if (a == "--expect-fail")
      settings.expect_fail = parse_ids(next());
    else if (a == "--verbose" || a == "-v")
      settings.verbose = true;
    else {
      std::cerr << "usage: state4_acceptance [--fixtures DIR] [--data DIR] [--only N,..] [--expect-fail N,..] [-v]\n";
      return 64;
    }
  }
  int unexpected = 0;
  for (const auto& c : kCriteria) {
    if (!settings.only.empty() && !settings.only.count(c.id)) continue;
    if (settings.verbose) std::cerr << "criterion " << c.id << ": " << c.title << "\n";
    Outcome o;
    auto t = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("threw: ") + e.what());
    }
    double s = seconds_since(t);
    if (s > c.limit_s) o.expect(false, "took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s) + " s");
    bool pass = o.failures == 0;
    bool expected = settings.expect_fail.count(c.id) > 0;
    char head[160];
    std::snprintf(head, sizeof head, "%2d %s  %-52s %8.2f s  %d/%d checks", c.id, pass ? "PASS" : "FAIL", c.title, s,
                  o.checks - o.failures, o.checks);
    std::cout << head;
    if (!pass) {
      std::cout << "  first failure: " << o.notes.front();
      if (o.failures > 1) std::cout << " (+" << o.failures - 1 << " more)";
      if (expected) std::cout << " [expected]";
    } else if (expected) {
      std::cout << "  [listed as expected to fail]";
    }
    std::cout << std::endl;
    if (!pass && !expected) ++unexpected;
  }
  return unexpected;
}
