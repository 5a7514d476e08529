#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "state4/category/category_io.hpp"
#include "state4/category/generators.hpp"
#include "state4/category/identities.hpp"
#include "state4/category/pachner.hpp"
#include "state4/errors.hpp"
#include "state4/simplicial/bistellar.hpp"
#include "state4/simplicial/complex_io.hpp"
#include "state4/simplicial/validate.hpp"
#include "state4/statesum/state_sum.hpp"

using namespace state4;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kParse = 2, kValidation = 3, kSelfCheck = 4 };

struct Config {
  std::string complex_path, category_path, report_path, output_path;
  std::string mode = "full", out = "exact";
  int threads = 1;
  std::uint64_t seed = 1;
  bool reverse = false;
  // gen
  std::string kind, group, g_name, a_name, omega = "trivial", preset, braiding;
  bool tables = false;
  // moves
  int count = 0;
  std::vector<int> kinds;
  // identities / validate-category
  long budget = -1;
};

std::string approx(const Cyclotomic& v) {
  auto z = v.to_complex();
  char buf[96];
  if (z.imag() == 0) {
    std::snprintf(buf, sizeof buf, "%.15g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.15g %c %.15gi", z.real(), z.imag() < 0 ? '-' : '+', std::fabs(z.imag()));
  }
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write file", path);
  f << text;
}

void write_report(const Config& c, const json& report) {
  if (!c.report_path.empty()) write_text(c.report_path, report.dump(2) + "\n");
}

std::string labeling_text(const BoundaryLabeling& b) {
  std::string s;
  for (const auto& [simplex, label] : b) {
    if (!s.empty()) s += ' ';
    for (int v : simplex) s += std::to_string(v);
    s += '=' + std::to_string(label);
  }
  return s;
}

json pachner_json(const PachnerReport& r) {
  json j{{"check", r.check}, {"pass", r.pass}, {"labelings", r.labelings}, {"complete", r.complete}};
  if (!r.pass) j["witness"] = r.witness;
  if (r.failing) j["failing_labeling"] = labeling_text(*r.failing);
  return j;
}

void print_pachner(const PachnerReport& r) {
  std::cout << "pachner " << r.check << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.labelings << " labelings"
            << (r.complete ? "" : ", budget reached") << ")\n";
  if (!r.pass) std::cout << "  witness: " << r.witness << "\n";
}

int cmd_compute(const Config& c) {
  auto k = load_oriented_complex(c.complex_path);
  auto cat = load_category(c.category_path);
  StateSumOptions opt;
  opt.threads = c.threads;
  opt.seed = c.seed;
  opt.reverse_orientation = c.reverse;
  StateSumStats stats;
  Cyclotomic z = c.mode == "reduced" ? state_sum_reduced(k, cat, opt, &stats) : state_sum(k, cat, opt, &stats);
  if (c.out != "approx") std::cout << z.to_string() << "\n";
  if (c.out != "exact") std::cout << approx(z) << "\n";
  json report{{"command", "compute"},
              {"complex", c.complex_path},
              {"category", c.category_path},
              {"mode", c.mode},
              {"seed", c.seed},
              {"rng", Rng::kAlgorithm},
              {"reverse_orientation", c.reverse},
              {"value", z.to_string()},
              {"approx", approx(z)},
              {"path", stats.path},
              {"states", stats.states},
              {"self_checks", stats.self_checks}};
  write_report(c, report);
  return kOk;
}

int cmd_validate_complex(const Config& c) {
  auto file = read_complex_file(c.complex_path);
  auto rep = validate_singular_4manifold(file.complex);
  json failures = json::array();
  for (const auto& f : rep.failures) failures.push_back({{"check", f.check}, {"simplex", f.simplex}, {"detail", f.detail}});
  bool orientable = true;
  std::string orient_detail;
  if (rep.pass) {
    try {
      to_oriented(file);
    } catch (const NonOrientable& e) {
      orientable = false;
      orient_detail = e.what();
    }
  }
  bool pass = rep.pass && orientable;
  std::cout << "complex " << c.complex_path << ": " << (pass ? "PASS" : "FAIL") << " (" << file.complex.num_vertices()
            << " vertices, " << file.complex.facets().size() << " facets)\n";
  for (const auto& f : rep.failures) std::cout << "  " << f.check << " at " << f.simplex << ": " << f.detail << "\n";
  if (!orientable) std::cout << "  orientation: " << orient_detail << "\n";
  json report{{"command", "validate-complex"},
              {"complex", c.complex_path},
              {"pass", pass},
              {"vertices", file.complex.num_vertices()},
              {"facets", file.complex.facets().size()},
              {"orientable", orientable},
              {"failures", failures}};
  write_report(c, report);
  return pass ? kOk : kValidation;
}

int cmd_validate_category(const Config& c) {
  json report{{"command", "validate-category"}, {"category", c.category_path}};
  bool pass = true;
  Fusion2CatData cat;
  try {
    cat = load_category(c.category_path);
  } catch (const InvalidCocycle& e) {
    // Build the tables anyway so the failing tuple comes with a Pachner witness.
    pass = false;
    std::cout << "category " << c.category_path << ": FAIL\n  cocycle: " << e.what() << "\n";
    report["cocycle"] = e.what();
    cat = load_category(c.category_path, false);
  }
  auto structure = validate_category(cat);
  json violations = structure.violations;
  for (const auto& v : structure.violations) std::cout << "  " << v << "\n";
  pass = pass && structure.pass;
  auto p33 = check_pachner_exhaustive(cat, 3, c.budget);
  pass = pass && p33.pass;
  if (report.contains("cocycle") == false) std::cout << "category " << c.category_path << ": " << (pass ? "PASS" : "FAIL") << "\n";
  print_pachner(p33);
  report["pass"] = pass;
  report["violations"] = violations;
  report["pachner"] = json::array({pachner_json(p33)});
  write_report(c, report);
  return pass ? kOk : kValidation;
}

std::string group_arg(const std::string& name) {
  GroupPresentation::preset(name);  // validates
  return name;
}

json random_omega(const std::string& group, std::uint64_t seed) {
  auto g = GroupPresentation::preset(group);
  Rng rng(seed);
  auto nu = random_cochain(g, 3, std::max(2, g.order()), rng);
  json vals = json::array();
  for (const auto& v : nu.values) vals.push_back(v.to_string());
  return json{{"coboundary", vals}};
}

json omega_arg(const std::string& omega, const std::string& group, std::uint64_t seed) {
  if (omega == "trivial") return "trivial";
  if (omega == "coboundary") return random_omega(group, seed);
  throw ValidationError("--omega must be trivial or coboundary");
}

int cmd_gen(const Config& c) {
  json j;
  if (c.kind == "trivial") {
    j = {{"generator", "trivial"}};
  } else if (c.kind == "dw") {
    j = {{"generator", "dw"}, {"group", group_arg(c.group)}, {"omega", omega_arg(c.omega, c.group, c.seed)}};
  } else if (c.kind == "pointed") {
    j = {{"generator", "pointed"}, {"group", group_arg(c.group)}};
    if (!c.preset.empty()) j["preset"] = c.preset;
  } else if (c.kind == "yetter") {
    j = {{"generator", "yetter"}, {"G", group_arg(c.g_name)}, {"A", group_arg(c.a_name)},
         {"omega", omega_arg(c.omega, c.g_name, c.seed)}};
    if (!c.braiding.empty()) j["braiding"] = c.braiding;
  } else {
    throw ValidationError("unknown generator '" + c.kind + "'");
  }
  auto cat = parse_category(j.dump());
  write_text(c.output_path, serialize_category(cat, c.tables));
  return kOk;
}

int cmd_moves(const Config& c) {
  auto k = load_oriented_complex(c.complex_path);
  std::vector<MoveRecord> log;
  auto out = random_move_walk(k, c.count, c.seed, c.kinds, &log);
  write_text(c.output_path, serialize_complex(out, &log, c.seed));
  return kOk;
}

int cmd_identities(const Config& c) {
  auto cat = load_category(c.category_path);
  auto dims = check_dimension_identities(cat);
  bool pass = dims.pass;
  json results = json::array();
  for (const auto& r : dims.results) {
    std::cout << r.name << ": " << to_string(r.status);
    if (r.value) std::cout << " (" << r.value->to_string() << ")";
    if (!r.detail.empty()) std::cout << " " << r.detail;
    std::cout << "\n";
    json e{{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}};
    if (r.value) e["value"] = r.value->to_string();
    results.push_back(std::move(e));
  }
  json pachner = json::array();
  for (int p : {3, 2, 1}) {
    auto r = check_pachner_exhaustive(cat, p, c.budget);
    print_pachner(r);
    pass = pass && r.pass;
    pachner.push_back(pachner_json(r));
  }
  write_report(c, json{{"command", "identities"},
                       {"category", c.category_path},
                       {"pass", pass},
                       {"dimension_identities", results},
                       {"pachner", pachner}});
  return pass ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact state sums of triangulated 4-manifolds"};
  app.require_subcommand(1);
  Config c;

  auto complex_opt = [&](CLI::App* s) { s->add_option("--complex", c.complex_path, "Triangulation file")->required(); };
  auto category_opt = [&](CLI::App* s) { s->add_option("--category", c.category_path, "Category file")->required(); };
  auto report_opt = [&](CLI::App* s) { s->add_option("--report", c.report_path, "Write a JSON report"); };

  auto* compute = app.add_subcommand("compute", "Evaluate the state sum");
  complex_opt(compute);
  category_opt(compute);
  compute->add_option("--mode", c.mode, "full or reduced")->check(CLI::IsMember({"full", "reduced"}));
  compute->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  compute->add_option("--seed", c.seed, "Seed of the reduced-mode self-check");
  compute->add_option("--out", c.out, "exact, approx or both")->check(CLI::IsMember({"exact", "approx", "both"}));
  compute->add_flag("--reverse-orientation", c.reverse, "Negate every facet sign");
  report_opt(compute);

  auto* vcx = app.add_subcommand("validate-complex", "Check a closed combinatorial 4-manifold");
  complex_opt(vcx);
  report_opt(vcx);

  auto* vcat = app.add_subcommand("validate-category", "Check category tables and the (3,3) move");
  category_opt(vcat);
  vcat->add_option("--budget", c.budget, "Stop after this many boundary labelings");
  report_opt(vcat);

  auto* gen = app.add_subcommand("gen", "Write a category file");
  gen->add_option("kind", c.kind, "trivial, dw, pointed or yetter")->required();
  gen->add_option("--group", c.group, "Group preset (dw, pointed)");
  gen->add_option("--G", c.g_name, "Object group (yetter)");
  gen->add_option("--A", c.a_name, "Morphism group (yetter)");
  gen->add_option("--omega", c.omega, "trivial or coboundary (random, from --seed)");
  gen->add_option("--preset", c.preset, "Braided preset (pointed)");
  gen->add_option("--braiding", c.braiding, "Braided preset on A (yetter)");
  gen->add_option("--seed", c.seed, "Seed for random cochains");
  gen->add_flag("--tables", c.tables, "Write explicit tables instead of a generator reference");
  gen->add_option("-o,--output", c.output_path, "Output file (stdout by default)");

  auto* moves = app.add_subcommand("moves", "Apply a seeded random bistellar walk");
  complex_opt(moves);
  moves->add_option("--count", c.count, "Number of moves")->check(CLI::NonNegativeNumber);
  moves->add_option("--seed", c.seed, "Walk seed");
  moves->add_option("--kinds", c.kinds, "Allowed p values of (p,q) moves")->check(CLI::Range(1, 5));
  moves->add_option("-o,--output", c.output_path, "Output file (stdout by default)");

  auto* ids = app.add_subcommand("identities", "Dimension identities and exhaustive Pachner checks");
  category_opt(ids);
  ids->add_option("--budget", c.budget, "Stop each check after this many boundary labelings");
  report_opt(ids);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*compute) return cmd_compute(c);
    if (*vcx) return cmd_validate_complex(c);
    if (*vcat) return cmd_validate_category(c);
    if (*gen) return cmd_gen(c);
    if (*moves) return cmd_moves(c);
    if (*ids) return cmd_identities(c);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const MalformedFacet& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ReductionSelfCheckFailed& e) {
    std::cerr << "self-check failed: " << e.what() << "\n";
    return kSelfCheck;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kFail;
}
