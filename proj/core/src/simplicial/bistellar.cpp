#include "state4/simplicial/bistellar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "state4/errors.hpp"

namespace state4 {
namespace {

std::string fresh_name(const SimplicialComplex& c) {
  bool numeric = true;
  long max_id = -1;
  for (const auto& n : c.vertex_names()) {
    if (n.empty() || n.size() > 15 || !std::all_of(n.begin(), n.end(), ::isdigit)) {
      numeric = false;
      break;
    }
    max_id = std::max(max_id, std::stol(n));
  }
  if (numeric) return std::to_string(max_id + 1);
  for (int k = 0;; ++k) {
    std::string cand = "n" + std::to_string(k);
    if (c.vertex_index(cand) < 0) return cand;
  }
}

// Facets containing each simplex of dimension <= 4.
std::map<Simplex, std::vector<int>> stars(const SimplicialComplex& c) {
  std::map<Simplex, std::vector<int>> out;
  const auto& facets = c.facets();
  for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
    const auto& s = facets[f];
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      Simplex a;
      for (size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) a.push_back(s[i]);
      out[a].push_back(f);
    }
  }
  return out;
}

}  // namespace

std::string MoveRecord::describe() const {
  auto join = [](const std::vector<std::string>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
  };
  return "(" + std::to_string(p) + "," + std::to_string(q) + ") A=" + join(a) + " B=" + join(b);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

OrderedOrientedComplex apply_bistellar(const OrderedOrientedComplex& k, const BistellarMove& move,
                                       MoveRecord* record) {
  const SimplicialComplex& c = k.complex();
  const int p = move.p;
  if (p < 1 || p > 5 || move.q != 6 - p) throw InvalidSite("move kind must be (p, 6-p) with 1 <= p <= 5");
  if (static_cast<int>(move.site.size()) != p)
    throw InvalidSite("a (" + std::to_string(p) + "," + std::to_string(6 - p) + ") move needs " +
                      std::to_string(p) + " facets");
  std::set<Simplex> site;
  for (auto f : move.site) {
    std::sort(f.begin(), f.end());
    if (f.size() != 5 || !std::binary_search(c.facets().begin(), c.facets().end(), f))
      throw InvalidSite(c.format(f) + " is not a facet");
    if (!site.insert(f).second) throw InvalidSite("repeated facet in site");
  }
  Simplex a = *site.begin();
  std::set<int> uni;
  for (const auto& f : site) {
    Simplex tmp;
    std::set_intersection(a.begin(), a.end(), f.begin(), f.end(), std::back_inserter(tmp));
    a = std::move(tmp);
    uni.insert(f.begin(), f.end());
  }
  Simplex b;
  for (int v : uni)
    if (!std::binary_search(a.begin(), a.end(), v)) b.push_back(v);
  if (static_cast<int>(a.size()) != 6 - p || (p > 1 && static_cast<int>(b.size()) != p))
    throw InvalidSite("site is not the star of a " + std::to_string(5 - p) + "-simplex");
  // The site must be the whole star of A.
  int star = 0;
  for (const auto& f : c.facets())
    if (std::includes(f.begin(), f.end(), a.begin(), a.end())) ++star;
  if (star != p) throw InvalidSite("site is not the full star of " + c.format(a));
  if (p > 1 && c.contains(b)) throw InvalidSite(c.format(b) + " is already a simplex");

  std::vector<std::string> names = c.vertex_names();
  int fresh = -1;
  if (p == 1) {
    std::string name = move.fresh_vertex.value_or(fresh_name(c));
    if (c.vertex_index(name) >= 0) throw NameCollision("vertex '" + name + "' already exists");
    fresh = static_cast<int>(names.size());
    names.push_back(name);
    b = {fresh};
  }

  std::vector<Simplex> facets;
  std::vector<int> signs;
  for (size_t f = 0; f < c.facets().size(); ++f)
    if (!site.count(c.facets()[f])) {
      facets.push_back(c.facets()[f]);
      signs.push_back(k.sign(static_cast<int>(f)));
    }
  const size_t first_new = facets.size();
  for (size_t i = 0; i < a.size(); ++i) {
    Simplex f = b;
    for (size_t j = 0; j < a.size(); ++j)
      if (j != i) f.push_back(a[j]);
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
    signs.push_back(0);
  }

  // A (5,1) move removes the vertex A.
  std::vector<int> remap(names.size());
  for (size_t v = 0; v < names.size(); ++v) remap[v] = static_cast<int>(v);
  if (p == 5) {
    names.erase(names.begin() + a[0]);
    for (size_t v = a[0]; v < remap.size(); ++v) --remap[v];
  }
  for (auto& f : facets)
    for (int& v : f) v = remap[v];

  // Propagate signs from kept facets into the new ones.
  std::map<Simplex, std::vector<std::pair<size_t, int>>> inc;
  for (size_t f = 0; f < facets.size(); ++f)
    for (int i = 0; i < 5; ++i) {
      Simplex t = facets[f];
      t.erase(t.begin() + i);
      inc[t].emplace_back(f, i);
    }
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& [t, list] : inc) {
      if (list.size() != 2) continue;
      auto [f, i] = list[0];
      auto [g, j] = list[1];
      int par = ((i + j) % 2) ? -1 : 1;
      if (signs[f] && !signs[g]) { signs[g] = -signs[f] * par; progress = true; }
      if (signs[g] && !signs[f]) { signs[f] = -signs[g] * par; progress = true; }
    }
  }
  for (size_t f = first_new; f < facets.size(); ++f)
    if (!signs[f]) signs[f] = 1;  // isolated component, e.g. a lone ∂Δ⁵

  SimplicialComplex result(names, facets);
  // SimplicialComplex sorts facets; carry signs across.
  std::vector<int> sorted_signs(result.facets().size());
  for (size_t f = 0; f < facets.size(); ++f) {
    Simplex s = facets[f];
    std::sort(s.begin(), s.end());
    auto idx = std::lower_bound(result.facets().begin(), result.facets().end(), s) - result.facets().begin();
    sorted_signs[idx] = signs[f];
  }
  if (record) {
    record->p = p;
    record->q = 6 - p;
    record->a.clear();
    record->b.clear();
    for (int v : a) record->a.push_back(c.name(v));
    for (int v : b) record->b.push_back(v == fresh ? names.back() : c.name(v));
  }
  return OrderedOrientedComplex(std::move(result), std::move(sorted_signs));
}

std::vector<BistellarMove> find_moves(const OrderedOrientedComplex& k, const std::vector<int>& kinds_p) {
  const SimplicialComplex& c = k.complex();
  std::vector<BistellarMove> out;
  for (const auto& [a, star] : stars(c)) {
    const int p = 6 - static_cast<int>(a.size());
    if (!kinds_p.empty() && std::find(kinds_p.begin(), kinds_p.end(), p) == kinds_p.end()) continue;
    if (static_cast<int>(star.size()) != p) continue;
    BistellarMove m;
    m.p = p;
    m.q = 6 - p;
    std::set<int> uni;
    for (int f : star) {
      m.site.push_back(c.facets()[f]);
      uni.insert(c.facets()[f].begin(), c.facets()[f].end());
    }
    if (p > 1) {
      Simplex b;
      for (int v : uni)
        if (!std::binary_search(a.begin(), a.end(), v)) b.push_back(v);
      if (static_cast<int>(b.size()) != p || c.contains(b)) continue;
    }
    out.push_back(std::move(m));
  }
  return out;
}

OrderedOrientedComplex random_move_walk(const OrderedOrientedComplex& k, int count, std::uint64_t seed,
                                        const std::vector<int>& kinds_p, std::vector<MoveRecord>* log) {
  Rng rng(seed);
  OrderedOrientedComplex cur = k;
  for (int step = 0; step < count; ++step) {
    std::map<int, std::vector<BistellarMove>> by_kind;
    for (auto& m : find_moves(cur, kinds_p)) by_kind[m.p].push_back(std::move(m));
    if (by_kind.empty()) throw NoValidMove("no valid move site at step " + std::to_string(step));
    auto kind = std::next(by_kind.begin(), static_cast<long>(rng.below(by_kind.size())));
    const auto& moves = kind->second;
    const BistellarMove& m = moves[rng.below(moves.size())];
    MoveRecord rec;
    cur = apply_bistellar(cur, m, &rec);
    if (log) log->push_back(std::move(rec));
  }
  return cur;
}

}  // namespace state4
