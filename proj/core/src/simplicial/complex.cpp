#include "state4/simplicial/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "state4/errors.hpp"

namespace state4 {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_names, std::vector<Simplex> facets)
    : names_(std::move(vertex_names)) {
  const int n = num_vertices();
  {
    std::set<std::string> seen;
    for (const auto& name : names_)
      if (!seen.insert(name).second) throw MalformedFacet("duplicate vertex name '" + name + "'");
  }
  std::set<Simplex> maximal;
  for (auto f : facets) {
    if (f.empty()) throw MalformedFacet("empty facet");
    std::sort(f.begin(), f.end());
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= n) throw MalformedFacet("vertex index out of range in facet");
      if (i > 0 && f[i] == f[i - 1])
        throw MalformedFacet("repeated vertex '" + names_[f[i]] + "' in facet");
    }
    maximal.insert(std::move(f));
  }
  // Drop facets contained in larger ones so facets_ are the maximal simplices.
  for (const auto& f : maximal) {
    bool covered = false;
    for (const auto& g : maximal)
      if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        covered = true;
        break;
      }
    if (!covered) facets_.push_back(f);
  }

  size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  std::vector<std::set<Simplex>> layers(top);
  for (const auto& f : facets_) {
    const int k = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Simplex s;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      layers[s.size() - 1].insert(std::move(s));
    }
  }
  simplices_.resize(top);
  index_.resize(top);
  for (size_t k = 0; k < top; ++k) {
    simplices_[k].assign(layers[k].begin(), layers[k].end());
    for (size_t i = 0; i < simplices_[k].size(); ++i) index_[k][simplices_[k][i]] = static_cast<int>(i);
  }
  if (!simplices_.empty() && static_cast<int>(simplices_[0].size()) != n) {
    std::vector<bool> used(n, false);
    for (const auto& s : simplices_[0]) used[s[0]] = true;
    for (int v = 0; v < n; ++v)
      if (!used[v]) throw ValidationError("vertex '" + names_[v] + "' lies in no facet");
  }
  if (simplices_.empty() && n > 0) throw ValidationError("vertices given but no facets");
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (static_cast<int>(f.size()) != dimension() + 1) return false;
  return true;
}

int SimplicialComplex::vertex_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k >= static_cast<int>(simplices_.size())) return empty;
  return simplices_[k];
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s) >= 0; }

int SimplicialComplex::index_of(const Simplex& s) const {
  const int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k >= static_cast<int>(index_.size())) return -1;
  auto it = index_[k].find(s);
  return it == index_[k].end() ? -1 : it->second;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dimension(); ++k) chi += (k % 2 ? -1 : 1) * count(k);
  return chi;
}

std::vector<int> SimplicialComplex::vertex_components(int* num_components) const {
  std::vector<int> parent(num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : simplices(1)) parent[find(e[0])] = find(e[1]);
  std::vector<int> comp(num_vertices(), -1), root_id(num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    int r = find(v);
    if (root_id[r] < 0) root_id[r] = next++;
    comp[v] = root_id[r];
  }
  if (num_components) *num_components = next;
  return comp;
}

std::string SimplicialComplex::format(const Simplex& s) const {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += (s[i] >= 0 && s[i] < num_vertices()) ? names_[s[i]] : "?";
  }
  return out + "}";
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& facets) {
  std::set<int> ids;
  for (const auto& f : facets) ids.insert(f.begin(), f.end());
  std::vector<int> sorted(ids.begin(), ids.end());
  std::vector<std::string> names;
  for (int v : sorted) names.push_back(std::to_string(v));
  std::vector<Simplex> mapped;
  for (const auto& f : facets) {
    Simplex s;
    for (int v : f) s.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
    mapped.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(names), std::move(mapped));
}

SimplicialComplex link(const SimplicialComplex& c, const Simplex& s_in) {
  Simplex s = s_in;
  std::sort(s.begin(), s.end());
  if (!c.contains(s)) throw UnknownSimplex("simplex " + c.format(s) + " is not in the complex");
  std::set<Simplex> pieces;
  for (const auto& f : c.facets()) {
    if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
    if (!rest.empty()) pieces.insert(rest);
  }
  std::set<int> used;
  for (const auto& p : pieces) used.insert(p.begin(), p.end());
  std::vector<int> order(used.begin(), used.end());
  std::vector<std::string> names;
  for (int v : order) names.push_back(c.name(v));
  std::vector<Simplex> facets;
  for (const auto& p : pieces) {
    Simplex q;
    for (int v : p) q.push_back(static_cast<int>(std::lower_bound(order.begin(), order.end(), v) - order.begin()));
    facets.push_back(std::move(q));
  }
  return SimplicialComplex(std::move(names), std::move(facets));
}

SimplicialComplex boundary_of_simplex(int n) {
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return build_complex(facets);
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size()) return false;
  for (int k = 0; k <= a.dimension(); ++k)
    if (a.count(k) != b.count(k)) return false;
  const int n = a.num_vertices();
  // Vertex invariants: number of facets through each vertex.
  auto degrees = [](const SimplicialComplex& c) {
    std::vector<int> d(c.num_vertices(), 0);
    for (const auto& f : c.facets())
      for (int v : f) ++d[v];
    return d;
  };
  auto da = degrees(a), db = degrees(b);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::set<Simplex> fb(b.facets().begin(), b.facets().end());
  // Facets of a grouped by their largest vertex, so each can be checked as
  // soon as it is fully mapped.
  std::vector<std::vector<const Simplex*>> closing(n);
  for (const auto& f : a.facets()) closing[f.back()].push_back(&f);
  std::vector<int> map(n, -1);
  std::vector<bool> taken(n, false);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (taken[w] || da[v] != db[w]) continue;
      map[v] = w;
      bool ok = true;
      for (const Simplex* f : closing[v]) {
        Simplex img;
        for (int x : *f) img.push_back(map[x]);
        std::sort(img.begin(), img.end());
        if (!fb.count(img)) { ok = false; break; }
      }
      if (ok) {
        taken[w] = true;
        if (extend(v + 1)) return true;
        taken[w] = false;
      }
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

}  // namespace state4
