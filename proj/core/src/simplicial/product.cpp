#include <algorithm>
#include <functional>
#include <map>

#include "state4/simplicial/complex.hpp"

namespace state4 {

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> names;
  for (const auto& n : a.vertex_names()) names.push_back("a:" + n);
  for (const auto& n : b.vertex_names()) names.push_back("b:" + n);
  std::vector<Simplex> facets = a.facets();
  for (auto f : b.facets()) {
    for (int& v : f) v += a.num_vertices();
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(names), std::move(facets));
}

SimplicialComplex staircase_product(const SimplicialComplex& a, const SimplicialComplex& b) {
  // Vertex (x, y) gets index x * |b| + y, then is compacted to used pairs.
  const int nb = b.num_vertices();
  std::vector<Simplex> raw;
  for (const auto& s : a.facets())
    for (const auto& t : b.facets()) {
      const int p = static_cast<int>(s.size()) - 1, q = static_cast<int>(t.size()) - 1;
      // Monotone lattice paths from (0,0) to (p,q): choose which of the p+q
      // steps move in the first factor.
      std::vector<bool> steps(p + q, false);
      std::fill(steps.begin(), steps.begin() + p, true);
      std::sort(steps.begin(), steps.end());
      do {
        Simplex cell;
        int x = 0, y = 0;
        cell.push_back(s[x] * nb + t[y]);
        for (bool first : steps) {
          first ? ++x : ++y;
          cell.push_back(s[x] * nb + t[y]);
        }
        raw.push_back(std::move(cell));
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  std::map<int, int> compact;
  for (const auto& c : raw)
    for (int v : c) compact.emplace(v, 0);
  std::vector<std::string> names;
  int next = 0;
  for (auto& [v, idx] : compact) {
    idx = next++;
    names.push_back(a.name(v / nb) + ":" + b.name(v % nb));
  }
  for (auto& c : raw)
    for (int& v : c) v = compact[v];
  return SimplicialComplex(std::move(names), std::move(raw));
}

}  // namespace state4
