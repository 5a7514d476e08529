#pragma once

// Counts flat G-connections on the 2-skeleton by brute force, independent of
// the state-sum engine: |Hom(π1(K), G)| per component comes from fixing a
// spanning forest to the identity and solving the triangle relations
// g01 g12 = g02 by backtracking over the remaining edges.

#include <functional>
#include <map>
#include <vector>

#include "state4/category/group.hpp"
#include "state4/scalar/cyclotomic.hpp"
#include "state4/simplicial/complex.hpp"

namespace state4::oracle {

struct FlatCount {
  long long tree_fixed = 0;  // Π over components of |Hom(π1, G)|
  int components = 0;
};

inline FlatCount count_flat(const SimplicialComplex& c, const GroupPresentation& g) {
  const auto& edges = c.simplices(1);
  const auto& tris = c.simplices(2);
  std::map<std::pair<int, int>, int> edge_id;
  for (size_t i = 0; i < edges.size(); ++i) edge_id[{edges[i][0], edges[i][1]}] = static_cast<int>(i);
  // Spanning forest by depth-first search from each unvisited vertex.
  const int n = c.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<int> label(edges.size(), -1);
  std::vector<bool> seen(n, false);
  FlatCount out;
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    ++out.components;
    std::vector<int> stack{r};
    seen[r] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          label[edge_id[{std::min(v, w), std::max(v, w)}]] = g.unit();
          stack.push_back(w);
        }
    }
  }
  std::vector<int> free_edges;
  for (size_t i = 0; i < edges.size(); ++i)
    if (label[i] < 0) free_edges.push_back(static_cast<int>(i));
  auto consistent = [&] {
    for (const auto& t : tris) {
      int a = label[edge_id[{t[0], t[1]}]], b = label[edge_id[{t[1], t[2]}]], d = label[edge_id[{t[0], t[2]}]];
      if (a >= 0 && b >= 0 && d >= 0 && g.mul(a, b) != d) return false;
    }
    return true;
  };
  std::function<void(size_t)> go = [&](size_t i) {
    if (!consistent()) return;
    if (i == free_edges.size()) {
      ++out.tree_fixed;
      return;
    }
    for (int x = 0; x < g.order(); ++x) {
      label[free_edges[i]] = x;
      go(i + 1);
    }
    label[free_edges[i]] = -1;
  };
  go(0);
  return out;
}

/// Untwisted Dijkgraaf-Witten value Π_components |Hom(π1, G)| / |G|.
inline Cyclotomic dw_untwisted(const SimplicialComplex& c, const GroupPresentation& g) {
  auto f = count_flat(c, g);
  return Cyclotomic(Rational(f.tree_fixed, 1)) * Cyclotomic(g.order()).pow(-f.components);
}

}  // namespace state4::oracle
