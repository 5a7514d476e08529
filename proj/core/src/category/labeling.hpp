#pragma once

#include <array>
#include <functional>
#include <vector>

#include "state4/category/fusion2cat.hpp"

namespace state4::detail {

/// All simplices of the standard n-simplex on vertices 0..n, indexed
/// lexicographically.
class LocalSimplex {
 public:
  explicit LocalSimplex(int n);
  int vertices() const { return n_ + 1; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
  const std::vector<std::array<int, 4>>& tets() const { return tets_; }
  const std::vector<std::array<int, 5>>& pents() const { return pents_; }
  int edge(int i, int j) const { return edge_id_[i][j]; }
  int triangle(int i, int j, int k) const { return tri_id_[(i * 8 + j) * 8 + k]; }
  int tet(int i, int j, int k, int l) const;

 private:
  int n_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> tris_;
  std::vector<std::array<int, 4>> tets_;
  std::vector<std::array<int, 5>> pents_;
  std::vector<std::vector<int>> edge_id_;
  std::vector<int> tri_id_;
};

/// Labels of edges (objects) and triangles (morphisms); -1 when unset.
struct LocalLabels {
  std::vector<int> edge, tri;
};

TetraKey tet_key(const LocalSimplex& s, const LocalLabels& l, const std::array<int, 4>& t);
TenJKey pent_key(const LocalSimplex& s, const LocalLabels& l, const std::array<int, 5>& p);

/// Enumerates all assignments of the free edges and triangles such that
/// every in-scope triangle is fusion-admissible and every in-scope
/// tetrahedron has a nonzero space. Labels already set stay fixed. The
/// callback returns false to stop; enumerate returns false if stopped.
bool enumerate_labels(const Fusion2CatData& cat, const LocalSimplex& s, LocalLabels& labels,
                      const std::vector<int>& free_edges, const std::vector<int>& free_tris,
                      const std::vector<int>& scope_tris, const std::vector<int>& scope_tets,
                      const std::function<bool()>& visit);

}  // namespace state4::detail
