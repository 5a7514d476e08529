#pragma once

#include <map>
#include <string>
#include <vector>

namespace state4 {

/// A simplex as a sorted list of vertex indices.
using Simplex = std::vector<int>;

/// Finite simplicial complex given by its maximal simplices. Vertices are
/// indexed 0..n-1; index order is the vertex order used for all face and
/// sign computations.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Facets are vertex-index tuples in any order; duplicates are merged.
  /// Throws MalformedFacet on a repeated vertex or an out-of-range index and
  /// ValidationError when a named vertex lies in no facet.
  SimplicialComplex(std::vector<std::string> vertex_names, std::vector<Simplex> facets);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  /// Dimension of the largest facet; -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  bool is_pure() const;

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int vertex_index(const std::string& name) const;  // -1 if absent

  /// Maximal simplices, sorted.
  const std::vector<Simplex>& facets() const { return facets_; }
  /// All k-simplices in lexicographic order.
  const std::vector<Simplex>& simplices(int k) const;
  int count(int k) const { return static_cast<int>(simplices(k).size()); }
  bool contains(const Simplex& s) const;
  /// Index of s within simplices(s.size()-1), or -1.
  int index_of(const Simplex& s) const;

  /// Alternating simplex count.
  long euler_characteristic() const;
  /// Connected components of the 1-skeleton, as a component id per vertex.
  std::vector<int> vertex_components(int* num_components = nullptr) const;

  std::string format(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.names_ == b.names_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, int>> index_;
};

/// Complex with integer vertex ids; vertex names are the decimal ids and the
/// vertex order is numeric.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& facets);

/// { t : t ∩ s = ∅, t ∪ s ∈ K }, keeping only vertices that occur.
/// Throws UnknownSimplex.
SimplicialComplex link(const SimplicialComplex& c, const Simplex& s);

/// Vertices of a are renamed "a:<name>" and those of b "b:<name>"; the
/// vertex order is a's followed by b's.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Staircase triangulation of |a| × |b| using the vertex orders of both.
/// Vertex (x, y) is named "<x>:<y>".
SimplicialComplex staircase_product(const SimplicialComplex& a, const SimplicialComplex& b);

/// Boundary of the standard n-simplex on vertices 0..n.
SimplicialComplex boundary_of_simplex(int n);

/// Exact isomorphism test by backtracking over vertex maps.
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace state4
