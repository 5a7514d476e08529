#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "state4/category/fusion2cat.hpp"
#include "state4/simplicial/oriented.hpp"

namespace state4 {

/// Index tables of an ordered oriented 4-complex used by the engine.
struct StateLayout {
  int num_vertices = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 3>> triangle_edges;   // faces 01, 12, 02
  std::vector<std::array<int, 4>> tets;
  std::vector<std::array<int, 4>> tet_triangles;    // faces 012, 013, 023, 123
  std::vector<std::array<int, 5>> facets;
  std::vector<std::array<int, 10>> facet_triangles; // TenJKey order
  std::vector<int> facet_sign;
  /// (tet, slot sign) for the five slots of each facet's 10j.
  std::vector<std::array<std::pair<int, int>, 5>> facet_slots;
  /// True when every tetrahedron has one V⁺ and one V⁻ slot.
  bool closed = true;

  /// With `reverse`, every facet sign is negated.
  static StateLayout from(const OrderedOrientedComplex& k, bool reverse = false);
};

/// A C-state: an object per edge and a fusion morphism per triangle.
struct State {
  std::vector<int> edge_labels;
  std::vector<int> tri_labels;
};

/// Every admissible state exactly once: depth-first over edges, pruning as
/// soon as a fully edge-labeled triangle has an empty fusion list.
void enumerate_states(const OrderedOrientedComplex& k, const Fusion2CatData& cat,
                      const std::function<void(const State&)>& visit);

/// Π_v dim(C)⁻¹ · Π_e d(Γe)⁻¹ · Π_t dim(Γt).
Cyclotomic normalization(const StateLayout& l, const Fusion2CatData& cat, const State& s);
Cyclotomic normalization(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const State& s);

/// Z(Γ): the 10j tensors of all facets contracted with the copairing of
/// every tetrahedron. Zero when some tetra space is 0-dimensional. Throws
/// ValidationError on a complex with unmatched tetrahedra and IndexMismatch
/// on corrupt category tensors.
Cyclotomic ten_j_action(const StateLayout& l, const Fusion2CatData& cat, const State& s);
Cyclotomic ten_j_action(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const State& s);

/// Greedy elimination order of tetrahedron indices: each step contracts one
/// tetrahedron's (V⁺, V⁻) pair, merging the facet tensors that hold it.
struct ContractionPlan {
  struct Step {
    int tet = 0;
    int rank = 0;       // open indices of the tensor produced
    size_t size = 1;    // its number of entries
  };
  std::vector<Step> steps;
  int max_rank = 0;
  size_t max_size = 1;
  size_t cost = 0;      // Σ of step sizes
};

/// `tet_dims` gives the dimension of each tetrahedron's space.
ContractionPlan plan_contraction(const StateLayout& l, const std::vector<int>& tet_dims);

}  // namespace state4
