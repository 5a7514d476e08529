#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "state4/category/group.hpp"
#include "state4/category/tensor.hpp"
#include "state4/scalar/cyclotomic.hpp"

namespace state4 {

/// Simple 1-morphism left □ right → target.
struct Morphism {
  std::string name;
  int left = 0, right = 0, target = 0;
  Cyclotomic dim{1};

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Morphism labels of a tetrahedron 0123 on its triangles 012, 013, 023, 123.
using TetraKey = std::array<int, 4>;
/// Morphism labels of a 4-simplex on its ten triangles in lexicographic
/// order 012, 013, 014, 023, 024, 034, 123, 124, 134, 234.
using TenJKey = std::array<int, 10>;

struct LabelHash {
  template <size_t N>
  size_t operator()(const std::array<int, N>& a) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int v : a) h = (h ^ static_cast<std::uint64_t>(v + 1)) * 0x100000001b3ull;
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

/// Associator state space of a labeled tetrahedron. `pairing[a][b]` is
/// ⟨e⁻_a, e⁺_b⟩ and `copairing` its inverse indexed [b][a].
struct TetraBlock {
  int dim = 0;
  Matrix pairing;
  Matrix copairing;
};

/// 10j functionals of a labeled 4-simplex for ε = +1 and ε = -1, flat and
/// row-major over the five spaces in ten_j_index_order(ε).
struct TenJEntry {
  std::vector<Cyclotomic> plus, minus;
  const std::vector<Cyclotomic>& operator[](int sign) const { return sign > 0 ? plus : minus; }
};

/// Grading data of categories whose objects form a group G and whose
/// fusion 1-morphisms are labeled by an abelian group A (Dijkgraaf-Witten,
/// pointed and 2-group categories). Used by the reduced state sum.
struct GroupLabels {
  GroupPresentation G, A;
  std::vector<int> object_grade;    // object -> element of G
  std::vector<int> morphism_label;  // morphism -> element of A

  friend bool operator==(const GroupLabels&, const GroupLabels&) = default;
};

/// Finite skeleton of a spherical prefusion 2-category with chosen bases.
/// Fill the public tables, then call build(); accessors below require it.
struct Fusion2CatData {
  std::vector<std::string> objects;
  std::vector<std::vector<int>> components;
  std::vector<Cyclotomic> dim_obj, dim_end;
  /// Fusion lists are the morphisms in this order, grouped by (left, right, target).
  std::vector<Morphism> morphisms;
  /// Nonzero tetra spaces; absent keys are 0-dimensional.
  std::unordered_map<TetraKey, TetraBlock, LabelHash> tetra;
  std::unordered_map<TenJKey, TenJEntry, LabelHash> ten_j;
  std::optional<int> unit;
  std::optional<GroupLabels> labels;
  /// True when every 1-dimensional tetra space uses the basis whose pairing
  /// is the dimension of the composite 1-morphism.
  bool canonical_bases = false;
  /// Generator reference (JSON text) when produced by a generator.
  std::string generator;

  /// Builds fusion indexes and copairings. Throws SingularPairing and
  /// ValidationError on structurally broken tables.
  void build();

  int num_objects() const { return static_cast<int>(objects.size()); }
  int object_index(const std::string& name) const;
  int morphism_index(const std::string& name) const;

  const std::vector<int>& fusion(int a, int b, int c) const { return fusion_[(a * n_ + b) * n_ + c]; }
  /// Objects c with fusion(a, b, c) nonempty.
  const std::vector<int>& targets(int a, int b) const { return targets_[a * n_ + b]; }
  /// Objects b with fusion(a, b, c) nonempty.
  const std::vector<int>& middles(int a, int c) const { return middles_[a * n_ + c]; }
  /// Objects a with fusion(a, b, c) nonempty.
  const std::vector<int>& lefts(int b, int c) const { return lefts_[b * n_ + c]; }

  int component_of(int a) const { return component_of_[a]; }
  /// n(A): number of objects in A's component.
  int component_size(int a) const { return static_cast<int>(components[component_of_[a]].size()); }
  /// d(A) = dim(A) dim(End(A)) n(A).
  const Cyclotomic& d(int a) const { return d_[a]; }
  /// dim(C) = Σ over components of 1/dim(End).
  const Cyclotomic& total_dimension() const { return total_dim_; }

  /// nullptr when the space is 0-dimensional.
  const TetraBlock* tetra_block(const TetraKey& k) const {
    auto it = tetra.find(k);
    return it == tetra.end() ? nullptr : &it->second;
  }
  int tetra_dim(const TetraKey& k) const {
    const auto* b = tetra_block(k);
    return b ? b->dim : 0;
  }
  const TenJEntry* ten_j_entry(const TenJKey& k) const {
    auto it = ten_j.find(k);
    return it == ten_j.end() ? nullptr : &it->second;
  }

  /// True when every tetra space is at most 1-dimensional.
  bool scalar_spaces() const { return max_tetra_dim_ <= 1; }

 private:
  int n_ = 0;
  int max_tetra_dim_ = 0;
  std::vector<std::vector<int>> fusion_, targets_, middles_, lefts_;
  std::vector<int> component_of_;
  std::vector<Cyclotomic> d_;
  Cyclotomic total_dim_;
};

/// Field-by-field equality of the presented data (generator text excluded).
bool operator==(const Fusion2CatData& a, const Fusion2CatData& b);
/// Equality after identifying objects and morphisms by index.
bool same_data_ignoring_names(const Fusion2CatData& a, const Fusion2CatData& b);

/// Slot order of the 10j functional: tetrahedra of the 4-simplex 01234 as
/// local vertex lists, with the slot sign (+1 for V⁺, -1 for V⁻).
using TenJSlot = std::pair<std::array<int, 4>, int>;
std::array<TenJSlot, 5> ten_j_index_order(int sign);

/// Index of triangle pqr (0 ≤ p < q < r ≤ 4) in TenJKey order.
int local_triangle(int p, int q, int r);
/// TetraKey of the tetrahedron with local vertices v inside a labeled 4-simplex.
TetraKey face_key(const TenJKey& m, const std::array<int, 4>& v);

/// Copairing matrix C = P⁻¹ indexed [b][a]. Throws SingularPairing.
Matrix copairing(const Fusion2CatData& cat, const TetraKey& k);

/// 10j functional of a labeled 4-simplex as a tensor whose axes are the
/// given labels (one per slot in ten_j_index_order(sign)). A missing entry
/// with all five spaces nonzero is an error (IndexMismatch); any
/// 0-dimensional space gives an empty tensor.
Tensor ten_j_tensor(const Fusion2CatData& cat, const TenJKey& m, int sign, const std::array<int, 5>& axes);

struct CategoryReport {
  bool pass = true;
  std::vector<std::string> violations;
};

/// Checks the data invariants: d(A) ≠ 0, dim(f) ≠ 0, square invertible
/// pairings, dim(C) ≠ 0, label consistency of tetra keys and 10j keys, and
/// tensor shapes.
CategoryReport validate_category(const Fusion2CatData& cat);

}  // namespace state4
