#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "state4/simplicial/complex.hpp"

namespace state4 {

/// Facet signs ε_o relative to the index order of c, such that the induced
/// orientations of every shared tetrahedron cancel. The lexicographically
/// last facet of each connected component gets +1. Throws NonOrientable.
std::vector<int> orient(const SimplicialComplex& c);

/// True when signs induce opposite orientations on every shared tetrahedron.
bool orientation_consistent(const SimplicialComplex& c, const std::vector<int>& signs);

/// Complex whose vertex i is old vertex new_order[i].
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& new_order);

/// Complex with a total vertex order (the index order of complex()) and
/// facet signs ε_o.
class OrderedOrientedComplex {
 public:
  OrderedOrientedComplex() = default;
  /// Signs must be consistent; throws NonOrientable otherwise.
  OrderedOrientedComplex(SimplicialComplex c, std::vector<int> facet_signs);

  /// Orders c by `order` (vertex names; defaults to c's own order) and
  /// orients it with orient().
  static OrderedOrientedComplex from_complex(const SimplicialComplex& c,
                                            const std::optional<std::vector<std::string>>& order = std::nullopt);

  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<int>& signs() const { return signs_; }
  /// Sign of facets()[i].
  int sign(int facet) const { return signs_[facet]; }
  int sign(const Simplex& facet) const;
  const std::vector<std::string>& order() const { return complex_.vertex_names(); }
  /// Spanning-forest witness of the dual-graph traversal: (facet, parent facet)
  /// pairs through shared tetrahedra, roots have parent -1.
  const std::vector<std::pair<int, int>>& certificate() const { return certificate_; }

  /// Same oriented manifold with a new vertex order, given as old vertex
  /// indices listed in the new order. Signs are transported by the parity of
  /// the induced permutation of each facet, so the orientation is preserved.
  OrderedOrientedComplex reorder(const std::vector<int>& new_order) const;
  /// Every facet sign negated.
  OrderedOrientedComplex reversed() const;

 private:
  SimplicialComplex complex_;
  std::vector<int> signs_;
  std::vector<std::pair<int, int>> certificate_;
};

/// ∂^o_{[j0..jk]} τ: the sub-simplex on the selected positions of τ (τ in
/// order). Throws IndexOutOfRange.
Simplex face(const OrderedOrientedComplex& k, const Simplex& tau, const std::vector<int>& indices);

/// ε^Σ(κ) = ε_o(Σ)(-1)^i where κ omits the i-th vertex of Σ. Throws NotAFace
/// (also when Σ is not a facet).
int relative_sign(const OrderedOrientedComplex& k, const Simplex& sigma, const Simplex& kappa);

/// Parity (+1/-1) of the permutation sorting `seq`.
int permutation_sign(std::vector<int> seq);

}  // namespace state4
