#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "state4/category/fusion2cat.hpp"

namespace state4 {

/// Z₊(ijklm) on the labeled 4-simplex 01234: the ε = +1 10j precomposed with
/// the copairings of 0234 and 0124. Rows are V⁺(0234)⊗V⁺(0124), columns
/// V⁺(0123)⊗V⁺(0134)⊗V⁺(1234), both flattened row-major. A 0-dimensional
/// space gives an empty or zero map.
Matrix z_plus(const Fusion2CatData& cat, const TenJKey& m);
/// Z₋(ijklm): the ε = -1 10j precomposed with the copairings of 0123, 0134
/// and 1234. Rows V⁺(0123)⊗V⁺(0134)⊗V⁺(1234), columns V⁺(0234)⊗V⁺(0124).
Matrix z_minus(const Fusion2CatData& cat, const TenJKey& m);

/// Labels of simplices of Δ⁵ (vertices 0..5): edges map to objects,
/// triangles to morphisms, keyed by sorted vertex lists.
using BoundaryLabeling = std::map<std::vector<int>, int>;

struct PachnerReport {
  std::string check;      // "(3,3)", "(2,4)", "(1,5)" or "section"
  bool pass = true;
  long labelings = 0;     // boundary labelings (or frames) evaluated
  bool complete = true;   // false when a budget cut the enumeration short
  std::optional<BoundaryLabeling> failing;
  std::string witness;    // readable description of the first failure
};

/// Move shapes inside ∂Δ⁵: the (p, 6-p) move replaces the facets opposite
/// the vertices I by those opposite J. (3,3): I = {0,2,4}; (2,4): I = {2,4};
/// (1,5): I = {4}. Compares both sides as maps between boundary tetrahedron
/// spaces, with interior labels summed and normalized.
PachnerReport check_pachner(const Fusion2CatData& cat, int p, const BoundaryLabeling& boundary);
/// Every admissible boundary labeling, stopping after `budget` if positive.
PachnerReport check_pachner_exhaustive(const Fusion2CatData& cat, int p, long budget = -1);

inline PachnerReport check_pachner_33(const Fusion2CatData& c, const BoundaryLabeling& b) { return check_pachner(c, 3, b); }
inline PachnerReport check_pachner_24(const Fusion2CatData& c, const BoundaryLabeling& b) { return check_pachner(c, 2, b); }
inline PachnerReport check_pachner_15(const Fusion2CatData& c, const BoundaryLabeling& b) { return check_pachner(c, 1, b); }

/// Boundary simplices (edges and triangles) of the (p, 6-p) move shape.
std::vector<std::vector<int>> pachner_boundary(int p);

/// Σ over labels of edge 13 and triangles 013, 123, 134 of
/// dim(f024) Z₊ ∘ dim(f013) dim(f123) dim(f134) / d(A13) Z₋ equals the
/// identity on ⊕ over f024, for every labeling of the other simplices of
/// Δ⁴. Checks every frame, up to `budget` if positive.
PachnerReport check_section(const Fusion2CatData& cat, long budget = -1);

}  // namespace state4
