#pragma once

#include <string>
#include <vector>

#include "state4/simplicial/complex.hpp"

namespace state4 {

struct ManifoldFailure {
  std::string check;    // "closed", "triangle-link", "edge-link", "vertex-link", "pure"
  std::string simplex;  // formatted offending simplex
  std::string detail;
};

struct ManifoldReport {
  bool pass = true;
  std::vector<ManifoldFailure> failures;
};

/// Checks that c is a closed singular combinatorial 4-manifold: pure of
/// dimension 4, every tetrahedron in two facets, triangle links are cycles,
/// edge links are 2-spheres and vertex links are closed 3-manifolds whose
/// vertex links are 2-spheres. The empty complex passes.
ManifoldReport validate_singular_4manifold(const SimplicialComplex& c);

/// True when c is a closed connected surface with Euler characteristic 2.
bool is_2sphere(const SimplicialComplex& c);
/// True when c is a single cycle.
bool is_cycle(const SimplicialComplex& c);

}  // namespace state4
