#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "state4/category/fusion2cat.hpp"

namespace state4 {

/// Basis rescaling of every tetra space: e⁺_b ↦ plus[b] e⁺_b and
/// e⁻_a ↦ minus[a] e⁻_a. Missing keys are left alone.
struct Rescaling {
  struct Factors {
    std::vector<Cyclotomic> plus, minus;
  };
  std::unordered_map<TetraKey, Factors, LabelHash> factors;
};

/// Random invertible factors ±ζ_order^k · (1 + j) for small j, seeded.
Rescaling random_rescaling(const Fusion2CatData& cat, std::uint64_t seed, int order = 4);

/// The same category in the rescaled bases: pairings become
/// minus[a] plus[b] P[a][b], 10j slots pick up the factor of their basis
/// vector, and copairings are recomputed. With `ten_j_only` the pairings are
/// left unchanged, which breaks invariance.
Fusion2CatData gauge_transform(const Fusion2CatData& cat, const Rescaling& r, bool ten_j_only = false);

}  // namespace state4
