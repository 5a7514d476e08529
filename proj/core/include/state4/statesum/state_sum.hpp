#pragma once

#include <cstdint>
#include <string>

#include "state4/category/gauge.hpp"
#include "state4/statesum/state.hpp"

namespace state4 {

struct StateSumOptions {
  int threads = 1;
  bool reverse_orientation = false;
  /// Evaluate every state by full tensor contraction (testing aid).
  bool force_general = false;
  /// Reduced mode: random samples of the self-check and their seed.
  int self_check_samples = 32;
  std::uint64_t seed = 1;
};

struct StateSumStats {
  long long states = 0;          // admissible states visited (full) or representatives (reduced)
  std::string path;              // "monomial", "cyclotomic", "general" or "reduced"
  long long multiplier_log = 0;  // reduced: states per representative, as log_p
  int self_checks = 0;
};

/// Z_C(K) = Σ_Γ normalization(Γ) Z(Γ), exact. The complex must be closed.
Cyclotomic state_sum(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const StateSumOptions& opt = {},
                     StateSumStats* stats = nullptr);

/// Same value for categories with group labels (Dijkgraaf-Witten, pointed,
/// 2-group): edge labels on a spanning forest are fixed to the unit and
/// triangle labels run over representatives of H²(K; A), each term weighted
/// by the orbit size. Needs an elementary abelian A (UnsupportedReduction
/// otherwise). Before summing, random states are compared against gauge
/// and coboundary shifts; a mismatch throws ReductionSelfCheckFailed.
Cyclotomic state_sum_reduced(const OrderedOrientedComplex& k, const Fusion2CatData& cat,
                             const StateSumOptions& opt = {}, StateSumStats* stats = nullptr);

struct GaugeReport {
  bool pass = true;
  Cyclotomic before, after;
};

/// Compares Z before and after gauge_transform(cat, r, ten_j_only).
GaugeReport gauge_transform_test(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const Rescaling& r,
                                 bool ten_j_only = false, const StateSumOptions& opt = {});

}  // namespace state4
