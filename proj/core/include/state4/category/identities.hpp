#pragma once

#include <optional>
#include <string>
#include <vector>

#include "state4/category/fusion2cat.hpp"

namespace state4 {

enum class IdentityStatus { Pass, Fail, Skipped };

const char* to_string(IdentityStatus s);

struct IdentityResult {
  std::string name;
  IdentityStatus status = IdentityStatus::Pass;
  std::string detail;           // failure, skip reason or instance count
  std::optional<Cyclotomic> value;
};

struct IdentityReport {
  bool pass = true;             // no identity failed
  std::vector<IdentityResult> results;
  const IdentityResult* find(const std::string& name) const;
};

/// Dimension identities that the skeleton data can instantiate:
///  - "global dimension": Σ_{B,C,f: B□C→A} dim(f)² / (dim(A) d(B) d(C)) = dim(C) for every A;
///  - "incoming morphisms": Σ_{B,f: U□B→A} dim(f)² / d(B) = dim(A), U the unit;
///  - "relative multiplicativity": pairing · dim(A02) = dim(f012) dim(f023)
///    on 1-dimensional tetra spaces with canonical bases whose A02□A23 is simple.
/// Identities over non-fusion hom-categories are reported as skipped.
IdentityReport check_dimension_identities(const Fusion2CatData& cat);

}  // namespace state4
