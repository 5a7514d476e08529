#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "state4/category/group.hpp"
#include "state4/scalar/cyclotomic.hpp"

namespace state4 {

class Rng;

/// Multiplicative cochain G^degree → Q(ζ)^×, trivial coefficients. Values
/// are stored for every tuple, first argument most significant.
struct CochainTable {
  GroupPresentation group;
  int degree = 0;
  std::vector<Cyclotomic> values;

  /// Constant table with every entry 1.
  static CochainTable trivial(const GroupPresentation& g, int degree);

  size_t offset(std::span<const int> args) const;
  const Cyclotomic& at(std::span<const int> args) const { return values[offset(args)]; }
  Cyclotomic& at(std::span<const int> args) { return values[offset(args)]; }
  const Cyclotomic& operator()(std::initializer_list<int> args) const {
    return at(std::span<const int>(args.begin(), args.size()));
  }

  friend bool operator==(const CochainTable& a, const CochainTable& b) {
    return a.group == b.group && a.degree == b.degree && a.values == b.values;
  }
};

/// dν(g1..g_{k+1}) = ν(g2..) · Π_i ν(.., g_i g_{i+1}, ..)^{(-1)^i} · ν(g1..g_k)^{(-1)^{k+1}}.
CochainTable coboundary(const CochainTable& nu);

/// Entrywise product.
CochainTable operator*(const CochainTable& a, const CochainTable& b);

struct CocycleReport {
  bool pass = true;
  /// Tuples where dω ≠ 1, at most `limit` of them.
  std::vector<std::vector<int>> violations;
};

CocycleReport validate_cocycle(const CochainTable& table, size_t limit = 16);

/// Random normalized cochain with values ζ_order^k: entries with a unit
/// argument are 1.
CochainTable random_cochain(const GroupPresentation& g, int degree, int order, Rng& rng);

}  // namespace state4
