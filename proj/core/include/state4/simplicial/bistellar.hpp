#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "state4/simplicial/oriented.hpp"

namespace state4 {

/// A (p,q) bistellar move on a closed 4-complex. The site is the star of a
/// simplex A, required to equal A * ∂B for a simplex B not in the complex;
/// the move replaces it by ∂A * B. p = 5 - dim A facets are removed and
/// q = dim A + 1 are created.
struct BistellarMove {
  int p = 0, q = 0;
  /// The p facets forming the site, as vertex-index tuples.
  std::vector<Simplex> site;
  /// Name of the new vertex for a (1,5) move; generated when absent.
  std::optional<std::string> fresh_vertex;
};

/// Log entry of an applied move. `a` and `b` list vertex names of A and B
/// in vertex order; the standard move shape is matched by sending A's
/// vertices, then B's, to 0..5 in that order.
struct MoveRecord {
  int p = 0, q = 0;
  std::vector<std::string> a, b;
  std::string describe() const;
};

/// Applies a move. New vertices go last in the order; the orientation of
/// untouched facets is kept and extended to new facets.
/// Throws InvalidSite or NameCollision.
OrderedOrientedComplex apply_bistellar(const OrderedOrientedComplex& k, const BistellarMove& move,
                                       MoveRecord* record = nullptr);

/// Every valid move site of the given kinds (all kinds when empty), in a
/// deterministic order.
std::vector<BistellarMove> find_moves(const OrderedOrientedComplex& k, const std::vector<int>& kinds_p = {});

/// Seeded generator used for every randomized operation: std::mt19937_64
/// with an explicit unbiased bounded draw so results do not depend on the
/// standard library's distributions.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/rejection-bounded";
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  std::uint64_t next() { return engine_(); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Applies `count` random moves: a kind is drawn uniformly among the allowed
/// kinds that have a valid site, then a site uniformly. Throws NoValidMove
/// when no allowed kind has a site.
OrderedOrientedComplex random_move_walk(const OrderedOrientedComplex& k, int count, std::uint64_t seed,
                                        const std::vector<int>& kinds_p = {},
                                        std::vector<MoveRecord>* log = nullptr);

}  // namespace state4
