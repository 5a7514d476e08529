#include "state4/category/gauge.hpp"

#include <algorithm>

#include "state4/simplicial/bistellar.hpp"

namespace state4 {

Rescaling random_rescaling(const Fusion2CatData& cat, std::uint64_t seed, int order) {
  Rng rng(seed);
  Rescaling r;
  auto factor = [&] {
    Cyclotomic v = Cyclotomic::zeta(order, static_cast<long>(rng.below(order)));
    return v * Cyclotomic(Rational(1 + static_cast<long>(rng.below(3)), 1 + static_cast<long>(rng.below(2))));
  };
  // Sorted keys make the result independent of hash order.
  std::vector<TetraKey> keys;
  for (const auto& [k, b] : cat.tetra) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (const auto& k : keys) {
    Rescaling::Factors f;
    for (int i = 0; i < cat.tetra.at(k).dim; ++i) {
      f.plus.push_back(factor());
      f.minus.push_back(factor());
    }
    r.factors.emplace(k, std::move(f));
  }
  return r;
}

Fusion2CatData gauge_transform(const Fusion2CatData& cat, const Rescaling& r, bool ten_j_only) {
  Fusion2CatData out = cat;
  out.generator.clear();
  out.canonical_bases = false;
  auto factors = [&](const TetraKey& k) -> const Rescaling::Factors* {
    auto it = r.factors.find(k);
    return it == r.factors.end() ? nullptr : &it->second;
  };
  if (!ten_j_only)
    for (auto& [k, block] : out.tetra)
      if (const auto* f = factors(k))
        for (int a = 0; a < block.dim; ++a)
          for (int b = 0; b < block.dim; ++b) block.pairing[a][b] *= f->minus[a] * f->plus[b];
  for (auto& [m, entry] : out.ten_j)
    for (int sign : {1, -1}) {
      auto& data = sign > 0 ? entry.plus : entry.minus;
      std::array<int, 5> dims{};
      std::array<const Rescaling::Factors*, 5> fs{};
      auto order = ten_j_index_order(sign);
      for (int s = 0; s < 5; ++s) {
        auto key = face_key(m, order[s].first);
        dims[s] = cat.tetra_dim(key);
        fs[s] = factors(key);
      }
      for (size_t flat = 0; flat < data.size(); ++flat) {
        size_t rest = flat;
        for (int s = 4; s >= 0; --s) {
          int idx = static_cast<int>(rest % dims[s]);
          rest /= dims[s];
          if (fs[s]) data[flat] *= order[s].second > 0 ? fs[s]->plus[idx] : fs[s]->minus[idx];
        }
      }
    }
  out.build();
  return out;
}

}  // namespace state4
