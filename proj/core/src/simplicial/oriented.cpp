#include "state4/simplicial/oriented.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "state4/errors.hpp"

namespace state4 {
namespace {

// Tetrahedron -> list of (facet index, omitted position).
std::map<Simplex, std::vector<std::pair<int, int>>> codim1_incidence(const SimplicialComplex& c) {
  std::map<Simplex, std::vector<std::pair<int, int>>> inc;
  const auto& facets = c.facets();
  for (int f = 0; f < static_cast<int>(facets.size()); ++f)
    for (int i = 0; i < static_cast<int>(facets[f].size()); ++i) {
      Simplex face = facets[f];
      face.erase(face.begin() + i);
      inc[face].emplace_back(f, i);
    }
  return inc;
}

std::vector<int> orient_impl(const SimplicialComplex& c, std::vector<std::pair<int, int>>* cert) {
  const int nf = static_cast<int>(c.facets().size());
  auto inc = codim1_incidence(c);
  std::vector<std::vector<std::tuple<int, int, int>>> adj(nf);  // (nbr, my pos, nbr pos)
  for (const auto& [face, list] : inc)
    for (size_t a = 0; a < list.size(); ++a)
      for (size_t b = 0; b < list.size(); ++b)
        if (a != b) adj[list[a].first].emplace_back(list[b].first, list[a].second, list[b].second);
  std::vector<int> sign(nf, 0);
  if (cert) cert->clear();
  // Roots are the lexicographically last facet of each component, which
  // gives the facet of ∂Δⁿ⁺¹ opposite vertex i the sign (-1)^i.
  for (int root = nf - 1; root >= 0; --root) {
    if (sign[root]) continue;
    sign[root] = 1;
    if (cert) cert->emplace_back(root, -1);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (auto [g, i, j] : adj[f]) {
        // ε_g (-1)^j = -ε_f (-1)^i
        int want = -sign[f] * (((i + j) % 2) ? -1 : 1);
        if (sign[g] == 0) {
          sign[g] = want;
          if (cert) cert->emplace_back(g, f);
          queue.push_back(g);
        } else if (sign[g] != want) {
          throw NonOrientable("orientation conflict across " +
                              c.format([&] { Simplex s = c.facets()[f]; s.erase(s.begin() + i); return s; }()));
        }
      }
    }
  }
  return sign;
}

}  // namespace

std::vector<int> orient(const SimplicialComplex& c) { return orient_impl(c, nullptr); }

bool orientation_consistent(const SimplicialComplex& c, const std::vector<int>& signs) {
  if (signs.size() != c.facets().size()) return false;
  for (const auto& [face, list] : codim1_incidence(c))
    for (size_t a = 0; a < list.size(); ++a)
      for (size_t b = a + 1; b < list.size(); ++b) {
        auto [f, i] = list[a];
        auto [g, j] = list[b];
        int sf = signs[f] * (i % 2 ? -1 : 1), sg = signs[g] * (j % 2 ? -1 : 1);
        if (sf != -sg) return false;
      }
  return true;
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& new_order) {
  const int n = c.num_vertices();
  if (static_cast<int>(new_order.size()) != n) throw ValidationError("order must list every vertex once");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = new_order[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw ValidationError("order must list every vertex once");
    pos[v] = i;
  }
  std::vector<std::string> names;
  for (int v : new_order) names.push_back(c.name(v));
  std::vector<Simplex> facets;
  for (const auto& f : c.facets()) {
    Simplex g;
    for (int v : f) g.push_back(pos[v]);
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(names), std::move(facets));
}

int permutation_sign(std::vector<int> seq) {
  int sign = 1;
  for (size_t i = 0; i < seq.size(); ++i)
    while (true) {
      // Selection by swaps: count transpositions needed to sort.
      auto m = std::min_element(seq.begin() + i, seq.end());
      if (m == seq.begin() + i) break;
      std::iter_swap(seq.begin() + i, m);
      sign = -sign;
    }
  return sign;
}

OrderedOrientedComplex::OrderedOrientedComplex(SimplicialComplex c, std::vector<int> facet_signs)
    : complex_(std::move(c)), signs_(std::move(facet_signs)) {
  if (!orientation_consistent(complex_, signs_)) throw NonOrientable("facet signs are not consistent");
  // Rebuild a traversal witness for the given signs.
  orient_impl(complex_, &certificate_);
}

OrderedOrientedComplex OrderedOrientedComplex::from_complex(const SimplicialComplex& c,
                                                            const std::optional<std::vector<std::string>>& order) {
  SimplicialComplex ordered = c;
  if (order) {
    std::vector<int> perm;
    for (const auto& name : *order) {
      int v = c.vertex_index(name);
      if (v < 0) throw ValidationError("order names unknown vertex '" + name + "'");
      perm.push_back(v);
    }
    ordered = relabel(c, perm);
  }
  OrderedOrientedComplex k;
  k.signs_ = orient_impl(ordered, &k.certificate_);
  k.complex_ = std::move(ordered);
  return k;
}

int OrderedOrientedComplex::sign(const Simplex& facet) const {
  const auto& fs = complex_.facets();
  auto it = std::lower_bound(fs.begin(), fs.end(), facet);
  if (it == fs.end() || *it != facet) throw NotAFace(complex_.format(facet) + " is not a facet");
  return signs_[it - fs.begin()];
}

OrderedOrientedComplex OrderedOrientedComplex::reorder(const std::vector<int>& new_order) const {
  SimplicialComplex c = relabel(complex_, new_order);
  std::vector<int> pos(new_order.size());
  for (size_t i = 0; i < new_order.size(); ++i) pos[new_order[i]] = static_cast<int>(i);
  std::vector<int> signs(c.facets().size());
  const auto& nf = c.facets();
  for (size_t f = 0; f < complex_.facets().size(); ++f) {
    const Simplex& old = complex_.facets()[f];
    Simplex img;
    for (int v : old) img.push_back(pos[v]);
    int parity = permutation_sign(img);
    std::sort(img.begin(), img.end());
    auto idx = std::lower_bound(nf.begin(), nf.end(), img) - nf.begin();
    signs[idx] = signs_[f] * parity;
  }
  return OrderedOrientedComplex(std::move(c), std::move(signs));
}

OrderedOrientedComplex OrderedOrientedComplex::reversed() const {
  std::vector<int> s = signs_;
  for (int& x : s) x = -x;
  return OrderedOrientedComplex(complex_, std::move(s));
}

Simplex face(const OrderedOrientedComplex& k, const Simplex& tau, const std::vector<int>& indices) {
  if (!k.complex().contains(tau)) throw UnknownSimplex(k.complex().format(tau) + " is not in the complex");
  Simplex out;
  int prev = -1;
  for (int j : indices) {
    if (j < 0 || j >= static_cast<int>(tau.size()) || j <= prev)
      throw IndexOutOfRange("face index " + std::to_string(j) + " invalid for a " +
                            std::to_string(tau.size() - 1) + "-simplex");
    out.push_back(tau[j]);
    prev = j;
  }
  return out;
}

int relative_sign(const OrderedOrientedComplex& k, const Simplex& sigma, const Simplex& kappa) {
  if (sigma.size() != 5 || kappa.size() != 4) throw NotAFace("expected a 4-simplex and a 3-simplex");
  int lambda = k.sign(sigma);
  for (int i = 0; i < 5; ++i) {
    Simplex f = sigma;
    f.erase(f.begin() + i);
    if (f == kappa) return lambda * (i % 2 ? -1 : 1);
  }
  throw NotAFace(k.complex().format(kappa) + " is not a face of " + k.complex().format(sigma));
}

}  // namespace state4
