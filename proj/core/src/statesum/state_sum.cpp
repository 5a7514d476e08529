#include "state4/statesum/state_sum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>

#include "state4/errors.hpp"
#include "state4/simplicial/bistellar.hpp"

namespace state4 {

namespace {

// ---------------------------------------------------------------------------
// Depth-first schedule

struct Step {
  bool edge = true;
  int id = 0;
  // Edge steps: the triangle whose other two edges are already set, and the
  // position of this edge in it (0: face 01, 1: face 12, 2: face 02).
  int constraint = -1, role = 0;
  int fixed = -1;                  // forced object, or -1
  std::vector<int> check_tris;     // fusion must be nonempty
  // Triangle steps: tetrahedra and facets completed here.
  std::vector<int> tets, facets;
};

// Vertices in breadth-first order; each vertex contributes its tree edge,
// then its edges to earlier vertices, and each triangle follows its last edge.
std::vector<Step> make_schedule(const StateLayout& l, bool with_triangles, const std::vector<int>& fixed_edges,
                                std::vector<int>* tree_edges = nullptr) {
  const int n = l.num_vertices;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge)
  for (size_t e = 0; e < l.edges.size(); ++e) {
    adj[l.edges[e][0]].emplace_back(l.edges[e][1], static_cast<int>(e));
    adj[l.edges[e][1]].emplace_back(l.edges[e][0], static_cast<int>(e));
  }
  // High-degree vertices first, so the last vertices (whose stars are
  // re-evaluated for every state) have small stars.
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return adj[a].size() > adj[b].size(); });
  for (auto& list : adj)
    std::stable_sort(list.begin(), list.end(),
                     [&](auto x, auto y) { return adj[x.first].size() > adj[y.first].size(); });
  std::vector<int> rank(n, -1), order, parent_edge(n, -1);
  for (int root : by_degree) {
    if (rank[root] >= 0) continue;
    std::deque<int> q{root};
    rank[root] = static_cast<int>(order.size());
    order.push_back(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (auto [w, e] : adj[v])
        if (rank[w] < 0) {
          rank[w] = static_cast<int>(order.size());
          order.push_back(w);
          parent_edge[w] = e;
          q.push_back(w);
        }
    }
  }
  if (tree_edges) {
    tree_edges->clear();
    for (int v : order)
      if (parent_edge[v] >= 0) tree_edges->push_back(parent_edge[v]);
  }
  std::vector<std::vector<int>> tris_of_edge(l.edges.size());
  for (size_t t = 0; t < l.triangles.size(); ++t)
    for (int e : l.triangle_edges[t]) tris_of_edge[e].push_back(static_cast<int>(t));
  std::vector<char> placed(l.edges.size(), 0);
  auto closes_triangle = [&](int e) {
    for (int t : tris_of_edge[e]) {
      int set = 0;
      for (int f : l.triangle_edges[t]) set += f != e && placed[f];
      if (set == 2) return true;
    }
    return false;
  };
  std::vector<int> edge_order;
  auto place = [&](int e) {
    edge_order.push_back(e);
    placed[e] = 1;
  };
  for (int v : order) {
    if (parent_edge[v] >= 0) place(parent_edge[v]);
    std::vector<std::pair<int, int>> back;
    for (auto [w, e] : adj[v])
      if (rank[w] < rank[v] && e != parent_edge[v]) back.emplace_back(rank[w], e);
    std::sort(back.begin(), back.end());
    // Edges determined by a finished triangle go first; free choices last.
    while (!back.empty()) {
      size_t pick = 0;
      for (size_t i = 0; i < back.size(); ++i)
        if (closes_triangle(back[i].second)) {
          pick = i;
          break;
        }
      place(back[pick].second);
      back.erase(back.begin() + static_cast<long>(pick));
    }
  }
  std::vector<int> edge_pos(l.edges.size());
  for (size_t i = 0; i < edge_order.size(); ++i) edge_pos[edge_order[i]] = static_cast<int>(i);
  // Triangles by the position of their last edge.
  std::vector<std::vector<int>> tris_at(edge_order.size());
  for (size_t t = 0; t < l.triangles.size(); ++t) {
    const auto& e = l.triangle_edges[t];
    tris_at[std::max({edge_pos[e[0]], edge_pos[e[1]], edge_pos[e[2]]})].push_back(static_cast<int>(t));
  }
  std::vector<int> tri_pos(l.triangles.size(), -1);
  std::vector<Step> steps;
  int tri_count = 0;
  for (size_t i = 0; i < edge_order.size(); ++i) {
    Step s;
    s.edge = true;
    s.id = edge_order[i];
    s.fixed = fixed_edges.empty() ? -1 : fixed_edges[s.id];
    for (int t : tris_at[i]) {
      if (s.constraint < 0) {
        s.constraint = t;
        const auto& e = l.triangle_edges[t];
        s.role = e[0] == s.id ? 0 : e[1] == s.id ? 1 : 2;
      } else {
        s.check_tris.push_back(t);
      }
    }
    steps.push_back(std::move(s));
    if (!with_triangles) continue;
    for (int t : tris_at[i]) {
      Step ts;
      ts.edge = false;
      ts.id = t;
      tri_pos[t] = tri_count++;
      steps.push_back(std::move(ts));
    }
  }
  if (with_triangles) {
    // Attach tetrahedra and facets to the triangle step completing them.
    std::vector<int> step_of_tri(l.triangles.size());
    for (size_t i = 0; i < steps.size(); ++i)
      if (!steps[i].edge) step_of_tri[steps[i].id] = static_cast<int>(i);
    for (size_t t = 0; t < l.tets.size(); ++t) {
      int last = 0;
      for (int tr : l.tet_triangles[t]) last = std::max(last, step_of_tri[tr]);
      steps[last].tets.push_back(static_cast<int>(t));
    }
    for (size_t f = 0; f < l.facets.size(); ++f) {
      int last = 0;
      for (int tr : l.facet_triangles[f]) last = std::max(last, step_of_tri[tr]);
      steps[last].facets.push_back(static_cast<int>(f));
    }
  }
  return steps;
}

// ---------------------------------------------------------------------------
// Exact monomials ±ζ_L^k · 2^a 3^b 5^c 7^d

constexpr int kPrimes[4] = {2, 3, 5, 7};

struct Mono {
  int root = 0;
  std::array<int, 4> e{};
};

std::optional<Mono> to_mono(const Cyclotomic& c, int L) {
  auto m = c.as_monomial(L);
  if (!m) return std::nullopt;
  Mono out;
  out.root = static_cast<int>(((m->second % L) + L) % L);
  mpz_class num = m->first.numerator(), den = m->first.denominator();
  if (num < 0) {
    num = -num;
    out.root = (out.root + L / 2) % L;
  }
  for (int i = 0; i < 4; ++i) {
    while (num % kPrimes[i] == 0) num /= kPrimes[i], ++out.e[i];
    while (den % kPrimes[i] == 0) den /= kPrimes[i], --out.e[i];
  }
  if (num != 1 || den != 1) return std::nullopt;
  return out;
}

Cyclotomic from_mono(int root, const std::array<int, 4>& e, int L) {
  mpz_class num = 1, den = 1;
  for (int i = 0; i < 4; ++i) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), kPrimes[i], static_cast<unsigned long>(std::abs(e[i])));
    (e[i] >= 0 ? num : den) *= p;
  }
  return Cyclotomic(Rational(num, den)) * Cyclotomic::zeta(L, root);
}

// ---------------------------------------------------------------------------
// Open-addressing tables keyed by packed label tuples

constexpr std::uint64_t kEmpty = ~0ull;

inline size_t slot_of(std::uint64_t key, size_t mask) {
  return static_cast<size_t>((key * 0x9e3779b97f4a7c15ull) >> 17) & mask;
}

class FlatIndex {
 public:
  void reserve(size_t n) {
    size_t cap = std::bit_ceil(std::max<size_t>(16, 2 * n));
    keys_.assign(cap, kEmpty);
    vals_.assign(cap, -1);
    mask_ = cap - 1;
  }
  void insert(std::uint64_t key, int v) {
    size_t i = slot_of(key, mask_);
    while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
    keys_[i] = key;
    vals_[i] = v;
  }
  int find(std::uint64_t key) const {
    for (size_t i = slot_of(key, mask_);; i = (i + 1) & mask_) {
      if (keys_[i] == key) return vals_[i];
      if (keys_[i] == kEmpty) return -1;
    }
  }

 private:
  std::vector<std::uint64_t> keys_;
  std::vector<int> vals_;
  size_t mask_ = 0;
};

class FlatCounter {
 public:
  FlatCounter() { rehash(64); }
  void add(std::uint64_t key, std::uint64_t n = 1) {
    if (key == last_) {
      counts_[last_slot_] += n;
      return;
    }
    size_t i = slot_of(key, mask_);
    while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
    if (keys_[i] == kEmpty) {
      if (2 * (size_ + 1) > keys_.size()) {
        rehash(2 * keys_.size());
        add(key, n);
        return;
      }
      keys_[i] = key;
      ++size_;
    }
    counts_[i] += n;
    last_ = key;
    last_slot_ = i;
  }
  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] != kEmpty) f(keys_[i], counts_[i]);
  }

 private:
  void rehash(size_t cap) {
    std::vector<std::uint64_t> keys(cap, kEmpty), counts(cap, 0);
    keys_.swap(keys);
    counts_.swap(counts);
    mask_ = cap - 1;
    size_ = 0;
    last_ = kEmpty;
    for (size_t i = 0; i < keys.size(); ++i)
      if (keys[i] != kEmpty) add(keys[i], counts[i]);
    last_ = kEmpty;
  }
  std::vector<std::uint64_t> keys_, counts_;
  size_t mask_ = 0, size_ = 0;
  std::uint64_t last_ = kEmpty;
  size_t last_slot_ = 0;
};

// ---------------------------------------------------------------------------
// Per-state factor tables

struct Factors {
  std::vector<Cyclotomic> values;
  std::vector<Mono> monos;
  // Packed monomials: exponent i (biased) in bits [w i, w i + w), the
  // unreduced root above 4w. Addition of packed words multiplies monomials.
  int width = 0;
  std::vector<std::uint64_t> words;
  std::uint64_t one = 0;

  std::uint64_t word(const Mono& m) const {
    std::uint64_t v = static_cast<std::uint64_t>(m.root) << (4 * width);
    for (int i = 0; i < 4; ++i) v += static_cast<std::uint64_t>(static_cast<std::int64_t>(m.e[i]) << (width * i));
    return v;
  }
  // Histogram key with the root reduced mod L.
  std::uint64_t key(std::uint64_t acc) const {
    const int shift = 4 * width;
    std::uint64_t low = acc & ((1ull << shift) - 1);
    return low | (((acc >> shift) % static_cast<std::uint64_t>(L)) << shift);
  }
  Mono decode(std::uint64_t k) const {
    Mono m;
    const std::uint64_t mask = (1ull << width) - 1;
    for (int i = 0; i < 4; ++i) m.e[i] = static_cast<int>((k >> (width * i)) & mask) - (1 << (width - 1));
    m.root = static_cast<int>(k >> (4 * width));
    return m;
  }
  std::vector<int> edge, tri;  // factor per object / morphism
  std::unordered_map<TetraKey, int, LabelHash> tet;
  std::unordered_map<TenJKey, std::array<int, 2>, LabelHash> facet;  // [ε=+1, ε=-1]
  // Packed copies of tet and facet when ten labels fit in 64 bits.
  int bits = 0;
  FlatIndex tet_flat, facet_flat;
  std::vector<std::array<int, 2>> facet_ids;
  bool mono = false;
  int L = 2;

  template <size_t N>
  std::uint64_t packed(const std::array<int, N>& k) const {
    std::uint64_t key = 0;
    for (int v : k) key = (key << bits) | static_cast<std::uint64_t>(v);
    return key;
  }
  int find_tet(const TetraKey& k) const {
    if (bits) return tet_flat.find(packed(k));
    auto it = tet.find(k);
    return it == tet.end() ? -1 : it->second;
  }
  const std::array<int, 2>* find_facet(const TenJKey& k) const {
    if (bits) {
      int i = facet_flat.find(packed(k));
      return i < 0 ? nullptr : &facet_ids[i];
    }
    auto it = facet.find(k);
    return it == facet.end() ? nullptr : &it->second;
  }
};

int lcm_capped(int a, int b) {
  long v = std::lcm(static_cast<long>(a), static_cast<long>(b));
  return v > (1 << 20) ? -1 : static_cast<int>(v);
}

Factors make_factors(const Fusion2CatData& cat, const StateLayout& l) {
  Factors f;
  auto add = [&](Cyclotomic v) {
    f.values.push_back(std::move(v));
    return static_cast<int>(f.values.size()) - 1;
  };
  for (int a = 0; a < cat.num_objects(); ++a) f.edge.push_back(add(cat.d(a).inverse()));
  for (const auto& m : cat.morphisms) f.tri.push_back(add(m.dim));
  if (cat.scalar_spaces()) {
    for (const auto& [k, b] : cat.tetra) f.tet.emplace(k, add(b.copairing[0][0]));
    for (const auto& [k, e] : cat.ten_j) {
      if (e.plus.size() != 1 || e.minus.size() != 1) throw IndexMismatch("10j entry has the wrong size");
      int p = add(e.plus[0]);
      f.facet.emplace(k, std::array<int, 2>{p, add(e.minus[0])});
    }
    int bits = std::max(1, static_cast<int>(std::bit_width(cat.morphisms.size())));
    if (10 * bits <= 64) {
      f.bits = bits;
      f.tet_flat.reserve(f.tet.size());
      for (const auto& [k, id] : f.tet) f.tet_flat.insert(f.packed(k), id);
      f.facet_flat.reserve(f.facet.size());
      for (const auto& [k, ids] : f.facet) {
        f.facet_flat.insert(f.packed(k), static_cast<int>(f.facet_ids.size()));
        f.facet_ids.push_back(ids);
      }
    }
  }
  // Monomial path: a common even root order and bounded prime exponents.
  int L = 2;
  for (const auto& v : f.values) {
    if (L < 0) break;
    L = lcm_capped(L, v.conductor());
  }
  if (L < 0 || !cat.scalar_spaces()) return f;
  f.L = L;
  long max_bound = 0;
  for (const auto& v : f.values) {
    auto m = to_mono(v, L);
    if (!m) return f;
    f.monos.push_back(*m);
  }
  const size_t counts[4] = {l.edges.size(), l.triangles.size(), l.tets.size(), l.facets.size()};
  auto worst = [&](auto&& ids, int i) {
    int w = 0;
    for (int id : ids) w = std::max(w, std::abs(f.monos[id].e[i]));
    return w;
  };
  for (int i = 0; i < 4; ++i) {
    std::vector<int> tets, facets;
    for (const auto& [k, id] : f.tet) tets.push_back(id);
    for (const auto& [k, ids] : f.facet) facets.push_back(ids[0]), facets.push_back(ids[1]);
    long b = static_cast<long>(counts[0]) * worst(f.edge, i) + static_cast<long>(counts[1]) * worst(f.tri, i) +
             static_cast<long>(counts[2]) * worst(tets, i) + static_cast<long>(counts[3]) * worst(facets, i);
    max_bound = std::max(max_bound, b);
  }
  // Every partial product stays within the bounds, so biased fields never
  // carry into each other.
  const int width = static_cast<int>(std::bit_width(static_cast<unsigned long>(max_bound))) + 1;
  const long factors = static_cast<long>(counts[0] + counts[1] + counts[2] + counts[3]);
  if (4 * width > 40 || std::bit_width(static_cast<unsigned long>(factors * L)) > static_cast<unsigned>(64 - 4 * width)) return f;
  f.width = width;
  f.one = 0;
  for (int i = 0; i < 4; ++i) f.one += 1ull << (width * i + width - 1);
  for (const auto& m : f.monos) f.words.push_back(f.word(m));
  f.mono = true;
  return f;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class Path { Mono, Cyclotomic, General };

struct Context {
  const StateLayout& l;
  const Fusion2CatData& cat;
  const std::vector<Step>& steps;
  const Factors& fac;
  Path path;
};

struct Node {
  size_t pos = 0;
  State state;
  std::uint64_t mono = 0;
  Cyclotomic value{1};
};

struct Result {
  FlatCounter histogram;
  Cyclotomic sum;
  long long states = 0;
};

class Walker {
 public:
  Walker(const Context& ctx, Result& out) : c_(ctx), out_(out) {}

  // Calls `child` for each admissible extension of `n` by one step, with
  // `n` temporarily updated in place.
  template <class F>
  void extend(Node& n, F&& child) {
    const Step& st = c_.steps[n.pos];
    State& s = n.state;
    if (st.edge) {
      auto try_label = [&](int a) {
        s.edge_labels[st.id] = a;
        for (int t : st.check_tris) {
          const auto& e = c_.l.triangle_edges[t];
          if (c_.cat.fusion(s.edge_labels[e[0]], s.edge_labels[e[1]], s.edge_labels[e[2]]).empty()) return;
        }
        if (st.constraint >= 0) {
          const auto& e = c_.l.triangle_edges[st.constraint];
          if (c_.cat.fusion(s.edge_labels[e[0]], s.edge_labels[e[1]], s.edge_labels[e[2]]).empty()) return;
        }
        with_factor(n, c_.fac.edge[a], child);
      };
      if (st.fixed >= 0) {
        try_label(st.fixed);
      } else if (st.constraint >= 0) {
        const auto& e = c_.l.triangle_edges[st.constraint];
        const auto& cand = st.role == 2   ? c_.cat.targets(s.edge_labels[e[0]], s.edge_labels[e[1]])
                           : st.role == 1 ? c_.cat.middles(s.edge_labels[e[0]], s.edge_labels[e[2]])
                                          : c_.cat.lefts(s.edge_labels[e[1]], s.edge_labels[e[2]]);
        for (int a : cand) try_label(a);
      } else {
        for (int a = 0; a < c_.cat.num_objects(); ++a) try_label(a);
      }
      s.edge_labels[st.id] = -1;
      return;
    }
    const auto& e = c_.l.triangle_edges[st.id];
    for (int f : c_.cat.fusion(s.edge_labels[e[0]], s.edge_labels[e[1]], s.edge_labels[e[2]])) {
      s.tri_labels[st.id] = f;
      apply_triangle(n, st, f, child);
    }
    s.tri_labels[st.id] = -1;
  }

  void run(Node& n) {
    if (n.pos == c_.steps.size()) {
      leaf(n);
      return;
    }
    extend(n, [&](Node& m) { run(m); });
  }

 private:
  template <class F>
  void with_factor(Node& n, int id, F&& child) {
    if (c_.path == Path::Mono) {
      n.mono += c_.fac.words[id];
      ++n.pos;
      child(n);
      --n.pos;
      n.mono -= c_.fac.words[id];
    } else if (c_.path == Path::Cyclotomic) {
      Cyclotomic saved = n.value;
      n.value *= c_.fac.values[id];
      ++n.pos;
      child(n);
      --n.pos;
      n.value = std::move(saved);
    } else {
      ++n.pos;
      child(n);
      --n.pos;
    }
  }

  template <class F>
  void apply_triangle(Node& n, const Step& st, int f, F&& child) {
    const State& s = n.state;
    auto tet_key = [&](int t) {
      const auto& tr = c_.l.tet_triangles[t];
      return TetraKey{s.tri_labels[tr[0]], s.tri_labels[tr[1]], s.tri_labels[tr[2]], s.tri_labels[tr[3]]};
    };
    if (c_.path == Path::General) {
      for (int t : st.tets)
        if (c_.cat.tetra_dim(tet_key(t)) == 0) return;
      ++n.pos;
      child(n);
      --n.pos;
      return;
    }
    ids_.clear();
    ids_.push_back(c_.fac.tri[f]);
    for (int t : st.tets) {
      int id = c_.fac.find_tet(tet_key(t));
      if (id < 0) return;
      ids_.push_back(id);
    }
    for (int fc : st.facets) {
      TenJKey k{};
      for (int i = 0; i < 10; ++i) k[i] = s.tri_labels[c_.l.facet_triangles[fc][i]];
      const auto* ids = c_.fac.find_facet(k);
      if (!ids) throw IndexMismatch("missing 10j entry for an admissible 4-simplex");
      ids_.push_back((*ids)[c_.l.facet_sign[fc] > 0 ? 0 : 1]);
    }
    if (c_.path == Path::Mono) {
      std::uint64_t saved = n.mono;
      for (int id : ids_) n.mono += c_.fac.words[id];
      ++n.pos;
      child(n);
      --n.pos;
      n.mono = saved;
    } else {
      Cyclotomic saved = n.value;
      for (int id : ids_) n.value *= c_.fac.values[id];
      ++n.pos;
      child(n);
      --n.pos;
      n.value = std::move(saved);
    }
  }

  void leaf(const Node& n) {
    ++out_.states;
    if (c_.path == Path::Mono) {
      out_.histogram.add(c_.fac.key(n.mono));
    } else if (c_.path == Path::Cyclotomic) {
      out_.sum += n.value;
    } else {
      out_.sum += normalization(c_.l, c_.cat, n.state) * ten_j_action(c_.l, c_.cat, n.state);
    }
  }

  const Context& c_;
  Result& out_;
  std::vector<int> ids_;
};

Cyclotomic histogram_value(const FlatCounter& h, const Factors& f) {
  // Sorted keys keep the summation order fixed.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
  h.for_each([&](std::uint64_t k, std::uint64_t n) { items.emplace_back(k, n); });
  std::sort(items.begin(), items.end());
  Cyclotomic sum;
  for (const auto& [key, count] : items) {
    Mono m = f.decode(key);
    sum += from_mono(m.root, m.e, f.L) * Cyclotomic(Rational(mpz_class(std::to_string(count)), mpz_class(1)));
  }
  return sum;
}

struct Totals {
  Cyclotomic sum;
  long long states = 0;
};

// Runs the schedule from an empty state with `threads` workers over
// prefix tasks and combines the exact partial sums.
Totals enumerate_sum(const Context& ctx, int threads) {
  Node root;
  root.mono = ctx.fac.one;
  root.state.edge_labels.assign(ctx.l.edges.size(), -1);
  root.state.tri_labels.assign(ctx.l.triangles.size(), -1);
  std::vector<Node> tasks{root};
  const size_t target = threads > 1 ? static_cast<size_t>(threads) * 16 : 1;
  Result scratch;
  Walker splitter(ctx, scratch);
  while (tasks.size() < target) {
    bool grew = false;
    std::vector<Node> next;
    for (auto& t : tasks) {
      if (t.pos == ctx.steps.size()) {
        next.push_back(t);
        continue;
      }
      grew = true;
      splitter.extend(t, [&](Node& m) { next.push_back(m); });
    }
    tasks = std::move(next);
    if (!grew) break;
  }
  std::vector<Result> results(std::max(1, threads));
  std::atomic<size_t> cursor{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](int w) {
    try {
      Walker walker(ctx, results[w]);
      for (size_t i; (i = cursor.fetch_add(1)) < tasks.size();) walker.run(tasks[i]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      cursor = tasks.size();
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  Totals out;
  FlatCounter merged;
  for (auto& r : results) {
    out.states += r.states;
    out.sum += r.sum;
    r.histogram.for_each([&](std::uint64_t k, std::uint64_t v) { merged.add(k, v); });
  }
  if (ctx.path == Path::Mono) out.sum = histogram_value(merged, ctx.fac);
  return out;
}

void require_closed(const StateLayout& l) {
  if (!l.closed) throw ValidationError("state sums need a closed complex: some tetrahedron lacks a partner slot");
}

}  // namespace

Cyclotomic state_sum(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const StateSumOptions& opt,
                     StateSumStats* stats) {
  StateLayout l = StateLayout::from(k, opt.reverse_orientation);
  require_closed(l);
  auto steps = make_schedule(l, true, {});
  Factors fac = make_factors(cat, l);
  Path path = opt.force_general || !cat.scalar_spaces() ? Path::General : fac.mono ? Path::Mono : Path::Cyclotomic;
  Context ctx{l, cat, steps, fac, path};
  Totals t = enumerate_sum(ctx, std::max(1, opt.threads));
  Cyclotomic z = t.sum;
  if (path != Path::General) z *= cat.total_dimension().inverse().pow(l.num_vertices);
  if (stats) {
    stats->states = t.states;
    stats->path = path == Path::Mono ? "monomial" : path == Path::Cyclotomic ? "cyclotomic" : "general";
  }
  return z;
}

// ---------------------------------------------------------------------------
// Reduced mode

namespace {

// Dense matrices over F_p.
using ModMatrix = std::vector<std::vector<int>>;

// Row-reduces in place and returns the pivot columns.
std::vector<int> row_reduce(ModMatrix& m, int p) {
  std::vector<int> pivots;
  size_t row = 0;
  const size_t cols = m.empty() ? 0 : m[0].size();
  auto inv = [&](int a) {
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    return 0;
  };
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t r = row;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    int s = inv(m[row][c]);
    for (auto& v : m[row]) v = v * s % p;
    for (size_t o = 0; o < m.size(); ++o)
      if (o != row && m[o][c]) {
        int f = m[o][c];
        for (size_t j = c; j < cols; ++j) m[o][j] = ((m[o][j] - f * m[row][j]) % p + p) % p;
      }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  return pivots;
}

struct Cohomology {
  int rank_d1 = 0;                       // rank of δ¹: C¹ → C²
  std::vector<std::vector<int>> classes; // basis of a complement of B² in Z², as 2-cochains
};

Cohomology second_cohomology(const StateLayout& l, int p) {
  const size_t ne = l.edges.size(), nt = l.triangles.size(), nk = l.tets.size();
  // δ¹ as rows = images of edge basis vectors (a spanning set of B²).
  ModMatrix b2(ne, std::vector<int>(nt, 0));
  for (size_t t = 0; t < nt; ++t) {
    const auto& e = l.triangle_edges[t];  // (δb)(t) = b(01) + b(12) - b(02)
    b2[e[0]][t] = (b2[e[0]][t] + 1) % p;
    b2[e[1]][t] = (b2[e[1]][t] + 1) % p;
    b2[e[2]][t] = (b2[e[2]][t] + p - 1) % p;
  }
  // δ²: (δa)(0123) = a(123) - a(023) + a(013) - a(012).
  ModMatrix d2(nk, std::vector<int>(nt, 0));
  for (size_t k = 0; k < nk; ++k) {
    const auto& tr = l.tet_triangles[k];
    const int sg[4] = {p - 1, 1, p - 1, 1};
    for (int i = 0; i < 4; ++i) d2[k][tr[i]] = (d2[k][tr[i]] + sg[i]) % p;
  }
  Cohomology h;
  ModMatrix b = b2;
  auto b_piv = row_reduce(b, p);
  h.rank_d1 = static_cast<int>(b_piv.size());
  b.resize(b_piv.size());
  // Kernel of δ² from its reduced row echelon form.
  auto piv = row_reduce(d2, p);
  std::vector<bool> is_piv(nt, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<int>> kernel;
  for (size_t free = 0; free < nt; ++free) {
    if (is_piv[free]) continue;
    std::vector<int> v(nt, 0);
    v[free] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - d2[r][free]) % p;
    kernel.push_back(std::move(v));
  }
  // Extend the B² basis greedily by kernel vectors.
  ModMatrix span = b;
  int rank = h.rank_d1;
  for (auto& v : kernel) {
    ModMatrix trial = span;
    trial.push_back(v);
    ModMatrix reduced = trial;
    int r = static_cast<int>(row_reduce(reduced, p).size());
    if (r > rank) {
      span.push_back(v);
      rank = r;
      h.classes.push_back(v);
    }
  }
  return h;
}

// Coordinates of an elementary abelian p-group: a basis and, for each
// element, its coefficient vector.
struct Coordinates {
  int p = 1;
  std::vector<int> basis;
  std::vector<std::vector<int>> coords;
  std::unordered_map<std::string, int> element_of;  // coefficient text -> element

  static std::string text(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += std::to_string(x) + ",";
    return s;
  }
};

Coordinates coordinates(const GroupPresentation& a, int p) {
  Coordinates c;
  c.p = p;
  const int n = a.order();
  std::vector<bool> in(n, false);
  in[a.unit()] = true;
  std::vector<int> span{a.unit()};
  while (static_cast<int>(span.size()) < n) {
    int g = 0;
    while (in[g]) ++g;
    c.basis.push_back(g);
    std::vector<int> grown;
    for (int x : span)
      for (int k = 0, y = x; k < p; ++k, y = a.mul(y, g)) grown.push_back(y);
    span = std::move(grown);
    for (int x : span) in[x] = true;
  }
  // Every coefficient vector names exactly one element.
  const int r = static_cast<int>(c.basis.size());
  c.coords.assign(n, {});
  std::vector<int> v(r, 0);
  while (true) {
    int x = a.unit();
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < v[i]; ++k) x = a.mul(x, c.basis[i]);
    c.coords[x] = v;
    c.element_of[Coordinates::text(v)] = x;
    int i = 0;
    while (i < r && ++v[i] == p) v[i++] = 0;
    if (i == r) break;
  }
  return c;
}

struct Reduction {
  const StateLayout& l;
  const Fusion2CatData& cat;
  const GroupLabels& labels;
  Coordinates coord;
  Cohomology h;
  std::vector<int> morphism_of;  // ((left * N + right) * N + target) * |A| + a
  int N = 0, nA = 1;

  int morphism(int left, int right, int target, int a) const {
    return morphism_of[((static_cast<size_t>(left) * N + right) * N + target) * nA + a];
  }

  // Element of A from coefficient vectors per coordinate.
  int element(const std::vector<int>& v) const { return coord.element_of.at(Coordinates::text(v)); }

  // Fills triangle labels from edge labels and A-labels; false when some
  // triangle has no such morphism.
  bool fill(State& s, const std::vector<int>& alabel) const {
    for (size_t t = 0; t < l.triangles.size(); ++t) {
      const auto& e = l.triangle_edges[t];
      int m = morphism(s.edge_labels[e[0]], s.edge_labels[e[1]], s.edge_labels[e[2]], alabel[t]);
      if (m < 0) return false;
      s.tri_labels[t] = m;
    }
    return true;
  }

  // A-labels of the class with coefficients `coef` (per class, per coordinate).
  std::vector<int> class_labels(const std::vector<int>& coef) const {
    const int r = static_cast<int>(coord.basis.size());
    std::vector<int> out(l.triangles.size());
    std::vector<int> v(r);
    for (size_t t = 0; t < l.triangles.size(); ++t) {
      std::fill(v.begin(), v.end(), 0);
      for (size_t i = 0; i < h.classes.size(); ++i)
        if (h.classes[i][t])
          for (int j = 0; j < r; ++j) v[j] = (v[j] + h.classes[i][t] * coef[i * r + j]) % coord.p;
      out[t] = element(v);
    }
    return out;
  }
};

Cyclotomic weight(const StateLayout& l, const Fusion2CatData& cat, const State& s) {
  return normalization(l, cat, s) * ten_j_action(l, cat, s);
}

}  // namespace

Cyclotomic state_sum_reduced(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const StateSumOptions& opt,
                             StateSumStats* stats) {
  if (!cat.labels) throw UnsupportedReduction("the category carries no group labels");
  if (!cat.unit) throw UnsupportedReduction("the category has no unit object");
  const GroupLabels& gl = *cat.labels;
  auto p = gl.A.prime_exponent();
  if (!p) throw UnsupportedReduction("reduced mode needs an elementary abelian label group, got order " +
                                     std::to_string(gl.A.order()));
  if (gl.G.order() != cat.num_objects())
    throw UnsupportedReduction("objects must correspond to the grading group");
  StateLayout l = StateLayout::from(k, opt.reverse_orientation);
  require_closed(l);

  Reduction red{l, cat, gl, coordinates(gl.A, *p), {}, {}, cat.num_objects(), gl.A.order()};
  if (*p > 1) red.h = second_cohomology(l, *p);
  red.morphism_of.assign(static_cast<size_t>(red.N) * red.N * red.N * red.nA, -1);
  for (size_t m = 0; m < cat.morphisms.size(); ++m) {
    const auto& mo = cat.morphisms[m];
    red.morphism_of[((static_cast<size_t>(mo.left) * red.N + mo.right) * red.N + mo.target) * red.nA +
                    gl.morphism_label[m]] = static_cast<int>(m);
  }
  const int r = static_cast<int>(red.coord.basis.size());
  const size_t ncoef = red.h.classes.size() * r;
  if (ncoef > 24) throw UnsupportedReduction("H² is too large to enumerate");

  // Flat edge labelings with the spanning forest fixed to the unit.
  std::vector<int> tree;
  make_schedule(l, false, {}, &tree);
  std::vector<int> fixed(l.edges.size(), -1);
  for (int e : tree) fixed[e] = *cat.unit;
  auto steps = make_schedule(l, false, fixed);
  Factors none;
  none.edge.assign(cat.num_objects(), 0);
  Context ctx{l, cat, steps, none, Path::General};
  std::vector<std::vector<int>> edge_labelings;
  {
    Result sink;
    Walker w(ctx, sink);
    Node root;
    root.state.edge_labels.assign(l.edges.size(), -1);
    root.state.tri_labels.assign(l.triangles.size(), -1);
    std::function<void(Node&)> rec = [&](Node& n) {
      if (n.pos == steps.size()) {
        edge_labelings.push_back(n.state.edge_labels);
        return;
      }
      w.extend(n, rec);
    };
    rec(root);
  }

  // Self-check: gauge and coboundary shifts of random states keep the weight.
  Rng rng(opt.seed);
  int checks = 0;
  if (!edge_labelings.empty()) {
    for (int i = 0; i < opt.self_check_samples; ++i) {
      State s{edge_labelings[rng.below(edge_labelings.size())], std::vector<int>(l.triangles.size(), -1)};
      std::vector<int> coef(ncoef);
      for (auto& c : coef) c = static_cast<int>(rng.below(*p));
      auto alabel = red.class_labels(coef);
      auto shift = [&](std::vector<int> a) {
        // a + δb for a random A-valued 1-cochain b.
        std::vector<int> b(l.edges.size());
        for (auto& x : b) x = static_cast<int>(rng.below(gl.A.order()));
        for (size_t t = 0; t < l.triangles.size(); ++t) {
          const auto& e = l.triangle_edges[t];
          a[t] = gl.A.mul(gl.A.mul(a[t], b[e[0]]), gl.A.mul(b[e[1]], gl.A.inv(b[e[2]])));
        }
        return a;
      };
      auto base_labels = shift(alabel);
      State base = s;
      if (!red.fill(base, base_labels)) throw ReductionSelfCheckFailed("sampled state is not admissible");
      // Vertex gauge h: x(uv) ↦ h_u x(uv) h_v⁻¹ on the grading group.
      std::vector<int> h(l.num_vertices);
      for (auto& x : h) x = static_cast<int>(rng.below(gl.G.order()));
      std::vector<int> object_of_grade(gl.G.order(), -1);
      for (int a = 0; a < cat.num_objects(); ++a) object_of_grade[gl.object_grade[a]] = a;
      State moved{std::vector<int>(l.edges.size()), std::vector<int>(l.triangles.size(), -1)};
      for (size_t e = 0; e < l.edges.size(); ++e) {
        int g = gl.object_grade[s.edge_labels[e]];
        int u = l.edges[e][0], v = l.edges[e][1];
        moved.edge_labels[e] = object_of_grade[gl.G.mul(gl.G.mul(h[u], g), gl.G.inv(h[v]))];
      }
      if (!red.fill(moved, shift(base_labels)))
        throw ReductionSelfCheckFailed("gauge-shifted state has no matching morphisms");
      Cyclotomic w0 = weight(l, cat, base), w1 = weight(l, cat, moved);
      if (w0 != w1)
        throw ReductionSelfCheckFailed("weight changed under a gauge/coboundary shift: " + w0.to_string() + " vs " +
                                       w1.to_string());
      ++checks;
    }
  }

  Cyclotomic sum;
  long long reps = 0;
  std::vector<int> coef(ncoef, 0);
  for (const auto& edges : edge_labelings) {
    std::fill(coef.begin(), coef.end(), 0);
    while (true) {
      State s{edges, std::vector<int>(l.triangles.size(), -1)};
      if (red.fill(s, red.class_labels(coef))) {
        sum += weight(l, cat, s);
        ++reps;
      }
      size_t i = 0;
      while (i < ncoef && ++coef[i] == *p) coef[i++] = 0;
      if (i == ncoef) break;
    }
  }
  int components = 0;
  {
    std::vector<int> seen(l.num_vertices, 0);
    for (int v = 0; v < l.num_vertices; ++v) seen[v] = v;
    std::function<int(int)> find = [&](int v) { return seen[v] == v ? v : seen[v] = find(seen[v]); };
    for (const auto& e : l.edges) seen[find(e[0])] = find(e[1]);
    for (int v = 0; v < l.num_vertices; ++v) components += find(v) == v;
  }
  Cyclotomic mult = Cyclotomic(gl.G.order()).pow(l.num_vertices - components);
  long long log_b = static_cast<long long>(red.h.rank_d1) * r;
  if (*p > 1) mult *= Cyclotomic(*p).pow(static_cast<long>(log_b));
  if (stats) {
    stats->states = reps;
    stats->path = "reduced";
    stats->multiplier_log = log_b;
    stats->self_checks = checks;
  }
  return sum * mult;
}

GaugeReport gauge_transform_test(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const Rescaling& r,
                                 bool ten_j_only, const StateSumOptions& opt) {
  GaugeReport rep;
  rep.before = state_sum(k, cat, opt);
  rep.after = state_sum(k, gauge_transform(cat, r, ten_j_only), opt);
  rep.pass = rep.before == rep.after;
  return rep;
}

}  // namespace state4
