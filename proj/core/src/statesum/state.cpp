#include "state4/statesum/state.hpp"

#include <algorithm>
#include <map>

#include "state4/errors.hpp"

namespace state4 {

StateLayout StateLayout::from(const OrderedOrientedComplex& k, bool reverse) {
  const auto& c = k.complex();
  if (c.dimension() != 4 || !c.is_pure()) throw ValidationError("state sums need a pure 4-dimensional complex");
  StateLayout l;
  l.num_vertices = c.num_vertices();
  for (const auto& e : c.simplices(1)) l.edges.push_back({e[0], e[1]});
  for (const auto& t : c.simplices(2)) {
    l.triangles.push_back({t[0], t[1], t[2]});
    l.triangle_edges.push_back({c.index_of({t[0], t[1]}), c.index_of({t[1], t[2]}), c.index_of({t[0], t[2]})});
  }
  for (const auto& t : c.simplices(3)) {
    l.tets.push_back({t[0], t[1], t[2], t[3]});
    l.tet_triangles.push_back({c.index_of({t[0], t[1], t[2]}), c.index_of({t[0], t[1], t[3]}),
                               c.index_of({t[0], t[2], t[3]}), c.index_of({t[1], t[2], t[3]})});
  }
  std::vector<int> plus(l.tets.size()), minus(l.tets.size());
  const auto& facets = c.facets();
  for (size_t f = 0; f < facets.size(); ++f) {
    const auto& s = facets[f];
    l.facets.push_back({s[0], s[1], s[2], s[3], s[4]});
    std::array<int, 10> tris{};
    int idx = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        for (int d = b + 1; d < 5; ++d) tris[idx++] = c.index_of({s[a], s[b], s[d]});
    l.facet_triangles.push_back(tris);
    int sign = k.sign(static_cast<int>(f)) * (reverse ? -1 : 1);
    l.facet_sign.push_back(sign);
    std::array<std::pair<int, int>, 5> slots{};
    auto order = ten_j_index_order(sign);
    for (int i = 0; i < 5; ++i) {
      const auto& v = order[i].first;
      int tet = c.index_of({s[v[0]], s[v[1]], s[v[2]], s[v[3]]});
      slots[i] = {tet, order[i].second};
      (order[i].second > 0 ? plus : minus)[tet]++;
    }
    l.facet_slots.push_back(slots);
  }
  for (size_t t = 0; t < l.tets.size(); ++t) l.closed = l.closed && plus[t] == 1 && minus[t] == 1;
  return l;
}

void enumerate_states(const OrderedOrientedComplex& k, const Fusion2CatData& cat,
                      const std::function<void(const State&)>& visit) {
  StateLayout l = StateLayout::from(k);
  State s{std::vector<int>(l.edges.size(), -1), std::vector<int>(l.triangles.size(), -1)};
  // Triangles become decidable once their last edge is set.
  std::vector<std::vector<int>> ready(l.edges.size());
  for (size_t t = 0; t < l.triangles.size(); ++t) {
    const auto& e = l.triangle_edges[t];
    ready[*std::max_element(e.begin(), e.end())].push_back(static_cast<int>(t));
  }
  std::vector<int> order;  // triangles in assignment order
  for (const auto& r : ready) order.insert(order.end(), r.begin(), r.end());
  auto fusion_of = [&](int t) -> const std::vector<int>& {
    const auto& e = l.triangle_edges[t];
    return cat.fusion(s.edge_labels[e[0]], s.edge_labels[e[1]], s.edge_labels[e[2]]);
  };
  std::function<void(size_t)> tris = [&](size_t i) {
    if (i == order.size()) {
      visit(s);
      return;
    }
    for (int f : fusion_of(order[i])) {
      s.tri_labels[order[i]] = f;
      tris(i + 1);
    }
    s.tri_labels[order[i]] = -1;
  };
  std::function<void(size_t)> edges = [&](size_t e) {
    if (e == l.edges.size()) {
      tris(0);
      return;
    }
    for (int a = 0; a < cat.num_objects(); ++a) {
      s.edge_labels[e] = a;
      bool ok = true;
      for (int t : ready[e]) ok = ok && !fusion_of(t).empty();
      if (ok) edges(e + 1);
    }
    s.edge_labels[e] = -1;
  };
  edges(0);
}

Cyclotomic normalization(const StateLayout& l, const Fusion2CatData& cat, const State& s) {
  Cyclotomic v = cat.total_dimension().inverse().pow(l.num_vertices);
  for (int a : s.edge_labels) v *= cat.d(a).inverse();
  for (int f : s.tri_labels) v *= cat.morphisms[f].dim;
  return v;
}

Cyclotomic normalization(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const State& s) {
  return normalization(StateLayout::from(k), cat, s);
}

namespace {

TetraKey tet_key(const StateLayout& l, const State& s, int t) {
  const auto& tr = l.tet_triangles[t];
  return {s.tri_labels[tr[0]], s.tri_labels[tr[1]], s.tri_labels[tr[2]], s.tri_labels[tr[3]]};
}

TenJKey facet_key(const StateLayout& l, const State& s, int f) {
  TenJKey k{};
  for (int i = 0; i < 10; ++i) k[i] = s.tri_labels[l.facet_triangles[f][i]];
  return k;
}

int axis(int tet, int slot) { return 2 * tet + (slot > 0 ? 0 : 1); }

}  // namespace

ContractionPlan plan_contraction(const StateLayout& l, const std::vector<int>& tet_dims) {
  const int nf = static_cast<int>(l.facets.size());
  const int nt = static_cast<int>(l.tets.size());
  std::vector<int> group(nf);
  for (int f = 0; f < nf; ++f) group[f] = f;
  auto find = [&](int f) {
    while (group[f] != f) f = group[f] = group[group[f]];
    return f;
  };
  // Open axes (tet, slot) per group root.
  std::vector<std::vector<std::pair<int, int>>> open(nf);
  std::vector<std::vector<int>> holders(nt);  // facets holding each tet
  for (int f = 0; f < nf; ++f)
    for (const auto& [t, s] : l.facet_slots[f]) {
      open[f].emplace_back(t, s);
      holders[t].push_back(f);
    }
  std::vector<bool> done(nt, false);
  ContractionPlan plan;
  auto merged_axes = [&](int t) {
    std::vector<std::pair<int, int>> axes;
    std::vector<int> roots;
    for (int f : holders[t]) {
      int r = find(f);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    for (int r : roots) axes.insert(axes.end(), open[r].begin(), open[r].end());
    if (holders[t].size() == 2) {
      std::erase_if(axes, [&](const auto& a) { return a.first == t; });
    } else {
      // A single slot is turned into the copairing's other slot.
      for (auto& a : axes)
        if (a.first == t) a.second = -a.second;
    }
    return std::make_pair(axes, roots);
  };
  auto size_of = [&](const std::vector<std::pair<int, int>>& axes) {
    size_t s = 1;
    for (const auto& a : axes) s *= static_cast<size_t>(tet_dims[a.first]);
    return s;
  };
  for (int step = 0; step < nt; ++step) {
    int best = -1;
    size_t best_size = 0;
    for (int t = 0; t < nt; ++t) {
      if (done[t] || holders[t].empty()) continue;
      size_t sz = size_of(merged_axes(t).first);
      if (best < 0 || sz < best_size) best = t, best_size = sz;
    }
    if (best < 0) break;
    auto [axes, roots] = merged_axes(best);
    int root = roots[0];
    for (int r : roots) group[r] = root;
    for (size_t i = 1; i < roots.size(); ++i) open[roots[i]].clear();
    open[root] = axes;
    done[best] = true;
    plan.steps.push_back({best, static_cast<int>(axes.size()), best_size});
    plan.max_rank = std::max(plan.max_rank, static_cast<int>(axes.size()));
    plan.max_size = std::max(plan.max_size, best_size);
    plan.cost += best_size;
  }
  return plan;
}

Cyclotomic ten_j_action(const StateLayout& l, const Fusion2CatData& cat, const State& s) {
  if (!l.closed) throw ValidationError("every tetrahedron must lie in two facets with opposite slots");
  const int nt = static_cast<int>(l.tets.size());
  std::vector<int> dims(nt);
  for (int t = 0; t < nt; ++t) {
    dims[t] = cat.tetra_dim(tet_key(l, s, t));
    if (dims[t] == 0) return Cyclotomic();
  }
  if (cat.scalar_spaces()) {
    Cyclotomic v(1);
    for (int t = 0; t < nt; ++t) v *= cat.tetra_block(tet_key(l, s, t))->copairing[0][0];
    for (size_t f = 0; f < l.facets.size(); ++f) {
      const auto* e = cat.ten_j_entry(facet_key(l, s, static_cast<int>(f)));
      if (!e) throw IndexMismatch("missing 10j entry for an admissible 4-simplex");
      const auto& data = (*e)[l.facet_sign[f]];
      if (data.size() != 1) throw IndexMismatch("10j entry has the wrong size");
      v *= data[0];
    }
    return v;
  }
  std::vector<Tensor> pieces;
  for (size_t f = 0; f < l.facets.size(); ++f) {
    std::array<int, 5> axes{};
    for (int i = 0; i < 5; ++i) axes[i] = axis(l.facet_slots[f][i].first, l.facet_slots[f][i].second);
    pieces.push_back(ten_j_tensor(cat, facet_key(l, s, static_cast<int>(f)), l.facet_sign[f], axes));
  }
  auto plan = plan_contraction(l, dims);
  auto holder = [&](int ax) {
    for (size_t i = 0; i < pieces.size(); ++i)
      if (std::find(pieces[i].axes.begin(), pieces[i].axes.end(), ax) != pieces[i].axes.end()) return i;
    throw IndexMismatch("dangling tetrahedron index");
  };
  for (const auto& step : plan.steps) {
    const auto& c = cat.tetra_block(tet_key(l, s, step.tet))->copairing;
    int d = dims[step.tet];
    Tensor cop{{axis(step.tet, 1), axis(step.tet, -1)}, {d, d}, {}};
    for (const auto& row : c) cop.data.insert(cop.data.end(), row.begin(), row.end());
    size_t a = holder(axis(step.tet, 1));
    const auto& ax = pieces[a].axes;
    bool both = std::find(ax.begin(), ax.end(), axis(step.tet, -1)) != ax.end();
    Tensor merged = contract(pieces[a], cop);
    pieces.erase(pieces.begin() + static_cast<long>(a));
    if (both) {
      // Both slots sat in one tensor: contracting with the copairing is a trace.
      pieces.push_back(std::move(merged));
      continue;
    }
    size_t b = holder(axis(step.tet, -1));
    Tensor other = std::move(pieces[b]);
    pieces.erase(pieces.begin() + static_cast<long>(b));
    pieces.push_back(contract(merged, other));
  }
  Cyclotomic v(1);
  for (auto& p : pieces) {
    Tensor r = self_contract(p);
    if (r.rank() != 0) throw IndexMismatch("uncontracted indices remain");
    v *= r.data[0];
  }
  return v;
}

Cyclotomic ten_j_action(const OrderedOrientedComplex& k, const Fusion2CatData& cat, const State& s) {
  return ten_j_action(StateLayout::from(k), cat, s);
}

}  // namespace state4
