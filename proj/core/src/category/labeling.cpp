#include "category/labeling.hpp"

#include <algorithm>

namespace state4::detail {

LocalSimplex::LocalSimplex(int n) : n_(n), edge_id_(n + 1, std::vector<int>(n + 1, -1)), tri_id_(512, -1) {
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      edge_id_[i][j] = static_cast<int>(edges_.size());
      edges_.push_back({i, j});
      for (int k = j + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          tets_.push_back({i, j, k, l});
          for (int m = l + 1; m <= n; ++m) pents_.push_back({i, j, k, l, m});
        }
      }
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        tri_id_[(i * 8 + j) * 8 + k] = static_cast<int>(tris_.size());
        tris_.push_back({i, j, k});
      }
  std::sort(tets_.begin(), tets_.end());
  std::sort(pents_.begin(), pents_.end());
}

int LocalSimplex::tet(int i, int j, int k, int l) const {
  std::array<int, 4> t{i, j, k, l};
  return static_cast<int>(std::lower_bound(tets_.begin(), tets_.end(), t) - tets_.begin());
}

TetraKey tet_key(const LocalSimplex& s, const LocalLabels& l, const std::array<int, 4>& t) {
  return {l.tri[s.triangle(t[0], t[1], t[2])], l.tri[s.triangle(t[0], t[1], t[3])],
          l.tri[s.triangle(t[0], t[2], t[3])], l.tri[s.triangle(t[1], t[2], t[3])]};
}

TenJKey pent_key(const LocalSimplex& s, const LocalLabels& l, const std::array<int, 5>& p) {
  TenJKey k{};
  int idx = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) k[idx++] = l.tri[s.triangle(p[a], p[b], p[c])];
  return k;
}

namespace {

struct Enumerator {
  const Fusion2CatData& cat;
  const LocalSimplex& s;
  LocalLabels& lab;
  std::vector<std::pair<int, int>> order;  // (0 edge / 1 triangle, id)
  std::vector<std::vector<int>> tris_after_edge;  // in-scope triangles to check after an edge step
  std::vector<std::vector<int>> tets_after_tri;
  const std::function<bool()>& visit;

  bool triangle_ok(int t) const {
    const auto& v = s.triangles()[t];
    int a = lab.edge[s.edge(v[0], v[1])], b = lab.edge[s.edge(v[1], v[2])], c = lab.edge[s.edge(v[0], v[2])];
    if (a < 0 || b < 0 || c < 0) return true;
    if (lab.tri[t] >= 0) {
      const auto& f = cat.morphisms[lab.tri[t]];
      return f.left == a && f.right == b && f.target == c;
    }
    return !cat.fusion(a, b, c).empty();
  }

  bool tet_ok(int t) const {
    const auto& v = s.tets()[t];
    auto key = tet_key(s, lab, v);
    for (int x : key)
      if (x < 0) return true;
    return cat.tetra_dim(key) > 0;
  }

  bool run(size_t pos) {
    if (pos == order.size()) return visit();
    auto [kind, id] = order[pos];
    if (kind == 0) {
      for (int obj = 0; obj < cat.num_objects(); ++obj) {
        lab.edge[id] = obj;
        bool ok = true;
        for (int t : tris_after_edge[pos]) ok = ok && triangle_ok(t);
        if (ok && !run(pos + 1)) {
          lab.edge[id] = -1;
          return false;
        }
      }
      lab.edge[id] = -1;
    } else {
      const auto& v = s.triangles()[id];
      const auto& list = cat.fusion(lab.edge[s.edge(v[0], v[1])], lab.edge[s.edge(v[1], v[2])],
                                    lab.edge[s.edge(v[0], v[2])]);
      for (int f : list) {
        lab.tri[id] = f;
        bool ok = true;
        for (int t : tets_after_tri[pos]) ok = ok && tet_ok(t);
        if (ok && !run(pos + 1)) {
          lab.tri[id] = -1;
          return false;
        }
      }
      lab.tri[id] = -1;
    }
    return true;
  }
};

}  // namespace

bool enumerate_labels(const Fusion2CatData& cat, const LocalSimplex& s, LocalLabels& labels,
                      const std::vector<int>& free_edges, const std::vector<int>& free_tris,
                      const std::vector<int>& scope_tris, const std::vector<int>& scope_tets,
                      const std::function<bool()>& visit) {
  Enumerator e{cat, s, labels, {}, {}, {}, visit};
  std::vector<bool> edge_set(s.edges().size()), tri_set(s.triangles().size());
  for (size_t i = 0; i < edge_set.size(); ++i) edge_set[i] = labels.edge[i] >= 0;
  for (size_t i = 0; i < tri_set.size(); ++i) tri_set[i] = labels.tri[i] >= 0;
  std::vector<int> pending(free_tris);
  auto place_ready_triangles = [&] {
    for (auto it = pending.begin(); it != pending.end();) {
      const auto& v = s.triangles()[*it];
      if (edge_set[s.edge(v[0], v[1])] && edge_set[s.edge(v[1], v[2])] && edge_set[s.edge(v[0], v[2])]) {
        e.order.emplace_back(1, *it);
        tri_set[*it] = true;
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  };
  place_ready_triangles();
  for (int ed : free_edges) {
    e.order.emplace_back(0, ed);
    edge_set[ed] = true;
    place_ready_triangles();
  }
  // Checks attach to the step that completes them.
  std::vector<bool> edge_done(s.edges().size()), tri_done(s.triangles().size());
  for (size_t i = 0; i < edge_done.size(); ++i) edge_done[i] = labels.edge[i] >= 0;
  for (size_t i = 0; i < tri_done.size(); ++i) tri_done[i] = labels.tri[i] >= 0;
  e.tris_after_edge.resize(e.order.size());
  e.tets_after_tri.resize(e.order.size());
  for (size_t pos = 0; pos < e.order.size(); ++pos) {
    auto [kind, id] = e.order[pos];
    if (kind == 0) {
      edge_done[id] = true;
      for (int t : scope_tris) {
        const auto& v = s.triangles()[t];
        int es[3] = {s.edge(v[0], v[1]), s.edge(v[1], v[2]), s.edge(v[0], v[2])};
        if ((es[0] == id || es[1] == id || es[2] == id) && edge_done[es[0]] && edge_done[es[1]] && edge_done[es[2]])
          e.tris_after_edge[pos].push_back(t);
      }
    } else {
      tri_done[id] = true;
      for (int t : scope_tets) {
        const auto& v = s.tets()[t];
        int ts[4] = {s.triangle(v[0], v[1], v[2]), s.triangle(v[0], v[1], v[3]), s.triangle(v[0], v[2], v[3]),
                     s.triangle(v[1], v[2], v[3])};
        bool touches = ts[0] == id || ts[1] == id || ts[2] == id || ts[3] == id;
        if (touches && tri_done[ts[0]] && tri_done[ts[1]] && tri_done[ts[2]] && tri_done[ts[3]])
          e.tets_after_tri[pos].push_back(t);
      }
    }
  }
  // Fixed data must already be consistent.
  for (int t : scope_tris)
    if (!e.triangle_ok(t)) return true;
  for (int t : scope_tets)
    if (!e.tet_ok(t)) return true;
  return e.run(0);
}

}  // namespace state4::detail
