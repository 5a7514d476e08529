#include "state4/category/fusion2cat.hpp"

#include <algorithm>

#include "state4/errors.hpp"

namespace state4 {

namespace {

bool tetra_consistent(const Fusion2CatData& cat, const TetraKey& k) {
  const auto& m = cat.morphisms;
  for (int x : k)
    if (x < 0 || x >= static_cast<int>(m.size())) return false;
  const auto &f012 = m[k[0]], &f013 = m[k[1]], &f023 = m[k[2]], &f123 = m[k[3]];
  return f013.left == f012.left && f023.left == f012.target && f023.target == f013.target &&
         f123.left == f012.right && f123.right == f023.right && f123.target == f013.right;
}

std::string key_text(const Fusion2CatData& cat, const int* k, int n) {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += (k[i] >= 0 && k[i] < static_cast<int>(cat.morphisms.size())) ? cat.morphisms[k[i]].name : "?";
  }
  return s + "]";
}

}  // namespace

int local_triangle(int p, int q, int r) {
  struct Table {
    int v[5][5][5] = {};
    Table() {
      int idx = 0;
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
          for (int c = b + 1; c < 5; ++c) v[a][b][c] = idx++;
    }
  };
  static const Table table;
  return table.v[p][q][r];
}

TetraKey face_key(const TenJKey& m, const std::array<int, 4>& v) {
  return {m[local_triangle(v[0], v[1], v[2])], m[local_triangle(v[0], v[1], v[3])],
          m[local_triangle(v[0], v[2], v[3])], m[local_triangle(v[1], v[2], v[3])]};
}

std::array<TenJSlot, 5> ten_j_index_order(int sign) {
  if (sign > 0)
    return {{{{0, 1, 2, 3}, 1}, {{0, 1, 3, 4}, 1}, {{1, 2, 3, 4}, 1}, {{0, 1, 2, 4}, -1}, {{0, 2, 3, 4}, -1}}};
  return {{{{0, 2, 3, 4}, 1}, {{0, 1, 2, 4}, 1}, {{1, 2, 3, 4}, -1}, {{0, 1, 3, 4}, -1}, {{0, 1, 2, 3}, -1}}};
}

void Fusion2CatData::build() {
  n_ = num_objects();
  if (static_cast<int>(dim_obj.size()) != n_ || static_cast<int>(dim_end.size()) != n_)
    throw ValidationError("dim_obj and dim_end need one entry per object");
  fusion_.assign(static_cast<size_t>(n_) * n_ * n_, {});
  targets_.assign(static_cast<size_t>(n_) * n_, {});
  middles_.assign(static_cast<size_t>(n_) * n_, {});
  lefts_.assign(static_cast<size_t>(n_) * n_, {});
  for (int i = 0; i < static_cast<int>(morphisms.size()); ++i) {
    const auto& f = morphisms[i];
    for (int o : {f.left, f.right, f.target})
      if (o < 0 || o >= n_) throw ValidationError("morphism " + f.name + " names an unknown object");
    fusion_[(f.left * n_ + f.right) * n_ + f.target].push_back(i);
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (!fusion(a, b, c).empty()) {
          targets_[a * n_ + b].push_back(c);
          middles_[a * n_ + c].push_back(b);
          lefts_[b * n_ + c].push_back(a);
        }

  component_of_.assign(n_, -1);
  for (int c = 0; c < static_cast<int>(components.size()); ++c)
    for (int a : components[c]) {
      if (a < 0 || a >= n_ || component_of_[a] >= 0)
        throw ValidationError("components must partition the objects");
      component_of_[a] = c;
    }
  for (int a = 0; a < n_; ++a)
    if (component_of_[a] < 0) throw ValidationError("object " + objects[a] + " lies in no component");

  d_.clear();
  for (int a = 0; a < n_; ++a) d_.push_back(dim_obj[a] * dim_end[a] * Cyclotomic(component_size(a)));
  total_dim_ = Cyclotomic();
  for (const auto& comp : components)
    if (!comp.empty() && !dim_end[comp[0]].is_zero()) total_dim_ += dim_end[comp[0]].inverse();

  max_tetra_dim_ = 0;
  for (auto& [key, block] : tetra) {
    if (static_cast<int>(block.pairing.size()) != block.dim)
      throw ValidationError("pairing of " + key_text(*this, key.data(), 4) + " does not match its dimension");
    block.copairing = invert(block.pairing);
    max_tetra_dim_ = std::max(max_tetra_dim_, block.dim);
  }
}

int Fusion2CatData::object_index(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  return it == objects.end() ? -1 : static_cast<int>(it - objects.begin());
}

int Fusion2CatData::morphism_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(morphisms.size()); ++i)
    if (morphisms[i].name == name) return i;
  return -1;
}

namespace {

bool same_tables(const Fusion2CatData& a, const Fusion2CatData& b) {
  if (a.components != b.components || a.dim_obj != b.dim_obj || a.dim_end != b.dim_end || a.unit != b.unit ||
      a.canonical_bases != b.canonical_bases || a.morphisms.size() != b.morphisms.size() ||
      a.tetra.size() != b.tetra.size() || a.ten_j.size() != b.ten_j.size())
    return false;
  for (size_t i = 0; i < a.morphisms.size(); ++i) {
    const auto &x = a.morphisms[i], &y = b.morphisms[i];
    if (x.left != y.left || x.right != y.right || x.target != y.target || !(x.dim == y.dim)) return false;
  }
  for (const auto& [k, blk] : a.tetra) {
    auto it = b.tetra.find(k);
    if (it == b.tetra.end() || it->second.dim != blk.dim || it->second.pairing != blk.pairing) return false;
  }
  for (const auto& [k, e] : a.ten_j) {
    auto it = b.ten_j.find(k);
    if (it == b.ten_j.end() || it->second.plus != e.plus || it->second.minus != e.minus) return false;
  }
  if (a.labels.has_value() != b.labels.has_value()) return false;
  if (a.labels && (a.labels->object_grade != b.labels->object_grade ||
                   a.labels->morphism_label != b.labels->morphism_label ||
                   a.labels->G.table() != b.labels->G.table() || a.labels->A.table() != b.labels->A.table()))
    return false;
  return true;
}

}  // namespace

bool operator==(const Fusion2CatData& a, const Fusion2CatData& b) {
  if (a.objects != b.objects) return false;
  for (size_t i = 0; i < a.morphisms.size() && i < b.morphisms.size(); ++i)
    if (a.morphisms[i].name != b.morphisms[i].name) return false;
  if (a.labels && b.labels && !(*a.labels == *b.labels)) return false;
  return same_tables(a, b);
}

bool same_data_ignoring_names(const Fusion2CatData& a, const Fusion2CatData& b) {
  return a.objects.size() == b.objects.size() && same_tables(a, b);
}

Matrix copairing(const Fusion2CatData& cat, const TetraKey& k) {
  const auto* b = cat.tetra_block(k);
  if (!b) throw SingularPairing("tetra space " + key_text(cat, k.data(), 4) + " is 0-dimensional");
  return invert(b->pairing);
}

Tensor ten_j_tensor(const Fusion2CatData& cat, const TenJKey& m, int sign, const std::array<int, 5>& axes) {
  Tensor t;
  auto order = ten_j_index_order(sign);
  for (int s = 0; s < 5; ++s) {
    int d = cat.tetra_dim(face_key(m, order[s].first));
    if (d == 0) return Tensor{{axes.begin(), axes.end()}, {0, 0, 0, 0, 0}, {}};
    t.axes.push_back(axes[s]);
    t.dims.push_back(d);
  }
  const auto* e = cat.ten_j_entry(m);
  if (!e) throw IndexMismatch("missing 10j entry for " + key_text(cat, m.data(), 10));
  t.data = (*e)[sign];
  if (t.data.size() != t.size()) throw IndexMismatch("10j entry for " + key_text(cat, m.data(), 10) +
                                                     " does not match the tetra space dimensions");
  return t;
}

CategoryReport validate_category(const Fusion2CatData& cat) {
  CategoryReport r;
  auto fail = [&](std::string msg) {
    r.pass = false;
    r.violations.push_back(std::move(msg));
  };
  for (int a = 0; a < cat.num_objects(); ++a)
    if (cat.d(a).is_zero()) fail("d(" + cat.objects[a] + ") = 0");
  for (const auto& f : cat.morphisms)
    if (f.dim.is_zero()) fail("dim(" + f.name + ") = 0");
  if (cat.total_dimension().is_zero()) fail("dim(C) = 0");
  for (const auto& comp : cat.components)
    for (int a : comp)
      if (!(cat.dim_end[a] == cat.dim_end[comp[0]]))
        fail("dim(End) differs inside the component of " + cat.objects[a]);
  for (const auto& [k, b] : cat.tetra) {
    if (!tetra_consistent(cat, k)) fail("tetra key " + key_text(cat, k.data(), 4) + " has mismatched edges");
    if (b.dim <= 0) fail("tetra key " + key_text(cat, k.data(), 4) + " lists a nonpositive dimension");
    try {
      (void)invert(b.pairing);
    } catch (const SingularPairing&) {
      fail("pairing of " + key_text(cat, k.data(), 4) + " is not invertible");
    }
  }
  for (const auto& [m, e] : cat.ten_j) {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) {
      std::array<int, 4> v{};
      for (int j = 0, w = 0; j < 5; ++j)
        if (j != i) v[w++] = j;
      ok = tetra_consistent(cat, face_key(m, v));
    }
    if (!ok) {
      fail("10j key " + key_text(cat, m.data(), 10) + " has mismatched edges");
      continue;
    }
    for (int sign : {1, -1}) {
      size_t expect = 1;
      for (const auto& slot : ten_j_index_order(sign)) expect *= cat.tetra_dim(face_key(m, slot.first));
      if (expect != 0 && e[sign].size() != expect)
        fail("10j entry " + key_text(cat, m.data(), 10) + " has the wrong shape");
    }
  }
  if (cat.labels) {
    const auto& l = *cat.labels;
    if (static_cast<int>(l.object_grade.size()) != cat.num_objects() || l.morphism_label.size() != cat.morphisms.size())
      fail("group labels do not cover every object and morphism");
    else if (!l.A.is_abelian())
      fail("morphism label group is not abelian");
  }
  return r;
}

}  // namespace state4
