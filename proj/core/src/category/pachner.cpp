#include "state4/category/pachner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "category/labeling.hpp"
#include "state4/errors.hpp"

namespace state4 {

using detail::LocalLabels;
using detail::LocalSimplex;

namespace {

Tensor copairing_tensor(const Fusion2CatData& cat, const TetraKey& k, int plus_axis, int minus_axis) {
  Matrix c = copairing(cat, k);
  int d = static_cast<int>(c.size());
  Tensor t{{plus_axis, minus_axis}, {d, d}, {}};
  t.data.reserve(static_cast<size_t>(d) * d);
  for (const auto& row : c)
    for (const auto& v : row) t.data.push_back(v);
  return t;
}

Matrix to_matrix(const Tensor& t, int row_axes) {
  size_t rows = 1, cols = 1;
  for (int i = 0; i < t.rank(); ++i) (i < row_axes ? rows : cols) *= static_cast<size_t>(t.dims[i]);
  Matrix m(rows, std::vector<Cyclotomic>(cols));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m[r][c] = t.data[r * cols + c];
  return m;
}

// Contracts a network, always pulling in the tensor that shares the most
// axes with the running product.
Tensor contract_all(std::vector<Tensor> ts) {
  Tensor cur = std::move(ts.front());
  ts.erase(ts.begin());
  while (!ts.empty()) {
    size_t best = 0;
    int best_shared = -1;
    for (size_t i = 0; i < ts.size(); ++i) {
      int shared = 0;
      for (int a : ts[i].axes) shared += std::count(cur.axes.begin(), cur.axes.end(), a) > 0;
      if (shared > best_shared) best = i, best_shared = shared;
    }
    cur = contract(cur, ts[best]);
    ts.erase(ts.begin() + static_cast<long>(best));
  }
  return cur;
}

// Axis label of a tetrahedron slot.
int axis(int tet, int slot_sign) { return tet * 2 + (slot_sign > 0 ? 0 : 1); }

Matrix local_map(const Fusion2CatData& cat, const TenJKey& m, int sign) {
  // The − slots are turned into V⁺ outputs by copairings; the + slots stay
  // inputs. Z₊ lists outputs 0234, 0124 and inputs 0123, 0134, 1234; Z₋ the
  // reverse.
  auto code = [](const std::array<int, 4>& v) { return (v[0] * 5 + v[1]) * 25 + v[2] * 5 + v[3]; };
  const auto slots = ten_j_index_order(sign);
  size_t rows = 1, cols = 1;
  for (const auto& [v, s] : slots) (s < 0 ? rows : cols) *= static_cast<size_t>(cat.tetra_dim(face_key(m, v)));
  if (rows == 0 || cols == 0) return Matrix(rows, std::vector<Cyclotomic>(cols));
  std::array<int, 5> axes{};
  for (int k = 0; k < 5; ++k) axes[k] = code(slots[k].first);
  std::vector<Tensor> net{ten_j_tensor(cat, m, sign, axes)};
  std::vector<int> row_axes, col_axes;
  for (const auto& [v, s] : slots) {
    if (s < 0) {
      net.push_back(copairing_tensor(cat, face_key(m, v), code(v) + 1000, code(v)));
      row_axes.push_back(code(v) + 1000);
    } else {
      col_axes.push_back(code(v));
    }
  }
  std::sort(row_axes.begin(), row_axes.end());
  std::sort(col_axes.begin(), col_axes.end());
  if (sign > 0) std::reverse(row_axes.begin(), row_axes.end());
  else std::reverse(col_axes.begin(), col_axes.end());
  std::vector<int> order = row_axes;
  order.insert(order.end(), col_axes.begin(), col_axes.end());
  Tensor t = transpose(contract_all(std::move(net)), order);
  return to_matrix(t, static_cast<int>(row_axes.size()));
}

}  // namespace

Matrix z_plus(const Fusion2CatData& cat, const TenJKey& m) { return local_map(cat, m, 1); }
Matrix z_minus(const Fusion2CatData& cat, const TenJKey& m) { return local_map(cat, m, -1); }

namespace {

struct Side {
  std::vector<int> omitted;                 // facet opposite vertex i
  std::vector<int> interior_vertices, interior_edges, interior_tris, interior_tets;
  std::vector<int> tris, tets;              // every simplex of the side
};

struct Shape {
  int p;
  LocalSimplex s{5};
  Side side[2];
  std::vector<int> boundary_edges, boundary_tris, boundary_tets;
  std::vector<int> boundary_axes;           // canonical output order
  std::vector<int> boundary_signs;          // slot sign per boundary tet

  explicit Shape(int p_) : p(p_) {
    static const std::vector<int> kI[] = {{4}, {4, 2}, {4, 2, 0}};
    if (p < 1 || p > 3) throw ValidationError("Pachner move must be (1,5), (2,4) or (3,3)");
    side[0].omitted = kI[p - 1];
    for (int i = 0; i < 6; ++i)
      if (std::find(side[0].omitted.begin(), side[0].omitted.end(), i) == side[0].omitted.end())
        side[1].omitted.push_back(i);
    std::vector<std::vector<bool>> in(2);
    std::vector<std::vector<bool>> v_in(2, std::vector<bool>(6)), e_in(2, std::vector<bool>(15)),
        t_in(2, std::vector<bool>(20)), k_in(2, std::vector<bool>(15));
    for (int sd = 0; sd < 2; ++sd)
      for (int o : side[sd].omitted) {
        std::vector<int> f;
        for (int v = 0; v < 6; ++v)
          if (v != o) f.push_back(v);
        for (int a : f) v_in[sd][a] = true;
        for (size_t a = 0; a < 5; ++a)
          for (size_t b = a + 1; b < 5; ++b) {
            e_in[sd][s.edge(f[a], f[b])] = true;
            for (size_t c = b + 1; c < 5; ++c) {
              t_in[sd][s.triangle(f[a], f[b], f[c])] = true;
              for (size_t d = c + 1; d < 5; ++d) k_in[sd][s.tet(f[a], f[b], f[c], f[d])] = true;
            }
          }
      }
    for (int sd = 0; sd < 2; ++sd) {
      auto& S = side[sd];
      for (int v = 0; v < 6; ++v)
        if (v_in[sd][v] && !v_in[1 - sd][v]) S.interior_vertices.push_back(v);
      for (int e = 0; e < 15; ++e)
        if (e_in[sd][e] && !e_in[1 - sd][e]) S.interior_edges.push_back(e);
      for (int t = 0; t < 20; ++t) {
        if (t_in[sd][t]) S.tris.push_back(t);
        if (t_in[sd][t] && !t_in[1 - sd][t]) S.interior_tris.push_back(t);
      }
      for (int t = 0; t < 15; ++t) {
        if (k_in[sd][t]) S.tets.push_back(t);
        if (k_in[sd][t] && !k_in[1 - sd][t]) S.interior_tets.push_back(t);
      }
    }
    for (int e = 0; e < 15; ++e)
      if (e_in[0][e] && e_in[1][e]) boundary_edges.push_back(e);
    for (int t = 0; t < 20; ++t)
      if (t_in[0][t] && t_in[1][t]) boundary_tris.push_back(t);
    for (int t = 0; t < 15; ++t)
      if (k_in[0][t] && k_in[1][t]) boundary_tets.push_back(t);
    boundary_signs.assign(boundary_tets.size(), 0);
    for (int sd = 0; sd < 2; ++sd)
      for (int o : side[sd].omitted)
        for (const auto& [tet, slot] : slots(sd, o)) {
          auto it = std::find(boundary_tets.begin(), boundary_tets.end(), tet);
          if (it == boundary_tets.end()) continue;
          int& sgn = boundary_signs[it - boundary_tets.begin()];
          if (sgn != 0 && sgn != slot) throw std::logic_error("boundary slot signs disagree");
          sgn = slot;
        }
    for (size_t i = 0; i < boundary_tets.size(); ++i) boundary_axes.push_back(axis(boundary_tets[i], boundary_signs[i]));
  }

  int facet_sign(int sd, int omitted) const {
    int parity = omitted % 2 ? -1 : 1;
    return sd == 0 ? parity : -parity;
  }

  std::array<int, 5> facet(int omitted) const {
    std::array<int, 5> f{};
    int k = 0;
    for (int v = 0; v < 6; ++v)
      if (v != omitted) f[k++] = v;
    return f;
  }

  // (global tet, slot sign) per 10j slot of the facet.
  std::vector<std::pair<int, int>> slots(int sd, int omitted) const {
    auto f = facet(omitted);
    std::vector<std::pair<int, int>> out;
    for (const auto& [v, sg] : ten_j_index_order(facet_sign(sd, omitted)))
      out.emplace_back(s.tet(f[v[0]], f[v[1]], f[v[2]], f[v[3]]), sg);
    return out;
  }
};

std::string label_text(const Fusion2CatData& cat, const LocalSimplex& s, const LocalLabels& lab,
                       const std::vector<int>& edges, const std::vector<int>& tris) {
  std::ostringstream os;
  bool first = true;
  for (int e : edges) {
    const auto& v = s.edges()[e];
    os << (first ? "" : " ") << v[0] << v[1] << "=" << cat.objects[lab.edge[e]];
    first = false;
  }
  for (int t : tris) {
    const auto& v = s.triangles()[t];
    os << " " << v[0] << v[1] << v[2] << "=" << cat.morphisms[lab.tri[t]].name;
  }
  return os.str();
}

std::string tensor_text(const Tensor& t) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < t.data.size(); ++i) os << (i ? ", " : "") << t.data[i].to_string();
  os << "]";
  return os.str();
}

// Σ over interior labels of the normalized contraction of one side.
Tensor side_value(const Fusion2CatData& cat, const Shape& sh, int sd, LocalLabels& lab) {
  const Side& S = sh.side[sd];
  Tensor total{sh.boundary_axes, {}, {}};
  for (int t : sh.boundary_tets) total.dims.push_back(cat.tetra_dim(detail::tet_key(sh.s, lab, sh.s.tets()[t])));
  total.data.assign(total.size(), Cyclotomic());
  Cyclotomic vertex_factor(1);
  for (size_t i = 0; i < S.interior_vertices.size(); ++i) vertex_factor *= cat.total_dimension().inverse();
  detail::enumerate_labels(cat, sh.s, lab, S.interior_edges, S.interior_tris, S.tris, S.tets, [&] {
    Cyclotomic w = vertex_factor;
    for (int e : S.interior_edges) w *= cat.d(lab.edge[e]).inverse();
    for (int t : S.interior_tris) w *= cat.morphisms[lab.tri[t]].dim;
    if (cat.scalar_spaces()) {
      for (int o : S.omitted) {
        const auto* e = cat.ten_j_entry(detail::pent_key(sh.s, lab, sh.facet(o)));
        if (!e) throw IndexMismatch("missing 10j entry");
        w *= e->operator[](sh.facet_sign(sd, o))[0];
      }
      for (int t : S.interior_tets)
        w *= cat.tetra_block(detail::tet_key(sh.s, lab, sh.s.tets()[t]))->copairing[0][0];
      total.data[0] += w;
      return true;
    }
    std::vector<Tensor> net;
    for (int o : S.omitted) {
      auto f = sh.facet(o);
      auto sl = sh.slots(sd, o);
      std::array<int, 5> axes{};
      for (int i = 0; i < 5; ++i) axes[i] = axis(sl[i].first, sl[i].second);
      net.push_back(ten_j_tensor(cat, detail::pent_key(sh.s, lab, f), sh.facet_sign(sd, o), axes));
    }
    for (int t : S.interior_tets)
      net.push_back(copairing_tensor(cat, detail::tet_key(sh.s, lab, sh.s.tets()[t]), axis(t, 1), axis(t, -1)));
    Tensor v = transpose(contract_all(std::move(net)), sh.boundary_axes);
    total = add(std::move(total), scale(std::move(v), w));
    return true;
  });
  return total;
}

LocalLabels empty_labels(const LocalSimplex& s) {
  return {std::vector<int>(s.edges().size(), -1), std::vector<int>(s.triangles().size(), -1)};
}

BoundaryLabeling to_map(const Shape& sh, const LocalLabels& lab) {
  BoundaryLabeling b;
  for (int e : sh.boundary_edges) {
    const auto& v = sh.s.edges()[e];
    b[{v[0], v[1]}] = lab.edge[e];
  }
  for (int t : sh.boundary_tris) {
    const auto& v = sh.s.triangles()[t];
    b[{v[0], v[1], v[2]}] = lab.tri[t];
  }
  return b;
}

// Returns false on failure and fills the report.
bool compare_sides(const Fusion2CatData& cat, const Shape& sh, LocalLabels& lab, PachnerReport& rep) {
  ++rep.labelings;
  Tensor zi = side_value(cat, sh, 0, lab);
  Tensor zj = side_value(cat, sh, 1, lab);
  if (zi == zj) return true;
  rep.pass = false;
  rep.failing = to_map(sh, lab);
  rep.witness = label_text(cat, sh.s, lab, sh.boundary_edges, sh.boundary_tris) + "; Z_I = " + tensor_text(zi) +
                ", Z_J = " + tensor_text(zj);
  return false;
}

std::string move_name(int p) { return "(" + std::to_string(p) + "," + std::to_string(6 - p) + ")"; }

}  // namespace

std::vector<std::vector<int>> pachner_boundary(int p) {
  Shape sh(p);
  std::vector<std::vector<int>> out;
  for (int e : sh.boundary_edges) out.push_back({sh.s.edges()[e][0], sh.s.edges()[e][1]});
  for (int t : sh.boundary_tris) {
    const auto& v = sh.s.triangles()[t];
    out.push_back({v[0], v[1], v[2]});
  }
  return out;
}

PachnerReport check_pachner(const Fusion2CatData& cat, int p, const BoundaryLabeling& boundary) {
  Shape sh(p);
  PachnerReport rep;
  rep.check = move_name(p);
  LocalLabels lab = empty_labels(sh.s);
  for (int e : sh.boundary_edges) {
    const auto& v = sh.s.edges()[e];
    auto it = boundary.find({v[0], v[1]});
    if (it == boundary.end()) throw ValidationError("boundary labeling misses an edge");
    if (it->second < 0 || it->second >= cat.num_objects()) throw ValidationError("edge label out of range");
    lab.edge[e] = it->second;
  }
  for (int t : sh.boundary_tris) {
    const auto& v = sh.s.triangles()[t];
    auto it = boundary.find({v[0], v[1], v[2]});
    if (it == boundary.end()) throw ValidationError("boundary labeling misses a triangle");
    if (it->second < 0 || it->second >= static_cast<int>(cat.morphisms.size()))
      throw ValidationError("triangle label out of range");
    lab.tri[t] = it->second;
  }
  // Inadmissible boundary data makes both sides vanish.
  bool admissible = false;
  detail::enumerate_labels(cat, sh.s, lab, {}, {}, sh.boundary_tris, sh.boundary_tets, [&] {
    admissible = true;
    return true;
  });
  if (admissible) compare_sides(cat, sh, lab, rep);
  else ++rep.labelings;
  return rep;
}

PachnerReport check_pachner_exhaustive(const Fusion2CatData& cat, int p, long budget) {
  Shape sh(p);
  PachnerReport rep;
  rep.check = move_name(p);
  LocalLabels lab = empty_labels(sh.s);
  detail::enumerate_labels(cat, sh.s, lab, sh.boundary_edges, sh.boundary_tris, sh.boundary_tris, sh.boundary_tets,
                           [&] {
                             if (budget > 0 && rep.labelings >= budget) {
                               rep.complete = false;
                               return false;
                             }
                             return compare_sides(cat, sh, lab, rep);
                           });
  return rep;
}

PachnerReport check_section(const Fusion2CatData& cat, long budget) {
  LocalSimplex s(4);
  PachnerReport rep;
  rep.check = "section";
  LocalLabels lab = empty_labels(s);
  const int e13 = s.edge(1, 3);
  const int t013 = s.triangle(0, 1, 3), t123 = s.triangle(1, 2, 3), t134 = s.triangle(1, 3, 4),
            t024 = s.triangle(0, 2, 4);
  std::vector<int> frame_edges, frame_tris;
  for (int e = 0; e < static_cast<int>(s.edges().size()); ++e)
    if (e != e13) frame_edges.push_back(e);
  for (int t = 0; t < static_cast<int>(s.triangles().size()); ++t)
    if (t != t013 && t != t123 && t != t134 && t != t024) frame_tris.push_back(t);
  const std::vector<int> inner_tris{t013, t123, t134};
  const std::vector<int> inner_tets{s.tet(0, 1, 2, 3), s.tet(0, 1, 3, 4), s.tet(1, 2, 3, 4)};
  const int k0234 = s.tet(0, 2, 3, 4), k0124 = s.tet(0, 1, 2, 4);

  detail::enumerate_labels(cat, s, lab, frame_edges, frame_tris, frame_tris, {}, [&] {
    if (budget > 0 && rep.labelings >= budget) {
      rep.complete = false;
      return false;
    }
    std::vector<int> outer;
    for (int r : cat.fusion(lab.edge[s.edge(0, 2)], lab.edge[s.edge(2, 4)], lab.edge[s.edge(0, 4)])) {
      lab.tri[t024] = r;
      if (cat.tetra_dim(detail::tet_key(s, lab, s.tets()[k0234])) > 0 &&
          cat.tetra_dim(detail::tet_key(s, lab, s.tets()[k0124])) > 0)
        outer.push_back(r);
    }
    lab.tri[t024] = -1;
    if (outer.empty()) return true;
    ++rep.labelings;
    const size_t n = outer.size();
    std::vector<std::vector<Matrix>> sum(n, std::vector<Matrix>(n));
    std::vector<size_t> block(n);
    for (size_t i = 0; i < n; ++i) {
      lab.tri[t024] = outer[i];
      block[i] = static_cast<size_t>(cat.tetra_dim(detail::tet_key(s, lab, s.tets()[k0234])) *
                                     cat.tetra_dim(detail::tet_key(s, lab, s.tets()[k0124])));
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) sum[i][j].assign(block[i], std::vector<Cyclotomic>(block[j]));
    lab.tri[t024] = -1;
    detail::enumerate_labels(cat, s, lab, {e13}, inner_tris, inner_tris, inner_tets, [&] {
      Cyclotomic norm = cat.morphisms[lab.tri[t013]].dim * cat.morphisms[lab.tri[t123]].dim *
                        cat.morphisms[lab.tri[t134]].dim * cat.d(lab.edge[e13]).inverse();
      std::vector<Matrix> zp(n), zm(n);
      for (size_t i = 0; i < n; ++i) {
        lab.tri[t024] = outer[i];
        auto key = detail::pent_key(s, lab, s.pents()[0]);
        zp[i] = z_plus(cat, key);
        for (auto& row : zp[i])
          for (auto& v : row) v *= cat.morphisms[outer[i]].dim;
        zm[i] = z_minus(cat, key);
        for (auto& row : zm[i])
          for (auto& v : row) v *= norm;
      }
      lab.tri[t024] = -1;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          Matrix prod = matmul(zp[i], zm[j]);
          for (size_t r = 0; r < block[i]; ++r)
            for (size_t c = 0; c < block[j]; ++c) sum[i][j][r][c] += prod[r][c];
        }
      return true;
    });
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < block[i]; ++r)
          for (size_t c = 0; c < block[j]; ++c) {
            Cyclotomic want(i == j && r == c ? 1 : 0);
            if (sum[i][j][r][c] == want) continue;
            rep.pass = false;
            lab.tri[t024] = outer[i];
            rep.witness = label_text(cat, s, lab, frame_edges, frame_tris) + "; block (" +
                          cat.morphisms[outer[i]].name + ", " + cat.morphisms[outer[j]].name + ") entry (" +
                          std::to_string(r) + "," + std::to_string(c) + ") = " + sum[i][j][r][c].to_string();
            lab.tri[t024] = -1;
            return false;
          }
    return true;
  });
  return rep;
}

}  // namespace state4
