#include "state4/category/tensor.hpp"

#include <algorithm>
#include <map>

#include "state4/errors.hpp"

namespace state4 {

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Cyclotomic>(n));
  for (int i = 0; i < n; ++i) m[i][i] = Cyclotomic(1);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix out(n, std::vector<Cyclotomic>(m));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw IndexMismatch("matrix shapes do not compose");
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

Matrix invert(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw SingularPairing("pairing matrix is not square");
  Matrix a = m, inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularPairing("pairing matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Cyclotomic s = a[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Cyclotomic f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

size_t Tensor::size() const {
  size_t s = 1;
  for (int d : dims) s *= d;
  return s;
}

const Cyclotomic& Tensor::at(const std::vector<int>& idx) const {
  size_t off = 0;
  for (size_t i = 0; i < dims.size(); ++i) off = off * dims[i] + idx[i];
  return data[off];
}

namespace {

std::vector<size_t> strides_of(const std::vector<int>& dims) {
  std::vector<size_t> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
  return s;
}

}  // namespace

Tensor contract(const Tensor& a, const Tensor& b) {
  // Classify axes.
  std::vector<int> a_free, b_free;
  std::vector<std::pair<int, int>> shared;
  for (int i = 0; i < a.rank(); ++i) {
    auto it = std::find(b.axes.begin(), b.axes.end(), a.axes[i]);
    if (it == b.axes.end()) {
      a_free.push_back(i);
    } else {
      int j = static_cast<int>(it - b.axes.begin());
      if (a.dims[i] != b.dims[j]) throw IndexMismatch("contracted axes have different dimensions");
      shared.emplace_back(i, j);
    }
  }
  for (int j = 0; j < b.rank(); ++j)
    if (std::find(a.axes.begin(), a.axes.end(), b.axes[j]) == a.axes.end()) b_free.push_back(j);

  Tensor out;
  for (int i : a_free) {
    out.axes.push_back(a.axes[i]);
    out.dims.push_back(a.dims[i]);
  }
  for (int j : b_free) {
    out.axes.push_back(b.axes[j]);
    out.dims.push_back(b.dims[j]);
  }
  out.data.assign(out.size(), Cyclotomic());
  auto sa = strides_of(a.dims), sb = strides_of(b.dims);
  std::vector<int> sdims;
  for (auto [i, j] : shared) sdims.push_back(a.dims[i]);

  std::vector<int> oi(out.rank(), 0);
  for (size_t o = 0; o < out.data.size(); ++o) {
    size_t abase = 0, bbase = 0;
    for (size_t k = 0; k < a_free.size(); ++k) abase += oi[k] * sa[a_free[k]];
    for (size_t k = 0; k < b_free.size(); ++k) bbase += oi[a_free.size() + k] * sb[b_free[k]];
    std::vector<int> si(shared.size(), 0);
    Cyclotomic acc;
    while (true) {
      size_t ao = abase, bo = bbase;
      for (size_t k = 0; k < shared.size(); ++k) {
        ao += si[k] * sa[shared[k].first];
        bo += si[k] * sb[shared[k].second];
      }
      if (!a.data[ao].is_zero() && !b.data[bo].is_zero()) acc += a.data[ao] * b.data[bo];
      int k = static_cast<int>(shared.size()) - 1;
      while (k >= 0 && ++si[k] == sdims[k]) si[k--] = 0;
      if (k < 0) break;
    }
    out.data[o] = std::move(acc);
    int k = out.rank() - 1;
    while (k >= 0 && ++oi[k] == out.dims[k]) oi[k--] = 0;
  }
  return out;
}

Tensor self_contract(const Tensor& a) {
  std::map<int, std::vector<int>> pos;
  for (int i = 0; i < a.rank(); ++i) pos[a.axes[i]].push_back(i);
  std::vector<int> keep;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [label, where] : pos) {
    if (where.size() == 1) {
      keep.push_back(where[0]);
    } else if (where.size() == 2) {
      if (a.dims[where[0]] != a.dims[where[1]]) throw IndexMismatch("traced axes have different dimensions");
      pairs.emplace_back(where[0], where[1]);
    } else {
      throw IndexMismatch("axis label used more than twice");
    }
  }
  if (pairs.empty()) return a;
  std::sort(keep.begin(), keep.end());
  Tensor out;
  for (int i : keep) {
    out.axes.push_back(a.axes[i]);
    out.dims.push_back(a.dims[i]);
  }
  out.data.assign(out.size(), Cyclotomic());
  std::vector<int> idx(a.rank(), 0);
  for (size_t off = 0; off < a.data.size(); ++off) {
    bool diag = true;
    for (auto [i, j] : pairs) diag = diag && idx[i] == idx[j];
    if (diag && !a.data[off].is_zero()) {
      size_t o = 0;
      for (int i : keep) o = o * a.dims[i] + idx[i];
      out.data[o] += a.data[off];
    }
    int k = a.rank() - 1;
    while (k >= 0 && ++idx[k] == a.dims[k]) idx[k--] = 0;
  }
  return out;
}

Tensor transpose(const Tensor& t, const std::vector<int>& order) {
  if (order == t.axes) return t;
  std::vector<int> perm;
  for (int label : order) {
    auto it = std::find(t.axes.begin(), t.axes.end(), label);
    if (it == t.axes.end()) throw IndexMismatch("transpose order names an unknown axis");
    perm.push_back(static_cast<int>(it - t.axes.begin()));
  }
  if (perm.size() != t.axes.size()) throw IndexMismatch("transpose order must list every axis");
  Tensor out;
  out.axes = order;
  for (int p : perm) out.dims.push_back(t.dims[p]);
  out.data.resize(t.size());
  auto st = strides_of(t.dims);
  std::vector<int> idx(out.rank(), 0);
  for (size_t o = 0; o < out.data.size(); ++o) {
    size_t src = 0;
    for (int k = 0; k < out.rank(); ++k) src += idx[k] * st[perm[k]];
    out.data[o] = t.data[src];
    int k = out.rank() - 1;
    while (k >= 0 && ++idx[k] == out.dims[k]) idx[k--] = 0;
  }
  return out;
}

Tensor scale(Tensor t, const Cyclotomic& s) {
  for (auto& v : t.data) v *= s;
  return t;
}

Tensor add(Tensor a, const Tensor& b) {
  if (a.axes != b.axes || a.dims != b.dims) throw IndexMismatch("added tensors have different shapes");
  for (size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
  return a;
}

}  // namespace state4
