#pragma once

#include <vector>

#include "state4/scalar/cyclotomic.hpp"

namespace state4 {

/// Dense square or rectangular matrix, row-major as nested vectors.
using Matrix = std::vector<std::vector<Cyclotomic>>;

Matrix identity_matrix(int n);
Matrix matmul(const Matrix& a, const Matrix& b);
/// Gauss-Jordan inverse. Throws SingularPairing when not square or singular.
Matrix invert(const Matrix& m);

/// Dense tensor whose axes carry integer labels. Data is row-major with the
/// last axis fastest. A rank-0 tensor holds one scalar.
struct Tensor {
  std::vector<int> axes;
  std::vector<int> dims;
  std::vector<Cyclotomic> data;

  static Tensor scalar(Cyclotomic v) { return Tensor{{}, {}, {std::move(v)}}; }
  size_t size() const;
  int rank() const { return static_cast<int>(axes.size()); }
  const Cyclotomic& at(const std::vector<int>& idx) const;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.axes == b.axes && a.dims == b.dims && a.data == b.data;
  }
};

/// Sums over every axis label the two tensors share; the result keeps a's
/// remaining axes followed by b's. Throws IndexMismatch if a shared axis has
/// different dimensions.
Tensor contract(const Tensor& a, const Tensor& b);
/// Traces out repeated axis labels inside one tensor.
Tensor self_contract(const Tensor& a);
/// Reorders axes to `order`, which must be a permutation of t.axes.
Tensor transpose(const Tensor& t, const std::vector<int>& order);
Tensor scale(Tensor t, const Cyclotomic& s);
/// Elementwise sum of tensors with identical axes.
Tensor add(Tensor a, const Tensor& b);

}  // namespace state4
