/// @file tensor.hpp
/// @brief Order-3 tensors stored slice-major over the middle index.
///
/// A Tensor3 with dims (d1, d2, d3) is a stack of d2 matrices of shape
/// d1 x d3; slice j over the middle index is contiguous. The bracket stack
/// (Gram matrix followed by the momentum-contracted matrices) uses exactly
/// this layout, so slice(j) hands back those matrices verbatim.

#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "kinvar/linalg.hpp"

namespace kinvar {

template <class S>
class Tensor3 {
 public:
  Tensor3() : dims_{0, 0, 0} {}
  Tensor3(int d1, int d2, int d3) : dims_{d1, d2, d3} {
    if (d1 < 0 || d2 < 0 || d3 < 0) throw std::invalid_argument("Tensor3: negative dimension");
    e_.assign(static_cast<size_t>(d1) * d2 * d3, S(0));
  }

  const std::array<int, 3>& dims() const { return dims_; }
  int dim(int mode) const { return dims_.at(mode - 1); }

  S& operator()(int i, int j, int k) { return e_[index(i, j, k)]; }
  const S& operator()(int i, int j, int k) const { return e_[index(i, j, k)]; }

  /// Matrix slice at middle index j (shape d1 x d3).
  Mat<S> slice(int j) const {
    check(0, j, 0);
    Mat<S> out(dims_[0], dims_[2]);
    for (int i = 0; i < dims_[0]; ++i)
      for (int k = 0; k < dims_[2]; ++k) out(i, k) = (*this)(i, j, k);
    return out;
  }

  void set_slice(int j, const Mat<S>& m) {
    check(0, j, 0);
    if (m.rows() != dims_[0] || m.cols() != dims_[2])
      throw std::invalid_argument("Tensor3: slice shape mismatch");
    for (int i = 0; i < dims_[0]; ++i)
      for (int k = 0; k < dims_[2]; ++k) (*this)(i, j, k) = m(i, k);
  }

  /// Matrix slice at first index i (shape d2 x d3).
  Mat<S> slice_first(int i) const {
    check(i, 0, 0);
    Mat<S> out(dims_[1], dims_[2]);
    for (int j = 0; j < dims_[1]; ++j)
      for (int k = 0; k < dims_[2]; ++k) out(j, k) = (*this)(i, j, k);
    return out;
  }

  /// Matrix slice at last index k (shape d1 x d2).
  Mat<S> slice_last(int k) const {
    check(0, 0, k);
    Mat<S> out(dims_[0], dims_[1]);
    for (int i = 0; i < dims_[0]; ++i)
      for (int j = 0; j < dims_[1]; ++j) out(i, j) = (*this)(i, j, k);
    return out;
  }

  /// Mode-m flattening; rows indexed by mode m, columns by the other two
  /// (second remaining index fastest).
  Mat<S> flatten(int mode) const {
    switch (mode) {
      case 1: {
        Mat<S> out(dims_[0], dims_[1] * dims_[2]);
        for (int i = 0; i < dims_[0]; ++i)
          for (int j = 0; j < dims_[1]; ++j)
            for (int k = 0; k < dims_[2]; ++k) out(i, j * dims_[2] + k) = (*this)(i, j, k);
        return out;
      }
      case 2: {
        Mat<S> out(dims_[1], dims_[0] * dims_[2]);
        for (int j = 0; j < dims_[1]; ++j)
          for (int i = 0; i < dims_[0]; ++i)
            for (int k = 0; k < dims_[2]; ++k) out(j, i * dims_[2] + k) = (*this)(i, j, k);
        return out;
      }
      case 3: {
        Mat<S> out(dims_[2], dims_[0] * dims_[1]);
        for (int k = 0; k < dims_[2]; ++k)
          for (int i = 0; i < dims_[0]; ++i)
            for (int j = 0; j < dims_[1]; ++j) out(k, i * dims_[1] + j) = (*this)(i, j, k);
        return out;
      }
      default:
        throw std::invalid_argument("Tensor3: mode must be 1, 2 or 3");
    }
  }

  /// Ranks of the three flattenings.
  std::array<int, 3> multilinear_rank() const {
    return {rank(flatten(1)), rank(flatten(2)), rank(flatten(3))};
  }

  const std::vector<S>& raw() const { return e_; }
  std::vector<S>& raw() { return e_; }

 private:
  size_t index(int i, int j, int k) const {
    check(i, j, k);
    return (static_cast<size_t>(j) * dims_[0] + i) * dims_[2] + k;
  }
  void check(int i, int j, int k) const {
    if (i < 0 || i >= dims_[0] || j < 0 || j >= dims_[1] || k < 0 || k >= dims_[2])
      throw std::out_of_range("Tensor3: index out of range");
  }

  std::array<int, 3> dims_;
  std::vector<S> e_;
};

/// Entrywise conversion to the floating scalar.
inline Tensor3<CD> to_complex(const Tensor3<Q>& t) {
  auto d = t.dims();
  Tensor3<CD> out(d[0], d[1], d[2]);
  for (int j = 0; j < d[1]; ++j)
    for (int i = 0; i < d[0]; ++i)
      for (int k = 0; k < d[2]; ++k) out(i, j, k) = t(i, j, k).to_complex();
  return out;
}

}  // namespace kinvar
