/// @file linalg.hpp
/// @brief Dense exact linear algebra over a field scalar.
///
/// Everything here is a free function template over the scalar type; the
/// exact pipeline instantiates with GaussianRational, the numeric fallback
/// with std::complex<double>. Rank, kernel and determinant use row-echelon
/// elimination with leading-entry normalization; pivots are chosen to
/// minimize a scalar weight (bit size for rationals) to tame entry growth.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "kinvar/scalar.hpp"

namespace kinvar {

using Q = GaussianRational;
using CD = std::complex<double>;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QMat = Mat<Q>;
using QVec = Vec<Q>;

// ── pivot weight ────────────────────────────────────────────────────────────

template <class S>
inline size_t pivot_weight(const S&) {
  return 0;  // no preference for generic scalars
}
inline size_t pivot_weight(const GaussianRational& q) { return q.bit_size(); }

// ── row echelon ─────────────────────────────────────────────────────────────

template <class S>
struct Echelon {
  Mat<S> rref;             // fully reduced form, pivot entries normalized to 1
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row echelon form; exact for exact scalars.
template <class S>
Echelon<S> row_echelon(Mat<S> m) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  Echelon<S> out;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    size_t best_w = 0;
    for (int i = r; i < rows; ++i) {
      if (m(i, c) == S(0)) continue;
      size_t w = pivot_weight(m(i, c));
      if (best < 0 || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best < 0) continue;
    m.row(r).swap(m.row(best));
    S inv = S(1) / m(r, c);
    m.row(r) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == S(0)) continue;
      S f = m(i, c);
      m.row(i) -= f * m.row(r);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = std::move(m);
  return out;
}

template <class S>
int rank(const Mat<S>& m) {
  return row_echelon(m).rank;
}

/// Columns form a basis of the right kernel; count = cols - rank.
template <class S>
Mat<S> kernel_basis(const Mat<S>& m) {
  Echelon<S> e = row_echelon(m);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  Mat<S> basis = Mat<S>::Zero(cols, cols - e.rank);
  int out_col = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    basis(c, out_col) = S(1);
    for (int pr = 0; pr < e.rank; ++pr) basis(e.pivot_cols[pr], out_col) = -e.rref(pr, c);
    ++out_col;
  }
  return basis;
}

template <class S>
S det(Mat<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  const int n = static_cast<int>(m.rows());
  S result = S(1);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    size_t best_w = 0;
    for (int i = c; i < n; ++i) {
      if (m(i, c) == S(0)) continue;
      size_t w = pivot_weight(m(i, c));
      if (best < 0 || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best < 0) return S(0);
    if (best != c) {
      m.row(c).swap(m.row(best));
      result = -result;
    }
    result *= m(c, c);
    S inv = S(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == S(0)) continue;
      S f = m(i, c) * inv;
      m.row(i) -= f * m.row(c);
    }
  }
  return result;
}

/// Solves a x = b for square invertible a (general right-hand-side matrix).
template <class S>
Mat<S> solve(Mat<S> a, Mat<S> b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  const int n = static_cast<int>(a.rows());
  for (int c = 0; c < n; ++c) {
    int best = -1;
    size_t best_w = 0;
    for (int i = c; i < n; ++i) {
      if (a(i, c) == S(0)) continue;
      size_t w = pivot_weight(a(i, c));
      if (best < 0 || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best < 0) throw std::invalid_argument("solve: singular matrix");
    if (best != c) {
      a.row(c).swap(a.row(best));
      b.row(c).swap(b.row(best));
    }
    S inv = S(1) / a(c, c);
    a.row(c) *= inv;
    b.row(c) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == S(0)) continue;
      S f = a(i, c);
      a.row(i) -= f * a.row(c);
      b.row(i) -= f * b.row(c);
    }
  }
  return b;
}

template <class S>
Mat<S> inverse(const Mat<S>& a) {
  return solve<S>(a, Mat<S>::Identity(a.rows(), a.rows()));
}

// ── exact comparisons ───────────────────────────────────────────────────────

template <class S>
bool mat_zero(const Mat<S>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != S(0)) return false;
  return true;
}

template <class S>
bool mat_eq(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return mat_zero<S>(a - b);
}

// ── symmetry predicates ─────────────────────────────────────────────────────

template <class S>
bool is_symmetric(const Mat<S>& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

template <class S>
bool is_skew(const Mat<S>& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (m(i, i) != S(0)) return false;
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != S(0) - m(j, i)) return false;
  }
  return true;
}

// ── Pfaffian ────────────────────────────────────────────────────────────────

namespace detail {

/// Direct expansion along the first row; allocation-light for size <= 6.
template <class S>
S pfaffian_expand(const Mat<S>& m, std::vector<int> idx) {
  const size_t n = idx.size();
  if (n == 0) return S(1);
  if (n == 2) return m(idx[0], idx[1]);
  S acc = S(0);
  int sign = 1;
  for (size_t j = 1; j < n; ++j) {
    if (m(idx[0], idx[j]) != S(0)) {
      std::vector<int> rest;
      rest.reserve(n - 2);
      for (size_t t = 1; t < n; ++t)
        if (t != j) rest.push_back(idx[t]);
      S term = m(idx[0], idx[j]) * pfaffian_expand(m, std::move(rest));
      acc += (sign > 0) ? term : -term;
    }
    sign = -sign;
  }
  return acc;
}

/// Skew-symmetric congruence elimination (Parlett-Reid style).
template <class S>
S pfaffian_eliminate(Mat<S> m) {
  const int n = static_cast<int>(m.rows());
  S sign = S(1);
  for (int c = 0; c + 1 < n; c += 2) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) != S(0)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return S(0);
    if (piv != c + 1) {
      m.row(piv).swap(m.row(c + 1));
      m.col(piv).swap(m.col(c + 1));
      sign = -sign;
    }
    S inv = S(1) / m(c + 1, c);
    for (int i = c + 2; i < n; ++i) {
      if (m(i, c) == S(0)) continue;
      S f = m(i, c) * inv;
      m.row(i) -= f * m.row(c + 1);
      m.col(i) -= f * m.col(c + 1);
    }
    // the congruence preserves skewness; column c now has a single pair
  }
  S pf = sign;
  for (int c = 0; c + 1 < n; c += 2) pf *= m(c, c + 1);
  return pf;
}

}  // namespace detail

/// Pfaffian of a skew-symmetric matrix of even size; pfaffian^2 = det.
template <class S>
S pfaffian(const Mat<S>& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("pfaffian: even-size square matrix required");
  if (!is_skew(m)) throw std::invalid_argument("pfaffian: skew-symmetric matrix required");
  const int n = static_cast<int>(m.rows());
  if (n <= 6) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return detail::pfaffian_expand(m, std::move(idx));
  }
  return detail::pfaffian_eliminate(Mat<S>(m));
}

// ── Kronecker product ───────────────────────────────────────────────────────

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// ── numeric rank (float fallback only) ──────────────────────────────────────

/// SVD rank with a relative threshold; the only floating-point rank path.
inline int float_rank(const Mat<CD>& m, double rel_tol = 1e-8) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat<CD>> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double cutoff = rel_tol * sv(0);
  if (cutoff == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

/// Entrywise conversion to the floating scalar.
inline Mat<CD> to_complex(const QMat& m) {
  Mat<CD> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

}  // namespace kinvar
