/// @file float_eval.hpp
/// @brief Floating-point helpers for the tolerance-based checks.
///
/// Exact paths never exponentiate; everything here exists for the numeric
/// invariance tests (spin-group conjugation, Lorentz transport of brackets)
/// and the float fallback of the dimension probes.

#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "kinvar/linalg.hpp"

namespace kinvar {

using CDMat = Mat<CD>;
using CDVec = Vec<CD>;

/// Matrix exponential by scaling-and-squaring over a degree-12 truncated
/// series; adequate for the unit-scale generators used in the checks.
inline CDMat expm(const CDMat& a) {
  const int n = static_cast<int>(a.rows());
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  CDMat scaled = a / std::pow(2.0, squarings);
  CDMat term = CDMat::Identity(n, n);
  CDMat sum = term;
  for (int j = 1; j <= 12; ++j) {
    term = (term * scaled) / static_cast<double>(j);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

inline double frobenius(const CDMat& m) {
  double acc = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) acc += std::norm(m(i, j));
  return std::sqrt(acc);
}

/// ||got - want||_F relative to ||want||_F (absolute when want is tiny).
inline double rel_err(const CDMat& got, const CDMat& want) {
  double scale = frobenius(want);
  return frobenius(got - want) / (scale > 1e-300 ? scale : 1.0);
}

/// Generator of the vector (defining) representation paired with the spin
/// generator Sigma_{jl}: lambda has eta_jj at (j,l) and -eta_ll at (l,j)
/// (0-based indices here; callers pass 1-based axes). exp(t*lambda)
/// preserves eta, and conjugating the momentum matrix by exp(t*Sigma)
/// matches applying exp(t*lambda) to the momentum.
inline CDMat vector_generator(int d, int j, int l) {
  std::vector<int> eta(d, 1);
  eta[0] = -1;
  CDMat lam = CDMat::Zero(d, d);
  lam(j - 1, l - 1) = static_cast<double>(eta[j - 1]);
  lam(l - 1, j - 1) = -static_cast<double>(eta[l - 1]);
  return lam;
}

inline CDMat eta_matrix(int d) {
  CDMat m = CDMat::Zero(d, d);
  m(0, 0) = -1.0;
  for (int i = 1; i < d; ++i) m(i, i) = 1.0;
  return m;
}

}  // namespace kinvar
