/// @file dirac.hpp
/// @brief Dirac matrices in the block-structured convention over Q(i).
///
/// The basis Gamma_1..Gamma_d of size 2^k (k = floor(d/2)) realizes the
/// Clifford relations for the mostly-plus Lorentzian metric
/// eta = diag(-1, 1, ..., 1):
///
///   Gamma_1^2 = -Id,  Gamma_j^2 = Id (j >= 2),  Gamma_i Gamma_j = -Gamma_j Gamma_i.
///
/// All matrices for even index count are anti-block-diagonal with two
/// 2^{k-1}-square blocks; for odd d the extra matrix is diag(1,..,1,-1,..,-1).
/// The momentum matrix P(p) = -p_1 Gamma_1 + p_2 Gamma_2 + ... + p_d Gamma_d
/// satisfies P^2 = (p.p) Id, so P^2 = 0 and rank(P) = 2^{k-1} on the null cone.

#pragma once

#include <utility>
#include <vector>

#include "kinvar/check.hpp"
#include "kinvar/linalg.hpp"

namespace kinvar {

inline constexpr int kMaxDimension = 12;

struct DiracBasis {
  int d = 0;
  int k = 0;                  // floor(d/2)
  std::vector<QMat> gammas;   // d matrices of size 2^k
  std::vector<int> eta;       // metric diagonal (-1, 1, ..., 1)

  int size() const { return 1 << k; }
  const QMat& gamma(int idx) const { return gammas.at(idx - 1); }  // 1-based
};

/// Builds the basis; throws std::invalid_argument outside 2 <= d <= 12.
DiracBasis build_dirac(int d);

/// P(p) = -p_1 Gamma_1 + p_2 Gamma_2 + ... + p_d Gamma_d.
QMat momentum_dirac(const DiracBasis& basis, const QVec& p);

/// Anti-diagonal blocks of P for even d: P = [[0, P'], [P'', 0]];
/// returns (P', P'').
std::pair<QMat, QMat> momentum_blocks(const DiracBasis& basis, const QVec& p);

/// Spin generator Sigma_{jl} = (1/4)[Gamma_j, Gamma_l], 1 <= j < l <= d.
QMat sigma(const DiracBasis& basis, int j, int l);

/// Gamma_{d+1} = -i^{k-1} Gamma_1 ... Gamma_d for even d (chirality element).
QMat chirality(const DiracBasis& basis);

/// Exact verification of the Clifford relations, the symmetry pattern
/// (Gamma_1 skew, Gamma_2 symmetric, then alternating from Gamma_3 on with
/// odd indices symmetric), and the block structure.
CheckList verify_clifford(const DiracBasis& basis);

/// Metric diagonal for dimension d.
std::vector<int> eta_diagonal(int d);

/// Lorentzian inner product p.q = -p_1 q_1 + p_2 q_2 + ... + p_d q_d.
Q minkowski(const QVec& p, const QVec& q);

}  // namespace kinvar
