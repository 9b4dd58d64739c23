/// @file brackets.hpp
/// @brief Spinor parameters, kets, bracket words, and the S/T bracket stack.
///
/// Each particle carries a sparse parameter vector z_i (free entries in the
/// first and last quarters for k >= 2, a single free entry for k = 1) and a
/// ket |i> = P_i z_i in the kernel of P_i. Bracket words contract kets
/// through the conjugation matrix:
///
///   <i_1 ... i_l> = |i_1>^T C P_{i_2} ... P_{i_{l-1}} |i_l>
///
/// The Gram matrix S = (<ij>) and the contracted matrices T_j = (<i j k>)
/// assemble into the order-3 stack ST with middle index running over
/// (S, T_1, ..., T_n). For even d the ket splits into half-spinors and the
/// bracket splits into angle/square/mixed species through the blocks of P
/// and C.

#pragma once

#include <vector>

#include "kinvar/check.hpp"
#include "kinvar/conjugation.hpp"
#include "kinvar/dirac.hpp"
#include "kinvar/kinematics.hpp"
#include "kinvar/tensor.hpp"

namespace kinvar {

struct SpinorParams {
  int k = 0;
  int n = 0;
  std::vector<QVec> z;  // length 2^k each, sparsity pattern enforced
};

/// 0-based positions of the free entries of z for half-dimension k.
std::vector<int> free_slots(int k);

/// Random real-rational values in the free slots, zeros elsewhere.
SpinorParams make_spinor_params(int k, int n, Rng& rng, const RationalDrawSpec& spec = {});

/// Fully assembled spinor data for one sampled configuration.
struct SpinorState {
  DiracBasis basis;
  ConjugationMatrix conj;
  KinematicConfiguration cfg;
  SpinorParams params;
  std::vector<QMat> p;     // momentum matrices P_i
  std::vector<QVec> kets;  // |i> = P_i z_i
};

SpinorState make_spinor_state(const KinematicConfiguration& cfg, const SpinorParams& params);

/// |i>, 1-based particle index.
const QVec& ket(const SpinorState& st, int i);

/// Bracket word of length >= 2 over 1-based particle indices.
Q bracket(const SpinorState& st, const std::vector<int>& word);

struct BracketTensor {
  int d = 0;
  int n = 0;
  int k = 0;
  QMat S;
  std::vector<QMat> T;
  bool s_symmetric = false;  // else skew
  bool t_symmetric = false;  // else skew

  /// n x (n+1) x n stack; middle slice 0 is S, slice j is T_j.
  Tensor3<Q> st() const;
};

/// S and all T_j via the matrix triple products (K^T C K and K^T C P_j K).
BracketTensor build_bracket_tensor(const SpinorState& st);

/// Structural facts of the bracket stack: zero diagonals, symmetry classes,
/// rank bounds, zero row/column of T_j, and sum T_1 + ... + T_n = 0 when the
/// configuration conserves.
CheckList verify_bracket_tensor(const SpinorState& st, const BracketTensor& bt);

// ── even-d split species ────────────────────────────────────────────────────

enum class BracketKind { angle, square, mixed_as, mixed_sa };

/// Angle half-spinor |i> = P'_i x_i (x_i = last half of z_i).
QVec angle_ket(const SpinorState& st, int i);
/// Square half-spinor |i] = P''_i x~_i (x~_i = first half of z_i).
QVec square_ket(const SpinorState& st, int i);

/// The four displayed species over the blocks of P and C; even d only.
/// angle:    <i_1| C' P'  ... |i_l>      square:   [i_1| C'' P'' ... |i_l]
/// mixed_as: <i_1| C'' P'' ... |i_l]     mixed_sa: [i_1| C' P'  ... |i_l>
Q split_bracket(const SpinorState& st, const std::vector<int>& word, BracketKind kind);

/// d = 4 spinor-helicity reduction on a conserving configuration: with the
/// normalization x_i = 1, x~_i = 1/(p_i1 + p_i2) the outer products |i>[i|
/// rebuild the momentum blocks, the angle and square Gram matrices are skew
/// of rank 2, and their product vanishes exactly. Throws std::runtime_error
/// on p_i1 + p_i2 = 0 (caller resamples).
CheckList sh_product_check(const KinematicConfiguration& cfg);

}  // namespace kinvar
