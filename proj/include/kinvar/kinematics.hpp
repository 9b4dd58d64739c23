/// @file kinematics.hpp
/// @brief Exact massless kinematics over Q(i).
///
/// Null momenta come from a rational parametrization of the light cone, so
/// the mass-shell residual is identically zero. Conservation is arranged by
/// a rescale-and-complete step: sample n-1 null momenta, rescale the first
/// so that the forced p_n = -(p_1 + ... + p_{n-1}) is itself null. All n + d
/// defining residuals vanish exactly, never merely to rounding.

#pragma once

#include <vector>

#include "kinvar/check.hpp"
#include "kinvar/dirac.hpp"
#include "kinvar/linalg.hpp"
#include "kinvar/rng.hpp"

namespace kinvar {

struct KinematicConfiguration {
  int d = 0;
  int n = 0;
  bool conserves = false;
  std::vector<QVec> momenta;  // each of length d, each exactly null
};

/// The light-cone parametrization underlying sampling: given u != 0 and
/// x_3..x_d, with Sq = sum x_j^2, returns
/// p = ((u + Sq/u)/2, (Sq/u - u)/2, x_3, ..., x_d), which is exactly null.
QVec null_from_parameters(int d, const Q& u, const std::vector<Q>& xs);

/// One null momentum via null_from_parameters at random arguments
/// (d >= 3).
QVec sample_null_momentum(int d, Rng& rng, const RationalDrawSpec& spec = {});

/// n independent null momenta; with conserve also sum p_i = 0 exactly
/// (n >= 4; three-particle conserving kinematics comes from
/// sample_isotropic_triple). Throws std::runtime_error after 100 degenerate
/// retries.
KinematicConfiguration sample_configuration(int d, int n, bool conserve, Rng& rng,
                                            const RationalDrawSpec& spec = {});

/// Conserving n = 3 configuration inside a totally isotropic plane
/// (d >= 4): every pairwise product s_ij vanishes.
KinematicConfiguration sample_isotropic_triple(int d, Rng& rng,
                                               const RationalDrawSpec& spec = {});

/// Gram-like matrix s_ij = p_i . p_j of the Lorentzian form.
QMat mandelstam_matrix(const KinematicConfiguration& cfg);

/// The n null residuals followed by the d conservation residuals.
std::vector<Q> constraint_residuals(const KinematicConfiguration& cfg);

/// Structural facts about the Mandelstam matrix: symmetry, zero diagonal,
/// zero row sums when conserving, rank <= d.
CheckList verify_mandelstam(const KinematicConfiguration& cfg);

}  // namespace kinvar
