/// @file analysis.hpp
/// @brief Verification engine: invariant suites, curated relation families,
/// Tucker certification at d = 3, Strassen lower bounds, and Jacobian-rank
/// dimension probes for the kinematic varieties.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kinvar/brackets.hpp"
#include "kinvar/check.hpp"
#include "kinvar/conjugation.hpp"
#include "kinvar/dirac.hpp"
#include "kinvar/kinematics.hpp"
#include "kinvar/rng.hpp"
#include "kinvar/tensor.hpp"

namespace kinvar {

// ── invariant suites ────────────────────────────────────────────────────────

/// Runs every exact invariant of the Clifford, conjugation, kinematics and
/// bracket layers at `trials` fresh sample points.
SuiteReport invariant_suite(int d, int n, int trials, uint64_t seed);

/// Curated relation families at a sampled point: the printed generators for
/// (d, n) = (3, 4) and (5, 5), plus structural subfamilies (Pfaffians of
/// T_j, flattening minors) for other (d, n).
SuiteReport relation_residuals(int d, int n, const SpinorState& st);

/// The n x n skew matrix over brackets <ij> / <ijk> obtained by substituting
/// the raw parameter vector z_j for |j> in column/row j; d = 5 context,
/// rank <= 2 on conserving samples.
QMat mixed_pfaffian_matrix(const SpinorState& st, int j);

/// d = 3 Tucker certification: reconstructs S and T_j from the fixed
/// 2 x 4 x 2 core against U1 = ket matrix, checks rank-1 structure of T_j
/// and multilinear rank <= (2, 4, 2).
SuiteReport tucker_certify_d3(const SpinorState& st);

// ── Strassen lower bound ────────────────────────────────────────────────────

struct StrassenResult {
  int bound = 0;        // 0 with degenerate=true when no invertible slice
  bool degenerate = false;
};

/// For a 3 x 3 x 3 tensor with slices (A1, A2, A3), tries each slice as the
/// invertible pivot: bound = 3 + ceil(rank(A2 A1^-1 A3 - A3 A1^-1 A2) / 2)
/// (indices relabeled per pivot choice); returns the best.
StrassenResult strassen_lower_bound(const Tensor3<Q>& t);

/// Maximizes strassen_lower_bound over all 3 x 3 x 3 coordinate subtensors
/// (row/column/slice index triples) of the given tensor.
StrassenResult strassen_scan(const Tensor3<Q>& t);

// ── dimension probes ────────────────────────────────────────────────────────

enum class Variety { k2, k3, mandelstam, spinor_image };

std::optional<Variety> variety_from_string(const std::string& name);
std::string variety_to_string(Variety v);

struct JacobianProbe {
  Variety variety;
  QMat jac;      // map partials restricted to the tangent directions
  QMat tangent;  // kernel basis of the exact constraint Jacobian
};

/// Exact forward-mode derivatives of the variety's coordinate map at a
/// sampled point, restricted to the constraint tangent space.
JacobianProbe jacobian(Variety v, const SpinorState& st);

enum class RankMode { exact, floating };

/// dim = max over trials of rank(jacobian) - c, where c accounts for the
/// scaling symmetries (2 for the order-3 variety, 1 for the order-2 and
/// single-spinor varieties, 0 for the Mandelstam variety).
int variety_dimension(Variety v, int d, int n, int trials, uint64_t seed, RankMode mode);

/// Codimension of the single-spinor image in P(2^k - 1); for d = 6 also
/// verifies the displayed quadric on the image exactly.
int spinor_codim(int d, int trials, uint64_t seed);

/// Exact check of the d = 6 single-spinor quadric at `trials` random kets.
bool spinor_quadric_d6(int trials, uint64_t seed);

// ── secant membership ───────────────────────────────────────────────────────

/// Order-2 Gram matrix membership: d=3 rank <= 2 (4x4 Pfaffians), d=4,5
/// rank <= 4 (6x6 Pfaffians), d=6,7 rank <= 8 with zero diagonal, symmetric.
SuiteReport secant_membership(const SpinorState& st, const BracketTensor& bt);

// ── dimension table ─────────────────────────────────────────────────────────

struct TableCell {
  int d = 0;
  int n = 0;
  int expected = 0;
  int computed = 0;
  RankMode mode = RankMode::exact;
  bool flagged = false;  // expected disagreement is reported, not fatal
};

/// Expected order-3 variety dimension from the published table (d in 4..9,
/// n in 4..12); -1 when outside.
int expected_k3_dimension(int d, int n);

/// Computes the table over d in 4..dmax, n in 4..nmax.
std::vector<TableCell> reproduce_dimension_table(int dmax, int nmax, uint64_t seed);

}  // namespace kinvar
