/// @file conjugation.hpp
/// @brief Charge conjugation matrix over Q(i) and its symmetry taxonomy.
///
/// C is a product of Dirac matrices (the even-indexed ones from 4 up, then
/// Gamma_1, with the chirality element prepended when d is divisible by 4).
/// It intertwines the momentum matrix with its transpose:
///
///   C P = -P^T C        (d even)
///   C P = (-1)^k P^T C  (d odd, k = floor(d/2))
///
/// and its entries lie in {0, +-1, +-i}. Symmetry taxonomy as a function of
/// k mod 4: C symmetric for k = 0,3; block diagonal for k even; blocks skew
/// for k = 2,3.

#pragma once

#include <utility>

#include "kinvar/check.hpp"
#include "kinvar/dirac.hpp"
#include "kinvar/rng.hpp"

namespace kinvar {

struct ConjugationMatrix {
  int d = 0;
  int k = 0;
  QMat matrix;
  bool symmetric = false;       // else skew
  bool block_diagonal = false;  // else anti-block-diagonal
  bool skew_blocks = false;     // else symmetric blocks

  int size() const { return 1 << k; }
};

/// Builds C for 2 <= d <= 12 and classifies its symmetry structure.
ConjugationMatrix build_conjugation(int d);

/// The two 2^{k-1}-square blocks (C', C''): for k even they sit on the
/// diagonal (C' top-left), for k odd on the anti-diagonal (C' bottom-left).
/// Even d only.
std::pair<QMat, QMat> blocks(const ConjugationMatrix& cm);

/// Exact intertwining at random momenta, entry alphabet, taxonomy
/// predicates, and a floating spin-group invariance probe g^T C g = C.
CheckList verify_conjugation(const ConjugationMatrix& cm, const DiracBasis& basis, int trials,
                             Rng& rng);

}  // namespace kinvar
