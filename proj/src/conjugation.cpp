#include "kinvar/conjugation.hpp"

#include <stdexcept>

#include "kinvar/float_eval.hpp"

namespace kinvar {

namespace {

bool anti_blocks_zero(const QMat& m) {
  const int half = static_cast<int>(m.rows()) / 2;
  return mat_zero<Q>(m.block(0, half, half, half)) && mat_zero<Q>(m.block(half, 0, half, half));
}

}  // namespace

ConjugationMatrix build_conjugation(int d) {
  if (d < 2 || d > kMaxDimension) throw std::invalid_argument("build_conjugation: d out of range");
  DiracBasis basis = build_dirac(d);
  const int k = basis.k;
  const int n = basis.size();

  QMat c = QMat::Identity(n, n);
  if (d % 4 == 0) c = chirality(basis);
  for (int idx = 4; idx <= 2 * k; idx += 2) c = c * basis.gamma(idx);
  c = c * basis.gamma(1);

  ConjugationMatrix cm;
  cm.d = d;
  cm.k = k;
  cm.matrix = std::move(c);
  cm.symmetric = is_symmetric(cm.matrix);
  cm.block_diagonal = anti_blocks_zero(cm.matrix);

  const int half = n / 2;
  QMat b1, b2;
  if (cm.block_diagonal) {
    b1 = cm.matrix.block(0, 0, half, half);
    b2 = cm.matrix.block(half, half, half, half);
  } else {
    b1 = cm.matrix.block(half, 0, half, half);
    b2 = cm.matrix.block(0, half, half, half);
  }
  cm.skew_blocks = is_skew(b1) && is_skew(b2);
  return cm;
}

std::pair<QMat, QMat> blocks(const ConjugationMatrix& cm) {
  if (cm.d % 2 != 0) throw std::invalid_argument("blocks: even d required");
  const int half = cm.size() / 2;
  if (cm.k % 2 == 0)
    return {cm.matrix.block(0, 0, half, half), cm.matrix.block(half, half, half, half)};
  return {cm.matrix.block(half, 0, half, half), cm.matrix.block(0, half, half, half)};
}

CheckList verify_conjugation(const ConjugationMatrix& cm, const DiracBasis& basis, int trials,
                             Rng& rng) {
  CheckList out;
  if (cm.d != basis.d) throw std::invalid_argument("verify_conjugation: dimension mismatch");
  const int n = cm.size();

  bool alphabet = true;
  for (int i = 0; i < n && alphabet; ++i)
    for (int j = 0; j < n && alphabet; ++j) {
      const Q& e = cm.matrix(i, j);
      alphabet = e == Q(0) || e == Q(1) || e == Q(-1) || e == Q::i() || e == -Q::i();
    }
  out.add("entry_alphabet", "conjugation-entry-alphabet", alphabet);

  out.add("invertible", "conjugation-invertible", rank(cm.matrix) == n);

  // intertwining with the momentum matrix at random (not necessarily null) p
  Q sign = (cm.d % 2 == 0) ? Q(-1) : (cm.k % 2 == 0 ? Q(1) : Q(-1));
  bool twines = true;
  for (int t = 0; t < trials && twines; ++t) {
    QVec p(cm.d);
    for (int j = 0; j < cm.d; ++j) p(j) = rng.scalar();
    QMat pm = momentum_dirac(basis, p);
    twines = mat_eq<Q>(cm.matrix * pm, sign * (pm.transpose() * cm.matrix));
  }
  out.add("intertwining", "conjugation-intertwining", twines);

  const int kmod = cm.k % 4;
  out.add("symmetry_class", "conjugation-symmetry-class",
          cm.symmetric == (kmod == 0 || kmod == 3));
  out.add("block_shape", "conjugation-block-shape", cm.block_diagonal == (cm.k % 2 == 0));
  out.add("block_symmetry", "conjugation-block-symmetry",
          cm.skew_blocks == (kmod == 2 || kmod == 3));

  // spin-group invariance, floating probe: g = exp(t Sigma_{jl})
  CDMat cf = to_complex(cm.matrix);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    int j = static_cast<int>(rng.uniform(1, cm.d - 1));
    int l = static_cast<int>(rng.uniform(j + 1, cm.d));
    double tt = 2.0 * rng.real_double() - 1.0;
    CDMat g = expm(tt * to_complex(sigma(basis, j, l)));
    worst = std::max(worst, rel_err(g.transpose() * cf * g, cf));
  }
  out.add("spin_invariance_float", "conjugation-spin-invariance", worst <= 1e-9,
          "worst rel err " + std::to_string(worst));
  return out;
}

}  // namespace kinvar
