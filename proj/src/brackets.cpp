#include "kinvar/brackets.hpp"

#include <stdexcept>

namespace kinvar {

std::vector<int> free_slots(int k) {
  if (k < 1) throw std::invalid_argument("free_slots: k >= 1 required");
  if (k == 1) return {0};
  const int dim = 1 << k, quarter = 1 << (k - 2);
  std::vector<int> slots;
  for (int i = 0; i < quarter; ++i) slots.push_back(i);
  for (int i = dim - quarter; i < dim; ++i) slots.push_back(i);
  return slots;
}

SpinorParams make_spinor_params(int k, int n, Rng& rng, const RationalDrawSpec& spec) {
  SpinorParams params;
  params.k = k;
  params.n = n;
  const std::vector<int> slots = free_slots(k);
  for (int i = 0; i < n; ++i) {
    QVec z = QVec::Zero(1 << k);
    for (int s : slots) z(s) = rng.scalar(spec);
    params.z.push_back(std::move(z));
  }
  return params;
}

SpinorState make_spinor_state(const KinematicConfiguration& cfg, const SpinorParams& params) {
  if (params.n != cfg.n) throw std::invalid_argument("make_spinor_state: particle count mismatch");
  SpinorState st;
  st.basis = build_dirac(cfg.d);
  if (params.k != st.basis.k) throw std::invalid_argument("make_spinor_state: k mismatch");
  st.conj = build_conjugation(cfg.d);
  st.cfg = cfg;
  st.params = params;
  for (int i = 0; i < cfg.n; ++i) {
    st.p.push_back(momentum_dirac(st.basis, cfg.momenta[i]));
    st.kets.push_back(QVec(st.p.back() * params.z[i]));
  }
  return st;
}

const QVec& ket(const SpinorState& st, int i) { return st.kets.at(i - 1); }

Q bracket(const SpinorState& st, const std::vector<int>& word) {
  if (word.size() < 2) throw std::invalid_argument("bracket: word length >= 2 required");
  for (int i : word)
    if (i < 1 || i > st.cfg.n) throw std::invalid_argument("bracket: index out of range");
  QVec right = st.kets[word.back() - 1];
  for (size_t m = word.size() - 2; m >= 1; --m) right = QVec(st.p[word[m] - 1] * right);
  QVec lhs = QVec(st.conj.matrix.transpose() * st.kets[word.front() - 1]);
  Q acc(0);
  for (int a = 0; a < lhs.size(); ++a) acc += lhs(a) * right(a);
  return acc;
}

Tensor3<Q> BracketTensor::st() const {
  Tensor3<Q> t(n, n + 1, n);
  t.set_slice(0, S);
  for (int j = 1; j <= n; ++j) t.set_slice(j, T[j - 1]);
  return t;
}

BracketTensor build_bracket_tensor(const SpinorState& st) {
  const int n = st.cfg.n;
  QMat kets(st.basis.size(), n);
  for (int i = 0; i < n; ++i) kets.col(i) = st.kets[i];

  BracketTensor bt;
  bt.d = st.cfg.d;
  bt.n = n;
  bt.k = st.basis.k;
  QMat ck = st.conj.matrix * kets;
  bt.S = kets.transpose() * ck;
  for (int j = 0; j < n; ++j) bt.T.push_back(QMat(kets.transpose() * (st.conj.matrix * (st.p[j] * kets))));

  const int kmod = bt.k % 4, dmod = bt.d % 8;
  bt.s_symmetric = (kmod == 0 || kmod == 3);
  bt.t_symmetric = (dmod >= 1 && dmod <= 4);
  return bt;
}

CheckList verify_bracket_tensor(const SpinorState& st, const BracketTensor& bt) {
  CheckList out;
  const int n = bt.n, k = bt.k;

  bool s_diag = true;
  for (int i = 0; i < n; ++i) s_diag = s_diag && bt.S(i, i) == Q(0);
  out.add("s_zero_diagonal", "gram-zero-diagonal", s_diag);
  out.add("s_symmetry_class", "gram-symmetry-class",
          bt.s_symmetric ? is_symmetric(bt.S) : is_skew(bt.S));
  out.add("s_rank_bound", "gram-rank-bound", rank(bt.S) <= (1 << k));

  bool t_rowcol = true, t_sym = true, t_rank = true;
  for (int j = 0; j < n; ++j) {
    const QMat& t = bt.T[j];
    for (int i = 0; i < n; ++i) t_rowcol = t_rowcol && t(j, i) == Q(0) && t(i, j) == Q(0);
    t_sym = t_sym && (bt.t_symmetric ? is_symmetric(t) : is_skew(t));
    t_rank = t_rank && rank(t) <= (1 << (k - 1));
  }
  out.add("t_zero_row_col", "contracted-zero-row-col", t_rowcol);
  out.add("t_symmetry_class", "contracted-symmetry-class", t_sym);
  out.add("t_rank_bound", "contracted-rank-bound", t_rank);

  if (st.cfg.conserves) {
    QMat sum = QMat::Zero(n, n);
    for (const QMat& t : bt.T) sum += t;
    out.add("t_sum_zero", "contracted-sum-zero", mat_zero<Q>(sum));
  }

  // entrywise agreement with pointwise bracket words
  bool agree = true;
  for (int i = 1; i <= n && agree; ++i)
    for (int j = 1; j <= n && agree; ++j) {
      agree = bt.S(i - 1, j - 1) == bracket(st, {i, j});
      for (int m = 1; m <= n && agree; ++m) agree = bt.T[m - 1](i - 1, j - 1) == bracket(st, {i, m, j});
    }
  out.add("matches_words", "stack-matches-words", agree);
  return out;
}

// ── even-d split species ────────────────────────────────────────────────────

namespace {

void require_even(const SpinorState& st, const char* who) {
  if (st.cfg.d % 2 != 0) throw std::invalid_argument(std::string(who) + ": even d required");
}

QVec half_vec(const QVec& z, bool first_half) {
  const int half = static_cast<int>(z.size()) / 2;
  return z.segment(first_half ? 0 : half, half);
}

}  // namespace

QVec angle_ket(const SpinorState& st, int i) {
  require_even(st, "angle_ket");
  auto [pp, ppp] = momentum_blocks(st.basis, st.cfg.momenta[i - 1]);
  return QVec(pp * half_vec(st.params.z[i - 1], false));
}

QVec square_ket(const SpinorState& st, int i) {
  require_even(st, "square_ket");
  auto [pp, ppp] = momentum_blocks(st.basis, st.cfg.momenta[i - 1]);
  return QVec(ppp * half_vec(st.params.z[i - 1], true));
}

Q split_bracket(const SpinorState& st, const std::vector<int>& word, BracketKind kind) {
  require_even(st, "split_bracket");
  if (word.size() < 2) throw std::invalid_argument("split_bracket: word length >= 2 required");
  auto [cp, cpp] = blocks(st.conj);

  const bool start_angle = (kind == BracketKind::angle || kind == BracketKind::mixed_as);
  const bool end_angle = (kind == BracketKind::angle || kind == BracketKind::mixed_sa);
  const bool prime_chain = (kind == BracketKind::angle || kind == BracketKind::mixed_sa);

  QVec right = end_angle ? angle_ket(st, word.back()) : square_ket(st, word.back());
  for (size_t m = word.size() - 2; m >= 1; --m) {
    auto [pp, ppp] = momentum_blocks(st.basis, st.cfg.momenta[word[m] - 1]);
    right = QVec((prime_chain ? pp : ppp) * right);
  }
  const QMat& c = prime_chain ? cp : cpp;
  QVec lhs = start_angle ? angle_ket(st, word.front()) : square_ket(st, word.front());
  QVec cl = QVec(c.transpose() * lhs);
  Q acc(0);
  for (int a = 0; a < cl.size(); ++a) acc += cl(a) * right(a);
  return acc;
}

CheckList sh_product_check(const KinematicConfiguration& cfg) {
  if (cfg.d != 4) throw std::invalid_argument("sh_product_check: d = 4 required");
  if (!cfg.conserves) throw std::invalid_argument("sh_product_check: conserving configuration required");
  const int n = cfg.n;

  // normalized parameters: x_i = 1 (slot 3), x~_i = 1/(p_i1 + p_i2) (slot 0)
  SpinorParams params;
  params.k = 2;
  params.n = n;
  for (int i = 0; i < n; ++i) {
    Q denom = cfg.momenta[i](0) + cfg.momenta[i](1);
    if (denom == Q(0)) throw std::runtime_error("sh_product_check: degenerate normalization");
    QVec z = QVec::Zero(4);
    z(0) = Q(1) / denom;
    z(3) = Q(1);
    params.z.push_back(std::move(z));
  }
  SpinorState st = make_spinor_state(cfg, params);

  CheckList out;
  QMat angle(n, n), square(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      angle(i - 1, j - 1) = split_bracket(st, {i, j}, BracketKind::angle);
      square(i - 1, j - 1) = split_bracket(st, {i, j}, BracketKind::square);
    }

  out.add("angle_skew", "sh-angle-skew", is_skew(angle));
  out.add("square_skew", "sh-square-skew", is_skew(square));
  out.add("angle_rank_2", "sh-angle-rank", rank(angle) == 2);
  out.add("square_rank_2", "sh-square-rank", rank(square) == 2);
  out.add("product_zero", "sh-product-zero", mat_zero<Q>(angle * square));

  // |i>[i| rebuilds the primed momentum block against J = [[0,1],[-1,0]]
  QMat jrot(2, 2);
  jrot << Q(0), Q(1), Q(-1), Q(0);
  bool rebuild = true;
  QMat total = QMat::Zero(2, 2);
  for (int i = 1; i <= n && rebuild; ++i) {
    auto [pp, ppp] = momentum_blocks(st.basis, cfg.momenta[i - 1]);
    QMat outer = angle_ket(st, i) * square_ket(st, i).transpose();
    rebuild = mat_eq<Q>(outer, pp * jrot);
    total += outer;
  }
  out.add("momentum_rebuild", "sh-momentum-rebuild", rebuild);
  out.add("outer_sum_zero", "sh-outer-sum-zero", mat_zero<Q>(total));
  return out;
}

}  // namespace kinvar
