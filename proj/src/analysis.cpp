/// @file analysis.cpp
/// @brief Invariant suites, relation families, Tucker and Strassen
/// certificates, and Jacobian-rank dimension probes.

#include "kinvar/analysis.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "kinvar/linalg.hpp"

namespace kinvar {

namespace {

// ── small combinatorics ─────────────────────────────────────────────────────

std::vector<std::vector<int>> index_subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m > n || m < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (m - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

QMat submatrix(const QMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  QMat out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
  return out;
}

std::string subset_label(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << "}";
  return os.str();
}

bool vec_zero(const QVec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (v(i) != Q(0)) return false;
  return true;
}

/// Every principal Pfaffian of the given even size vanishes.
bool principal_pfaffians_vanish(const QMat& s, int size, std::string& witness, int& count) {
  count = 0;
  for (const auto& idx : index_subsets(static_cast<int>(s.rows()), size)) {
    ++count;
    if (pfaffian(submatrix(s, idx, idx)) != Q(0)) {
      witness = "nonzero Pfaffian on rows " + subset_label(idx);
      return false;
    }
  }
  return true;
}

/// Every size x size minor of the given matrix vanishes.
bool minors_vanish(const QMat& m, int size, std::string& witness, int& count) {
  count = 0;
  for (const auto& rows : index_subsets(static_cast<int>(m.rows()), size))
    for (const auto& cols : index_subsets(static_cast<int>(m.cols()), size)) {
      ++count;
      if (det(submatrix(m, rows, cols)) != Q(0)) {
        witness = "nonzero minor at rows " + subset_label(rows) + " cols " + subset_label(cols);
        return false;
      }
    }
  return true;
}

SpinorState sampled_state(int d, int n, bool conserve, Rng& rng,
                          const RationalDrawSpec& spec = {}) {
  KinematicConfiguration cfg = (conserve && n == 3)
      ? sample_isotropic_triple(d, rng, spec)
      : sample_configuration(d, n, conserve, rng, spec);
  SpinorParams params = make_spinor_params(build_dirac(d).k, n, rng, spec);
  return make_spinor_state(cfg, params);
}

std::string count_witness(int count, const char* what) {
  std::ostringstream os;
  os << count << " " << what;
  return os.str();
}

}  // namespace

// ── invariant suites ────────────────────────────────────────────────────────

SuiteReport invariant_suite(int d, int n, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("invariant_suite: trials >= 1 required");
  SuiteReport rep;
  rep.d = d;
  rep.n = n;
  rep.seed = seed;
  Rng master(seed);

  DiracBasis basis = build_dirac(d);
  rep.checks.merge(verify_clifford(basis), "clifford");
  ConjugationMatrix cm = build_conjugation(d);
  Rng crng = master.substream(1);
  rep.checks.merge(verify_conjugation(cm, basis, trials, crng), "conjugation");

  for (int t = 0; t < trials; ++t) {
    Rng rng = master.substream(100 + static_cast<uint64_t>(t));
    SpinorState st = sampled_state(d, n, n >= 4, rng);
    const std::string tag = "t" + std::to_string(t);
    rep.checks.merge(verify_mandelstam(st.cfg), tag + "/kinematics");
    BracketTensor bt = build_bracket_tensor(st);
    rep.checks.merge(verify_bracket_tensor(st, bt), tag + "/brackets");
    rep.checks.merge(relation_residuals(d, n, st).checks, tag + "/relations");
    rep.checks.merge(secant_membership(st, bt).checks, tag + "/secant");
  }
  return rep;
}

// ── relation families ───────────────────────────────────────────────────────

SuiteReport relation_residuals(int d, int n, const SpinorState& st) {
  if (st.cfg.d != d || st.cfg.n != n)
    throw std::invalid_argument("relation_residuals: state does not match (d, n)");
  SuiteReport rep;
  rep.d = d;
  rep.n = n;
  CheckList& cl = rep.checks;
  BracketTensor bt = build_bracket_tensor(st);
  const int half_rank = 1 << (st.basis.k - 1);

  if (st.cfg.conserves) {
    QMat sum = QMat::Zero(n, n);
    for (const QMat& t : bt.T) sum += t;
    cl.add("contracted-sum", "relation-contracted-sum", mat_zero<Q>(sum),
           "sum of all contracted matrices");
  }

  // off-axis minors of each contracted matrix certify its rank cap entrywise
  if (n - 1 >= half_rank + 1) {
    bool ok = true;
    std::string witness;
    int total = 0;
    for (int j = 1; j <= n && ok; ++j) {
      std::vector<int> keep;
      for (int i = 0; i < n; ++i)
        if (i != j - 1) keep.push_back(i);
      QMat off = submatrix(bt.T[j - 1], keep, keep);
      int count = 0;
      ok = minors_vanish(off, half_rank + 1, witness, count);
      total += count;
      if (!ok) witness = "matrix " + std::to_string(j) + ": " + witness;
    }
    cl.add("contracted-minors", "relation-contracted-minors", ok,
           ok ? count_witness(total, "vanishing minors") : witness);
  }

  if (d == 3 && n >= 4) {
    std::string witness;
    int count = 0;
    bool ok = principal_pfaffians_vanish(bt.S, 4, witness, count);
    cl.add("gram-pfaffians", "relation-gram-pfaffian", ok,
           ok ? count_witness(count, "vanishing Pfaffians") : witness);
  }

  if (d == 3) {
    Tensor3<Q> t = bt.st();
    cl.add("flattening-caps", "relation-flattening-rank",
           rank(t.flatten(1)) <= 2 && rank(t.flatten(3)) <= 2,
           "outer flattenings of the stack have rank <= 2");
  }

  if (d == 3 && n == 4 && st.cfg.conserves) {
    const QMat& S = bt.S;
    Q pf = S(0, 1) * S(2, 3) - S(0, 2) * S(1, 3) + S(0, 3) * S(1, 2);
    cl.add("quadric-generator", "relation-gram-pfaffian", pf == Q(0));

    const QMat& t2 = bt.T[1];
    const QMat& t4 = bt.T[3];
    Q b1 = S(0, 1) * t2(2, 3) - S(2, 3) * t4(0, 1);
    Q b2 = S(0, 1) * t4(1, 2) - S(0, 2) * t4(1, 1) + S(1, 2) * t4(0, 1);
    cl.add("bilinear-generator-1", "relation-bilinear", b1 == Q(0));
    cl.add("bilinear-generator-2", "relation-bilinear", b2 == Q(0));

    Q w = bracket(st, {1, 2}) * bracket(st, {3, 2, 4})
        - bracket(st, {3, 4}) * bracket(st, {1, 4, 2});
    cl.add("word-identity", "relation-word-identity", w == Q(0),
           "two-word product equals its partner");
  }

  if (d == 5) {
    bool skew_ok = true, rank_ok = true, pf_ok = true;
    std::string witness;
    int total = 0;
    for (int j = 1; j <= n; ++j) {
      QMat m = mixed_pfaffian_matrix(st, j);
      skew_ok = skew_ok && is_skew(m);
      rank_ok = rank_ok && rank(m) <= 2;
      if (n >= 4 && pf_ok) {
        int count = 0;
        pf_ok = principal_pfaffians_vanish(m, 4, witness, count);
        total += count;
        if (!pf_ok) witness = "matrix " + std::to_string(j) + ": " + witness;
      }
    }
    cl.add("mixed-skew", "relation-mixed-skew", skew_ok);
    cl.add("mixed-rank-cap", "relation-mixed-rank", rank_ok, "rank <= 2 for every pivot");
    if (n >= 4)
      cl.add("mixed-pfaffian-quadrics", "relation-mixed-pfaffian", pf_ok,
             pf_ok ? count_witness(total, "vanishing Pfaffians") : witness);
  }

  if (d == 5 && n == 5 && st.cfg.conserves) {
    auto t = [&](int i, int j, int k) { return bt.T[j - 1](i - 1, k - 1); };
    Q cubic = t(2, 1, 3) * t(1, 2, 3) * t(4, 3, 5) - t(2, 1, 3) * t(3, 2, 5) * t(1, 3, 4)
            + t(2, 1, 3) * t(3, 2, 4) * t(1, 3, 5) + t(3, 1, 4) * t(1, 2, 3) * t(2, 3, 5)
            - t(3, 1, 4) * t(3, 2, 5) * t(1, 3, 2) - t(3, 1, 5) * t(1, 2, 3) * t(2, 3, 4)
            + t(3, 1, 5) * t(3, 2, 4) * t(1, 3, 2);
    cl.add("cubic-generator", "relation-contracted-cubic", cubic == Q(0));

    Tensor3<Q> stack = bt.st();
    cl.add("flattening-rank", "relation-flattening-rank", rank(stack.flatten(1)) == 4,
           "matrix [S T_1 ... T_5] has rank exactly 4");

    bool slices_ok = true;
    std::string witness;
    for (int i = 0; i < n && slices_ok; ++i) {
      int count = 0;
      slices_ok = rank(stack.slice_first(i)) <= 3
          && minors_vanish(stack.slice_first(i), 4, witness, count)
          && rank(stack.slice_last(i)) <= 3
          && minors_vanish(stack.slice_last(i), 4, witness, count);
    }
    cl.add("slice-rank-caps", "relation-slice-rank", slices_ok,
           slices_ok ? "outer slices have rank <= 3" : witness);
  }

  return rep;
}

QMat mixed_pfaffian_matrix(const SpinorState& st, int j) {
  if (j < 1 || j > st.cfg.n)
    throw std::invalid_argument("mixed_pfaffian_matrix: pivot out of range");
  const int dim = st.basis.size();
  QMat b(dim, st.cfg.n);
  for (int i = 0; i < st.cfg.n; ++i)
    b.col(i) = (i == j - 1) ? st.params.z[i] : st.kets[i];
  return b.transpose() * st.conj.matrix * st.p[j - 1] * b;
}

// ── Tucker certification at d = 3 ───────────────────────────────────────────

SuiteReport tucker_certify_d3(const SpinorState& st) {
  if (st.cfg.d != 3) throw std::invalid_argument("tucker_certify_d3: d = 3 required");
  SuiteReport rep;
  rep.d = 3;
  rep.n = st.cfg.n;
  CheckList& cl = rep.checks;
  const int n = st.cfg.n;
  BracketTensor bt = build_bracket_tensor(st);

  QMat u1(2, n);
  for (int i = 0; i < n; ++i) u1.col(i) = st.kets[i];

  QMat k1(2, 2), k2(2, 2), k3(2, 2), k4(2, 2);
  k1 << Q(0), Q(1), Q(-1), Q(0);
  k2 << Q(0), Q(1), Q(1), Q(0);
  k3 << Q(1), Q(0), Q(0), Q(0);
  k4 << Q(0), Q(0), Q(0), Q(1);

  cl.add("core-gram", "tucker-core", mat_eq<Q>(bt.S, u1.transpose() * k1 * u1),
         "Gram slice reconstructs from the fixed core");

  bool slices_ok = true;
  bool rank_one_ok = true;
  for (int j = 0; j < n; ++j) {
    const QVec& p = st.cfg.momenta[j];
    QMat mid = Q(-1) * p(2) * k2 + (p(0) + p(1)) * k3 + (p(0) - p(1)) * k4;
    slices_ok = slices_ok && mat_eq<Q>(bt.T[j], u1.transpose() * mid * u1);

    QVec y(2);
    y << p(0) + p(1), Q(-1) * p(2);
    QVec w = u1.transpose() * y;
    rank_one_ok = rank_one_ok && rank(bt.T[j]) <= 1
        && mat_eq<Q>((p(0) + p(1)) * bt.T[j], w * w.transpose());
  }
  cl.add("core-contracted", "tucker-core", slices_ok,
         "every contracted slice reconstructs from the fixed core");
  cl.add("rank-one-slices", "tucker-rank-one", rank_one_ok,
         "scaled contracted slices equal the outer square of the folded vector");

  auto mr = bt.st().multilinear_rank();
  std::ostringstream os;
  os << "(" << mr[0] << ", " << mr[1] << ", " << mr[2] << ")";
  cl.add("multilinear-cap", "tucker-multilinear", mr[0] <= 2 && mr[1] <= 4 && mr[2] <= 2,
         os.str());
  return rep;
}

// ── Strassen lower bound ────────────────────────────────────────────────────

StrassenResult strassen_lower_bound(const Tensor3<Q>& t) {
  if (t.dim(1) != 3 || t.dim(2) != 3 || t.dim(3) != 3)
    throw std::invalid_argument("strassen_lower_bound: 3 x 3 x 3 tensor required");
  std::array<QMat, 3> a = {t.slice(0), t.slice(1), t.slice(2)};
  StrassenResult best{0, true};
  for (int pivot = 0; pivot < 3; ++pivot) {
    if (det(a[pivot]) == Q(0)) continue;
    QMat inv = inverse(a[pivot]);
    const QMat& b = a[(pivot + 1) % 3];
    const QMat& c = a[(pivot + 2) % 3];
    QMat comm = b * inv * c - c * inv * b;
    int bound = 3 + (rank(comm) + 1) / 2;
    if (best.degenerate || bound > best.bound) best = {bound, false};
  }
  return best;
}

StrassenResult strassen_scan(const Tensor3<Q>& t) {
  if (t.dim(1) < 3 || t.dim(2) < 3 || t.dim(3) < 3)
    throw std::invalid_argument("strassen_scan: every mode must have size >= 3");
  const auto rows = index_subsets(t.dim(1), 3);
  const auto mids = index_subsets(t.dim(2), 3);
  const auto lasts = index_subsets(t.dim(3), 3);
  StrassenResult best{0, true};
  Tensor3<Q> sub(3, 3, 3);
  for (const auto& r : rows)
    for (const auto& m : mids)
      for (const auto& l : lasts) {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) sub(i, j, k) = t(r[i], m[j], l[k]);
        StrassenResult cur = strassen_lower_bound(sub);
        if (!cur.degenerate && (best.degenerate || cur.bound > best.bound)) best = cur;
      }
  return best;
}

// ── dimension probes ────────────────────────────────────────────────────────

std::optional<Variety> variety_from_string(const std::string& name) {
  if (name == "k2") return Variety::k2;
  if (name == "k3") return Variety::k3;
  if (name == "mandelstam") return Variety::mandelstam;
  if (name == "spinor") return Variety::spinor_image;
  return std::nullopt;
}

std::string variety_to_string(Variety v) {
  switch (v) {
    case Variety::k2: return "k2";
    case Variety::k3: return "k3";
    case Variety::mandelstam: return "mandelstam";
    case Variety::spinor_image: return "spinor";
  }
  return "";
}

namespace {

/// One tangent direction in the (p, z) sample space.
struct Direction {
  std::vector<QVec> dp;
  std::vector<QVec> dz;
};

/// Rows: one null constraint per particle, then (when conserving) one
/// conservation row per coordinate. Columns: momentum entries, particle-major.
QMat config_constraints(const KinematicConfiguration& cfg) {
  const int d = cfg.d, n = cfg.n;
  const auto eta = eta_diagonal(d);
  const int rows = n + (cfg.conserves ? d : 0);
  QMat jac = QMat::Zero(rows, n * d);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d; ++a) jac(i, i * d + a) = Q(2 * eta[a]) * cfg.momenta[i](a);
  if (cfg.conserves)
    for (int a = 0; a < d; ++a)
      for (int i = 0; i < n; ++i) jac(n + a, i * d + a) = Q(1);
  return jac;
}

std::vector<Direction> tangent_directions(const SpinorState& st, const QMat& ptan, bool with_z) {
  const int d = st.cfg.d, n = st.cfg.n, dim = st.basis.size();
  std::vector<Direction> dirs;
  for (int c = 0; c < ptan.cols(); ++c) {
    Direction dir;
    dir.dp.assign(n, QVec::Zero(d));
    dir.dz.assign(n, QVec::Zero(dim));
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < d; ++a) dir.dp[i](a) = ptan(i * d + a, c);
    dirs.push_back(std::move(dir));
  }
  if (with_z) {
    for (int i = 0; i < n; ++i)
      for (int s : free_slots(st.basis.k)) {
        Direction dir;
        dir.dp.assign(n, QVec::Zero(d));
        dir.dz.assign(n, QVec::Zero(dim));
        dir.dz[i](s) = Q(1);
        dirs.push_back(std::move(dir));
      }
  }
  return dirs;
}

struct StateProducts {
  QMat k;                  // ket columns
  QMat ck, ktc;            // C K and K^T C
  std::vector<QMat> cpk;   // C P_j K
  std::vector<QMat> ktcp;  // K^T C P_j
};

StateProducts state_products(const SpinorState& st) {
  const int dim = st.basis.size(), n = st.cfg.n;
  StateProducts sp;
  sp.k = QMat(dim, n);
  for (int i = 0; i < n; ++i) sp.k.col(i) = st.kets[i];
  const QMat& c = st.conj.matrix;
  sp.ck = c * sp.k;
  sp.ktc = sp.k.transpose() * c;
  for (int j = 0; j < n; ++j) {
    sp.cpk.push_back(c * st.p[j] * sp.k);
    sp.ktcp.push_back(sp.ktc * st.p[j]);
  }
  return sp;
}

/// Differentials of the ket matrix and of every momentum matrix along dir.
struct StackDifferential {
  QMat dk;
  std::vector<QMat> dp;  // empty matrix when the direction has dp_j = 0
};

StackDifferential stack_differential(const SpinorState& st, const Direction& dir) {
  const int dim = st.basis.size(), n = st.cfg.n;
  StackDifferential out;
  out.dk = QMat(dim, n);
  out.dp.resize(n);
  for (int i = 0; i < n; ++i) {
    QVec col = st.p[i] * dir.dz[i];
    if (!vec_zero(dir.dp[i])) {
      out.dp[i] = momentum_dirac(st.basis, dir.dp[i]);
      col += out.dp[i] * st.params.z[i];
    }
    out.dk.col(i) = col;
  }
  return out;
}

int scaling_offset(Variety v) {
  switch (v) {
    case Variety::k3: return 2;         // Gram and contracted blocks scale independently
    case Variety::k2: return 1;
    case Variety::spinor_image: return 1;
    case Variety::mandelstam: return 0;
  }
  return 0;
}

}  // namespace

JacobianProbe jacobian(Variety v, const SpinorState& st) {
  JacobianProbe probe;
  probe.variety = v;
  const int d = st.cfg.d, n = st.cfg.n, dim = st.basis.size();

  if (v == Variety::spinor_image) {
    // single-particle map: the entries of |1> as a function of (p_1, z_1)
    KinematicConfiguration one;
    one.d = d;
    one.n = 1;
    one.conserves = false;
    one.momenta = {st.cfg.momenta[0]};
    probe.tangent = kernel_basis(config_constraints(one));
    const auto slots = free_slots(st.basis.k);
    QMat jac(dim, probe.tangent.cols() + static_cast<int>(slots.size()));
    int c = 0;
    for (int t = 0; t < probe.tangent.cols(); ++t, ++c) {
      QVec dp = probe.tangent.col(t);
      jac.col(c) = momentum_dirac(st.basis, dp) * st.params.z[0];
    }
    for (int s : slots) jac.col(c++) = st.p[0].col(s);
    probe.jac = jac;
    return probe;
  }

  probe.tangent = kernel_basis(config_constraints(st.cfg));
  const bool with_z = v != Variety::mandelstam;
  const auto dirs = tangent_directions(st, probe.tangent, with_z);
  const int cols = static_cast<int>(dirs.size());

  if (v == Variety::mandelstam) {
    QMat jac(n * (n - 1) / 2, cols);
    for (int c = 0; c < cols; ++c) {
      int r = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++r)
          jac(r, c) = minkowski(dirs[c].dp[i], st.cfg.momenta[j])
              + minkowski(st.cfg.momenta[i], dirs[c].dp[j]);
    }
    probe.jac = jac;
    return probe;
  }

  StateProducts sp = state_products(st);
  const int rows = (v == Variety::k2) ? n * (n - 1) / 2 : n * n + n * n * n;
  QMat jac(rows, cols);
  for (int c = 0; c < cols; ++c) {
    StackDifferential df = stack_differential(st, dirs[c]);
    QMat dkt = df.dk.transpose();
    QMat ds = dkt * sp.ck + sp.ktc * df.dk;
    if (v == Variety::k2) {
      int r = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++r) jac(r, c) = ds(i, j);
      continue;
    }
    int r = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++r) jac(r, c) = ds(i, j);
    for (int j = 0; j < n; ++j) {
      QMat dt = dkt * sp.cpk[j] + sp.ktcp[j] * df.dk;
      if (df.dp[j].size() != 0) dt += sp.ktc * (df.dp[j] * sp.k);
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m, ++r) jac(r, c) = dt(i, m);
    }
  }
  probe.jac = jac;
  return probe;
}

int variety_dimension(Variety v, int d, int n, int trials, uint64_t seed, RankMode mode) {
  if (trials < 1) throw std::invalid_argument("variety_dimension: trials >= 1 required");
  Rng master(seed);
  const int needed = 3;  // consecutive agreeing samples accepted as the value
  const int cap = std::max(trials, needed) * 4;
  int last = -2, streak = 0, best = -1;
  for (int t = 0; t < cap; ++t) {
    Rng rng = master.substream(static_cast<uint64_t>(t));
    SpinorState st = (v == Variety::spinor_image) ? sampled_state(d, 1, false, rng)
                                                  : sampled_state(d, n, true, rng);
    JacobianProbe probe = jacobian(v, st);
    const int r = (mode == RankMode::exact) ? rank(probe.jac)
                                            : float_rank(to_complex(probe.jac));
    const int val = r - scaling_offset(v);
    best = std::max(best, val);
    if (val == last) ++streak; else { last = val; streak = 1; }
    if (streak >= needed && t + 1 >= trials) return val;
  }
  return best;
}

int spinor_codim(int d, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("spinor_codim: trials >= 1 required");
  Rng master(seed);
  if (d == 6 && !spinor_quadric_d6(std::max(trials, 3), master.substream(9000).next()))
    return -1;
  DiracBasis basis = build_dirac(d);
  const int needed = 3;
  const int cap = std::max(trials, needed) * 4;
  int last = -2, streak = 0, best = -1;
  for (int t = 0; t < cap; ++t) {
    Rng rng = master.substream(static_cast<uint64_t>(t));
    SpinorState st = sampled_state(d, 1, false, rng);
    const int r = rank(jacobian(Variety::spinor_image, st).jac);
    best = std::max(best, r);
    if (r == last) ++streak; else { last = r; streak = 1; }
    if (streak >= needed && t + 1 >= trials) return basis.size() - r;
  }
  return basis.size() - best;
}

bool spinor_quadric_d6(int trials, uint64_t seed) {
  DiracBasis basis = build_dirac(6);
  ConjugationMatrix cm = build_conjugation(6);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    QVec p = sample_null_momentum(6, rng);
    QMat pm = momentum_dirac(basis, p);
    QVec z(8);
    for (int i = 0; i < 8; ++i) z(i) = rng.scalar();
    QVec v = pm * z;
    Q direct = v(0) * v(5) - v(1) * v(4) - v(2) * v(7) + v(3) * v(6);
    QVec w = cm.matrix * v;
    Q through_c = Q(0);
    for (int i = 0; i < 8; ++i) through_c += v(i) * w(i);
    if (direct != Q(0) || through_c != Q(2) * direct) return false;
  }
  return true;
}

// ── secant membership ───────────────────────────────────────────────────────

SuiteReport secant_membership(const SpinorState& st, const BracketTensor& bt) {
  SuiteReport rep;
  rep.d = st.cfg.d;
  rep.n = st.cfg.n;
  CheckList& cl = rep.checks;
  const QMat& s = bt.S;
  const int n = st.cfg.n;
  const int cap = st.basis.size();  // 2^k

  std::ostringstream os;
  os << "rank " << rank(s) << " <= " << cap;
  cl.add("gram-rank-cap", "secant-rank", rank(s) <= cap, os.str());

  bool diag_ok = true;
  for (int i = 0; i < n; ++i) diag_ok = diag_ok && s(i, i) == Q(0);
  cl.add("gram-zero-diagonal", "secant-diagonal", diag_ok);

  cl.add("gram-symmetry-class", "secant-symmetry",
         bt.s_symmetric ? is_symmetric(s) : is_skew(s),
         bt.s_symmetric ? "symmetric" : "skew");

  if (!bt.s_symmetric && n >= cap + 2) {
    std::string witness;
    int count = 0;
    bool ok = principal_pfaffians_vanish(s, cap + 2, witness, count);
    cl.add("gram-pfaffian-cut", "secant-pfaffian", ok,
           ok ? count_witness(count, "vanishing Pfaffians") : witness);
  }
  if (bt.s_symmetric && n >= cap + 1) {
    std::string witness;
    int count = 0;
    bool ok = minors_vanish(s, cap + 1, witness, count);
    cl.add("gram-minor-cut", "secant-minor", ok,
           ok ? count_witness(count, "vanishing minors") : witness);
  }
  return rep;
}

// ── dimension table ─────────────────────────────────────────────────────────

int expected_k3_dimension(int d, int n) {
  static const int table[6][9] = {
      {8, 13, 18, 23, 28, 33, 38, 43, 48},      // d = 4
      {7, 13, 19, 25, 31, 37, 43, 49, 55},      // d = 5
      {9, 20, 30, 40, 49, 58, 67, 76, 85},      // d = 6
      {9, 20, 30, 40, 50, 60, 70, 80, 90},      // d = 7
      {10, 28, 51, 67, 82, 97, 112, 127, 142},  // d = 8
      {15, 33, 49, 65, 81, 97, 113, 129, 145},  // d = 9
  };
  if (d < 4 || d > 9 || n < 4 || n > 12) return -1;
  return table[d - 4][n - 4];
}

std::vector<TableCell> reproduce_dimension_table(int dmax, int nmax, uint64_t seed) {
  std::vector<TableCell> out;
  Rng master(seed);
  for (int d = 4; d <= dmax; ++d)
    for (int n = 4; n <= nmax; ++n) {
      TableCell cell;
      cell.d = d;
      cell.n = n;
      cell.expected = expected_k3_dimension(d, n);
      cell.mode = (d <= 7) ? RankMode::exact : RankMode::floating;
      cell.flagged = (d == 8 && n == 6);
      cell.computed = variety_dimension(
          Variety::k3, d, n, 3, master.substream(static_cast<uint64_t>(d) * 100 + n).next(),
          cell.mode);
      out.push_back(cell);
    }
  return out;
}

}  // namespace kinvar
