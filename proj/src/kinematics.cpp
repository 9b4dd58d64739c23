#include "kinvar/kinematics.hpp"

#include <stdexcept>

namespace kinvar {

namespace {

constexpr int kRetryBudget = 100;

bool vec_zero(const QVec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (v(i) != Q(0)) return false;
  return true;
}

}  // namespace

QVec null_from_parameters(int d, const Q& u, const std::vector<Q>& xs) {
  if (d < 3) throw std::invalid_argument("null_from_parameters: d >= 3 required");
  if (u == Q(0)) throw std::invalid_argument("null_from_parameters: u must be nonzero");
  if (static_cast<int>(xs.size()) != d - 2)
    throw std::invalid_argument("null_from_parameters: need d - 2 transverse values");
  QVec p(d);
  Q sq(0);
  for (int j = 2; j < d; ++j) {
    p(j) = xs[j - 2];
    sq += p(j) * p(j);
  }
  Q half = Q::ratio(1, 2);
  p(0) = (u + sq / u) * half;
  p(1) = (sq / u - u) * half;
  return p;
}

QVec sample_null_momentum(int d, Rng& rng, const RationalDrawSpec& spec) {
  if (d < 3) throw std::invalid_argument("sample_null_momentum: d >= 3 required");
  Q u = rng.nonzero_scalar(spec);
  std::vector<Q> xs;
  for (int j = 2; j < d; ++j) xs.push_back(rng.scalar(spec));
  return null_from_parameters(d, u, xs);
}

KinematicConfiguration sample_configuration(int d, int n, bool conserve, Rng& rng,
                                            const RationalDrawSpec& spec) {
  if (d < 3) throw std::invalid_argument("sample_configuration: d >= 3 required");
  if (n < 1 || (conserve && n < 4))
    throw std::invalid_argument("sample_configuration: conserve requires n >= 4");

  KinematicConfiguration cfg;
  cfg.d = d;
  cfg.n = n;
  cfg.conserves = conserve;

  if (!conserve) {
    for (int i = 0; i < n; ++i) {
      QVec p = sample_null_momentum(d, rng, spec);
      if (vec_zero(p)) {
        --i;
        continue;
      }
      cfg.momenta.push_back(std::move(p));
    }
    return cfg;
  }

  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<QVec> ps;
    bool degenerate = false;
    for (int i = 0; i + 1 < n; ++i) {
      QVec p = sample_null_momentum(d, rng, spec);
      if (vec_zero(p)) {
        degenerate = true;
        break;
      }
      ps.push_back(std::move(p));
    }
    if (degenerate) continue;

    // p_n = -(sum) is null iff 2tA + 2B = 0 after p_1 <- t p_1
    Q a(0), b(0);
    for (size_t j = 1; j < ps.size(); ++j) a += minkowski(ps[0], ps[j]);
    for (size_t i = 1; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) b += minkowski(ps[i], ps[j]);
    if (a == Q(0) || b == Q(0)) continue;
    Q t = -(b / a);
    ps[0] = QVec(t * ps[0]);

    QVec last = QVec::Zero(d);
    for (const QVec& p : ps) last -= p;
    if (vec_zero(last) || minkowski(last, last) != Q(0))
      throw std::logic_error("sample_configuration: completion not null");
    ps.push_back(std::move(last));
    cfg.momenta = std::move(ps);
    return cfg;
  }
  throw std::runtime_error("sample_configuration: retry budget exhausted");
}

KinematicConfiguration sample_isotropic_triple(int d, Rng& rng, const RationalDrawSpec& spec) {
  if (d < 4) throw std::invalid_argument("sample_isotropic_triple: d >= 4 required");
  QVec v1 = QVec::Zero(d), v2 = QVec::Zero(d);
  v1(0) = Q(1);
  v1(1) = Q(1);
  v2(2) = Q(1);
  v2(3) = Q::i();
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    QVec p1 = QVec(rng.scalar(spec) * v1 + rng.scalar(spec) * v2);
    QVec p2 = QVec(rng.scalar(spec) * v1 + rng.scalar(spec) * v2);
    QVec p3 = QVec(-p1 - p2);
    if (vec_zero(p1) || vec_zero(p2) || vec_zero(p3)) continue;
    KinematicConfiguration cfg;
    cfg.d = d;
    cfg.n = 3;
    cfg.conserves = true;
    cfg.momenta = {std::move(p1), std::move(p2), std::move(p3)};
    return cfg;
  }
  throw std::runtime_error("sample_isotropic_triple: retry budget exhausted");
}

QMat mandelstam_matrix(const KinematicConfiguration& cfg) {
  QMat s(cfg.n, cfg.n);
  for (int i = 0; i < cfg.n; ++i)
    for (int j = 0; j < cfg.n; ++j) s(i, j) = minkowski(cfg.momenta[i], cfg.momenta[j]);
  return s;
}

std::vector<Q> constraint_residuals(const KinematicConfiguration& cfg) {
  std::vector<Q> res;
  res.reserve(cfg.n + cfg.d);
  for (const QVec& p : cfg.momenta) res.push_back(minkowski(p, p));
  for (int j = 0; j < cfg.d; ++j) {
    Q acc(0);
    for (const QVec& p : cfg.momenta) acc += p(j);
    res.push_back(acc);
  }
  return res;
}

CheckList verify_mandelstam(const KinematicConfiguration& cfg) {
  CheckList out;
  QMat s = mandelstam_matrix(cfg);
  out.add("symmetric", "mandelstam-symmetric", is_symmetric(s));
  bool diag = true;
  for (int i = 0; i < cfg.n; ++i) diag = diag && s(i, i) == Q(0);
  out.add("zero_diagonal", "mandelstam-zero-diagonal", diag);
  if (cfg.conserves) {
    bool rows = true;
    for (int i = 0; i < cfg.n; ++i) {
      Q acc(0);
      for (int j = 0; j < cfg.n; ++j) acc += s(i, j);
      rows = rows && acc == Q(0);
    }
    out.add("zero_row_sums", "mandelstam-zero-row-sums", rows);
  }
  out.add("rank_bound", "mandelstam-rank-bound", rank(s) <= cfg.d);
  return out;
}

}  // namespace kinvar
