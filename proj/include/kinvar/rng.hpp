/// @file rng.hpp
/// @brief Seed-deterministic random streams and small-rational draws.
///
/// A SplitMix64 core with keyed substream derivation: every worker or trial
/// derives its own stream from (master seed, stream id), so results do not
/// depend on scheduling order. Draws used for kinematics are real rationals
/// with small numerators and denominators; downstream values live in Q(i).

#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "kinvar/scalar.hpp"

namespace kinvar {

/// Bounds for random rational draws (CLI-tunable).
struct RationalDrawSpec {
  long num_bound = 9;  // numerators uniform in [-num_bound, num_bound]
  long den_max = 3;    // denominators uniform in {1, ..., den_max}
};

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Child stream keyed by id; does not advance this stream.
  Rng substream(uint64_t id) const {
    uint64_t z = state_ ^ (0x632be59bd9b4e019ULL + id * 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  /// Uniform on [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Random real rational within the draw bounds (may be zero).
  mpq_class rational(const RationalDrawSpec& spec = {}) {
    long num = uniform(-spec.num_bound, spec.num_bound);
    long den = uniform(1, spec.den_max);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  /// Random nonzero real rational.
  mpq_class nonzero_rational(const RationalDrawSpec& spec = {}) {
    for (;;) {
      mpq_class q = rational(spec);
      if (q != 0) return q;
    }
  }

  GaussianRational scalar(const RationalDrawSpec& spec = {}) {
    return GaussianRational(rational(spec));
  }

  GaussianRational nonzero_scalar(const RationalDrawSpec& spec = {}) {
    return GaussianRational(nonzero_rational(spec));
  }

  double real_double() {  // uniform in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  uint64_t state_;
};

}  // namespace kinvar
