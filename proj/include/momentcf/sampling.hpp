#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "momentcf/jfraction.hpp"
#include "momentcf/measure.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/sfraction.hpp"

namespace momentcf {

// Deterministic sample generators for property tests and the demo command.
// Same seed, same platform-independent sequence (raw engine output reduced
// by modulo; the slight bias is irrelevant here).
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive

  // num/den with num uniform in [num_lo, num_hi], den uniform in [1, max_den].
  Rational rational(std::int64_t num_lo, std::int64_t num_hi, std::int64_t max_den);
  Rational unit_closed(std::int64_t max_den = 12);  // [0, 1]
  Rational unit_open(std::int64_t max_den = 12);    // (0, 1)

  std::vector<Rational> g_interior(int n, std::int64_t max_den = 12);

  // alpha_0 = 1, alpha_1..alpha_m nonzero in (0, 2].
  SFraction sfrac_positive(int m, std::int64_t max_den = 8);
  // alpha_0 = 1, alpha_1..alpha_m in [0, 1].
  SFraction sfrac_unit(int m, std::int64_t max_den = 8);

  JFraction jfraction(int gammas, int betas, std::int64_t range = 2,
                      std::int64_t max_den = 6);

  // 1..max_atoms distinct atoms in [0, 1], positive weights.
  DiscreteMeasure measure_unit(int max_atoms, std::int64_t max_den = 12);
  // Atoms at q^2 for rational q >= 0 (so sqrt_aerate applies), distinct.
  DiscreteMeasure measure_squares(int max_atoms, std::int64_t max_den = 6);
  // Atoms anywhere in [-range, range], distinct, positive weights.
  DiscreteMeasure measure_general(int max_atoms, std::int64_t range = 3,
                                  std::int64_t max_den = 8);

private:
  std::mt19937_64 rng_;
};

}  // namespace momentcf
