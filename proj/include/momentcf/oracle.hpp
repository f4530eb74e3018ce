#pragma once

#include <optional>
#include <vector>

#include "momentcf/power_series.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/sfraction.hpp"

namespace momentcf {

// Independent brute-force checks. Nothing here calls the continued-fraction
// or Wall code paths; these are the cross-examination side of the library.

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational determinant(std::vector<std::vector<Rational>> m);

// Leading principal Hankel determinants of (a_{i+j}) and of the shifted
// (a_{i+j+1}), each computed independently by exact elimination.
// dets_h0[k] is the (k+1) x (k+1) determinant, k = 0..floor(N/2);
// dets_h1[k] likewise, k = 0..floor((N-1)/2). first_negative scans by size,
// H0 before H1 at each size, and reports the first strictly negative entry.
// The report exposes raw signs only; what counts as "consistent" for
// degenerate (zero-determinant) prefixes is classify's policy, not ours.
struct HankelReport {
  struct Position {
    int table;  // 0 = H0, 1 = H1
    int index;
    friend bool operator==(const Position&, const Position&) = default;
  };
  std::vector<Rational> dets_h0;
  std::vector<Rational> dets_h1;
  std::optional<Position> first_negative;
};

HankelReport hankel_report(const PowerSeries& a);

// First (k, n), scanning k = 0,1,.. then n, with (-1)^k Delta^k a_n < 0 in
// the finite difference table ((Delta a)_n = a_{n+1} - a_n, k + n <= N);
// nullopt when the prefix is completely monotone as far as it goes.
struct CmViolation {
  int k;
  int n;
  friend bool operator==(const CmViolation&, const CmViolation&) = default;
};

std::optional<CmViolation> completely_monotone_check(const PowerSeries& a);

// C_0..C_{n_max} by the convolution recurrence C_{n+1} = sum C_k C_{n-k}.
std::vector<Rational> catalan_numbers(int n_max);

// Checks 0 <= a_n <= C_n for a = series_from_sfrac(alpha, order); returns
// the first violating n (expected: none). Every stored coefficient must lie
// in [0,1], otherwise AlphaOutOfRange.
std::optional<int> catalan_audit(const SFraction& alpha, int order);

}  // namespace momentcf
