#pragma once

#include <optional>
#include <vector>

#include "momentcf/power_series.hpp"
#include "momentcf/rational.hpp"

namespace momentcf {

// Stieltjes-type continued fraction
//
//   alpha_0 / (1 - alpha_1 t / (1 - alpha_2 t / (1 - ...)))
//
// stored as the coefficient list (alpha_0 .. alpha_M); coefficients beyond
// the stored list count as zero, and two fractions are equal when their
// zero-padded lists agree.
//
// A list is *standard* when the first zero among alpha_1, alpha_2, ...
// forces every later stored coefficient to zero; standard lists make the
// representation of a series unique. sfrac_from_series and alpha_from_g
// always return standard lists. The constructor accepts arbitrary lists:
// exact uncontraction can legitimately produce non-standard ones.
class SFraction {
public:
  explicit SFraction(std::vector<Rational> alpha);  // needs at least alpha_0

  int size() const { return static_cast<int>(alpha_.size()); }
  int max_index() const { return size() - 1; }
  const Rational& alpha0() const { return alpha_.front(); }
  // alpha_i, zero for i beyond the stored list.
  Rational alpha_at(int i) const;
  const std::vector<Rational>& alpha() const { return alpha_; }

  bool is_standard() const;

  friend bool operator==(const SFraction& a, const SFraction& b);

private:
  std::vector<Rational> alpha_;
};

// Expand the fraction as a power series to the given order, exactly.
// a_n depends only on alpha_0..alpha_n; evaluation is bottom-up and every
// level's reciprocal has constant term 1, so it never fails.
PowerSeries series_from_sfrac(const SFraction& s, int order);

// Result of the peel-off recurrence with the failure reported in-band:
// alpha holds the coefficients determined before the failure level.
struct SFracExtraction {
  std::vector<Rational> alpha;
  std::optional<int> failure_level;
};

// Peel-off recurrence: h = (1 - 1/f)/t, alpha_{k+1} = h(0), f_next = h/h(0).
// h == 0 terminates with a standard zero tail; h(0) == 0 with h != 0 is the
// failure case. Requires f(0) != 0.
SFracExtraction try_sfrac_from_series(const PowerSeries& f);

// Unique standard coefficients alpha_0..alpha_N, N = f.order(), with
// series_from_sfrac(result, N) == f exactly. Throws NotSFractionRepresentable
// carrying the failure level.
SFraction sfrac_from_series(const PowerSeries& f);

}  // namespace momentcf
