#pragma once

#include <vector>

#include "momentcf/power_series.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/sfraction.hpp"

namespace momentcf {

// Jacobi-type continued fraction
//
//   1 / (1 - gamma_0 t - beta_1 t^2 / (1 - gamma_1 t - beta_2 t^2 / ...))
//
// with gamma_0..gamma_p and beta_1..beta_q stored explicitly; missing
// coefficients count as zero. The stored data pins the expansion exactly
// through order determined_order() = min(2(p+1), 2q+1): a_n needs
// gamma_0..gamma_{floor((n-1)/2)} and beta_1..beta_{floor(n/2)}.
class JFraction {
public:
  JFraction(std::vector<Rational> gamma, std::vector<Rational> beta);

  const std::vector<Rational>& gamma() const { return gamma_; }
  const std::vector<Rational>& beta() const { return beta_; }
  Rational gamma_at(int k) const;  // gamma_k, zero beyond stored
  Rational beta_at(int n) const;   // beta_n (1-based), zero beyond stored
  int determined_order() const;

  // Zero-padded equality, mirroring SFraction.
  friend bool operator==(const JFraction& a, const JFraction& b);

private:
  std::vector<Rational> gamma_;
  std::vector<Rational> beta_;
};

// Expand to a power series of the given order, exactly.
PowerSeries series_from_jfrac(const JFraction& j, int order);

// Inverse expansion by the t^2 peel-off; requires f(0) == 1 (callers divide
// out a_0 first). Yields gamma_0..gamma_{floor((N-1)/2)} and
// beta_1..beta_{floor(N/2)} for N = f.order(). A residual with zero t^2
// coefficient but nonzero tail throws NotJFractionRepresentable.
JFraction jfrac_from_series(const PowerSeries& f);

// Even contraction: gamma_0 = alpha_1, gamma_n = alpha_{2n} + alpha_{2n+1},
// beta_n = alpha_{2n-1} alpha_{2n}. Requires alpha_0 == 1. With alpha_1..
// alpha_M stored, produces gamma_0..gamma_{floor((M-1)/2)} and
// beta_1..beta_{floor(M/2)} — exactly the determined coefficients.
JFraction contract(const SFraction& s);

// Inverse solve: alpha'_1 = gamma_0, alpha'_{2n} = beta_n / alpha'_{2n-1},
// alpha'_{2n+1} = gamma_n - alpha'_{2n}. When alpha'_{2n-1} = 0 and
// beta_n = 0 the quotient is taken to be 0; when beta_n != 0 the solve is
// impossible and UncontractionBreakdown(n) is thrown. The result satisfies
// contract(uncontract(j)) == j and may be non-standard.
SFraction uncontract(const JFraction& j);

// gamma_i -> gamma_i + xi for every stored gamma; beta unchanged. The series
// of the result is the xi-binomial transform of the series of j.
JFraction jfrac_shift(const JFraction& j, const Rational& xi);

}  // namespace momentcf
