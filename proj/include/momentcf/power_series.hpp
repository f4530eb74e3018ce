#pragma once

#include <vector>

#include "momentcf/rational.hpp"

namespace momentcf {

// Finite prefix (a_0 .. a_N) of a formal power series, which doubles as a
// moment sequence prefix. The truncation order N is part of the value;
// binary operations first truncate both operands to the smaller order.
class PowerSeries {
public:
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries zero(int order);
  static PowerSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  // Prefix of the given (smaller or equal) order.
  PowerSeries truncated(int order) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

private:
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& a);

// 1/f to the order of f; requires f(0) != 0 (ReciprocalOfZeroConstantTerm).
// Satisfies f * reciprocal(f) == 1 + O(t^{order+1}).
PowerSeries reciprocal(const PowerSeries& f);

// (a_0, 0, a_1, 0, ..., a_N, 0): output order 2N+1.
PowerSeries aerate(const PowerSeries& a);

// (a_0, a_2, a_4, ...): output order floor(N/2). Inverse of aerate.
PowerSeries even_subsequence(const PowerSeries& a);

// b_n = sum_{k=0}^{n} C(n,k) a_k xi^{n-k}; same order as the input.
// binomial_transform(., xi) and binomial_transform(., -xi) are inverse.
PowerSeries binomial_transform(const PowerSeries& a, const Rational& xi);

}  // namespace momentcf
