#include "momentcf/jfraction.hpp"

#include <algorithm>
#include <stdexcept>

#include "momentcf/errors.hpp"

namespace momentcf {

JFraction::JFraction(std::vector<Rational> gamma, std::vector<Rational> beta)
    : gamma_(std::move(gamma)), beta_(std::move(beta)) {}

Rational JFraction::gamma_at(int k) const {
  if (k < 0) throw std::invalid_argument("JFraction::gamma_at: negative index");
  return k < static_cast<int>(gamma_.size()) ? gamma_[static_cast<std::size_t>(k)]
                                             : Rational(0);
}

Rational JFraction::beta_at(int n) const {
  if (n < 1) throw std::invalid_argument("JFraction::beta_at: index is 1-based");
  return n <= static_cast<int>(beta_.size()) ? beta_[static_cast<std::size_t>(n - 1)]
                                             : Rational(0);
}

int JFraction::determined_order() const {
  return std::min(2 * static_cast<int>(gamma_.size()),
                  2 * static_cast<int>(beta_.size()) + 1);
}

bool operator==(const JFraction& a, const JFraction& b) {
  const int gn = static_cast<int>(std::max(a.gamma_.size(), b.gamma_.size()));
  for (int k = 0; k < gn; ++k)
    if (a.gamma_at(k) != b.gamma_at(k)) return false;
  const int bn = static_cast<int>(std::max(a.beta_.size(), b.beta_.size()));
  for (int n = 1; n <= bn; ++n)
    if (a.beta_at(n) != b.beta_at(n)) return false;
  return true;
}

PowerSeries series_from_jfrac(const JFraction& j, int order) {
  if (order < 0) throw std::invalid_argument("series_from_jfrac: negative order");
  // F_k = 1/(1 - gamma_k t - beta_{k+1} t^2 F_{k+1}); level k enters through
  // t^{2k}, so depth floor(order/2) suffices.
  PowerSeries f = PowerSeries::one(order);
  for (int k = order / 2; k >= 0; --k) {
    const Rational gk = j.gamma_at(k);
    const Rational bk1 = j.beta_at(k + 1);
    std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
    g[0] = 1;
    if (order >= 1) g[1] = -gk;
    for (int n = 2; n <= order; ++n)
      g[static_cast<std::size_t>(n)] = -bk1 * f[n - 2];
    f = reciprocal(PowerSeries(std::move(g)));
  }
  return f;
}

JFraction jfrac_from_series(const PowerSeries& f) {
  if (f[0] != 1)
    throw std::invalid_argument("jfrac_from_series: constant term must be 1 "
                                "(divide out a_0 first)");
  const int n_target = f.order();
  const std::size_t want_gammas = n_target >= 1 ? static_cast<std::size_t>((n_target - 1) / 2) + 1 : 0;
  const std::size_t want_betas = static_cast<std::size_t>(n_target / 2);

  std::vector<Rational> gamma, beta;
  PowerSeries cur = f;
  int level = 0;
  while (cur.order() >= 1) {
    const PowerSeries r = PowerSeries::one(cur.order()) - reciprocal(cur);
    gamma.push_back(r[1]);
    if (cur.order() < 2) break;
    // s = (r - gamma t) / t^2.
    std::vector<Rational> tail(r.coeffs().begin() + 2, r.coeffs().end());
    PowerSeries s{std::move(tail)};
    if (s.is_zero()) {
      // Terminated fraction; the remaining coefficients are undetermined and
      // taken to be zero by convention.
      beta.push_back(Rational(0));
      break;
    }
    if (s[0] == 0) throw NotJFractionRepresentable(level + 1);
    beta.push_back(s[0]);
    cur = (Rational(1) / s[0]) * s;
    ++level;
  }
  gamma.resize(want_gammas, Rational(0));
  beta.resize(want_betas, Rational(0));
  return JFraction(std::move(gamma), std::move(beta));
}

JFraction contract(const SFraction& s) {
  if (s.alpha0() != 1)
    throw std::invalid_argument("contract: alpha_0 must be 1 "
                                "(the leading constant is the caller's)");
  const int m = s.max_index();  // alpha_1..alpha_m stored
  std::vector<Rational> gamma, beta;
  if (m >= 1) {
    gamma.reserve(static_cast<std::size_t>((m - 1) / 2) + 1);
    gamma.push_back(s.alpha_at(1));
    for (int n = 1; 2 * n + 1 <= m; ++n)
      gamma.push_back(s.alpha_at(2 * n) + s.alpha_at(2 * n + 1));
  }
  for (int n = 1; 2 * n <= m; ++n)
    beta.push_back(s.alpha_at(2 * n - 1) * s.alpha_at(2 * n));
  return JFraction(std::move(gamma), std::move(beta));
}

SFraction uncontract(const JFraction& j) {
  const int gammas = static_cast<int>(j.gamma().size());
  const int betas = static_cast<int>(j.beta().size());
  std::vector<Rational> alpha{Rational(1)};
  if (gammas == 0) return SFraction(std::move(alpha));
  alpha.push_back(j.gamma_at(0));
  for (int n = 1; n <= betas; ++n) {
    const Rational& odd = alpha.back();  // alpha'_{2n-1}
    Rational even;
    if (odd == 0) {
      if (j.beta_at(n) != 0) throw UncontractionBreakdown(n);
      even = 0;  // 0/0: any value reproduces beta_n = 0, pick the canonical one
    } else {
      even = j.beta_at(n) / odd;
    }
    alpha.push_back(even);
    if (n >= gammas) break;  // gamma_n unavailable, alpha'_{2n+1} undetermined
    alpha.push_back(j.gamma_at(n) - even);
  }
  return SFraction(std::move(alpha));
}

JFraction jfrac_shift(const JFraction& j, const Rational& xi) {
  std::vector<Rational> gamma = j.gamma();
  for (Rational& g : gamma) g += xi;
  return JFraction(std::move(gamma), j.beta());
}

}  // namespace momentcf
