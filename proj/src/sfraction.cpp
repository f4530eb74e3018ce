#include "momentcf/sfraction.hpp"

#include <stdexcept>

#include "momentcf/errors.hpp"

namespace momentcf {

SFraction::SFraction(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty())
    throw std::invalid_argument("SFraction: needs at least alpha_0");
}

Rational SFraction::alpha_at(int i) const {
  if (i < 0) throw std::invalid_argument("SFraction::alpha_at: negative index");
  return i < size() ? alpha_[static_cast<std::size_t>(i)] : Rational(0);
}

bool SFraction::is_standard() const {
  bool seen_zero = false;
  for (int i = 1; i < size(); ++i) {
    if (seen_zero && alpha_[static_cast<std::size_t>(i)] != 0) return false;
    if (alpha_[static_cast<std::size_t>(i)] == 0) seen_zero = true;
  }
  return true;
}

bool operator==(const SFraction& a, const SFraction& b) {
  const int n = std::max(a.size(), b.size());
  for (int i = 0; i < n; ++i)
    if (a.alpha_at(i) != b.alpha_at(i)) return false;
  return true;
}

PowerSeries series_from_sfrac(const SFraction& s, int order) {
  if (order < 0) throw std::invalid_argument("series_from_sfrac: negative order");
  // Bottom-up: F = 1, then F <- 1/(1 - alpha_k t F) for k = order..1.
  // Level k enters through t^k, so depth `order` suffices, and the argument
  // of each reciprocal has constant term 1.
  PowerSeries f = PowerSeries::one(order);
  for (int k = order; k >= 1; --k) {
    const Rational ak = s.alpha_at(k);
    if (ak == 0) {
      f = PowerSeries::one(order);
      continue;
    }
    std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
    g[0] = 1;
    for (int n = 1; n <= order; ++n)
      g[static_cast<std::size_t>(n)] = -ak * f[n - 1];
    f = reciprocal(PowerSeries(std::move(g)));
  }
  return s.alpha0() * f;
}

SFracExtraction try_sfrac_from_series(const PowerSeries& f) {
  if (f[0] == 0) throw ReciprocalOfZeroConstantTerm();
  const int n_target = f.order();
  SFracExtraction out;
  out.alpha.reserve(static_cast<std::size_t>(n_target) + 1);
  out.alpha.push_back(f[0]);

  PowerSeries cur = (Rational(1) / f[0]) * f;  // constant term 1, order N
  for (int level = 1; level <= n_target; ++level) {
    // cur has order n_target - level + 1 >= 1 here.
    const PowerSeries r = PowerSeries::one(cur.order()) - reciprocal(cur);
    // h = r / t.
    std::vector<Rational> h(r.coeffs().begin() + 1, r.coeffs().end());
    PowerSeries hs{std::move(h)};
    if (hs.is_zero()) {
      // Legitimate termination: the remaining coefficients are zero.
      out.alpha.resize(static_cast<std::size_t>(n_target) + 1, Rational(0));
      return out;
    }
    if (hs[0] == 0) {
      out.failure_level = level;
      return out;
    }
    out.alpha.push_back(hs[0]);
    if (level == n_target) break;
    cur = (Rational(1) / hs[0]) * hs;
  }
  return out;
}

SFraction sfrac_from_series(const PowerSeries& f) {
  SFracExtraction ex = try_sfrac_from_series(f);
  if (ex.failure_level) throw NotSFractionRepresentable(*ex.failure_level);
  return SFraction(std::move(ex.alpha));
}

}  // namespace momentcf
