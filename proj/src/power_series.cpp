#include "momentcf/power_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "momentcf/errors.hpp"

namespace momentcf {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("PowerSeries: a series holds at least a_0");
}

PowerSeries PowerSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s = zero(order);
  s.coeffs_[0] = 1;
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order < 0 || order > this->order())
    throw std::invalid_argument("PowerSeries::truncated: order out of range");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(),
                                           coeffs_.begin() + order + 1));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
  return PowerSeries(std::move(out));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = a[i] - b[i];
  return PowerSeries(std::move(out));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return PowerSeries(std::move(out));
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  std::vector<Rational> out = a.coeffs();
  for (Rational& x : out) x *= c;
  return PowerSeries(std::move(out));
}

PowerSeries reciprocal(const PowerSeries& f) {
  if (f[0] == 0) throw ReciprocalOfZeroConstantTerm();
  const int n = f.order();
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  const Rational inv0 = Rational(1) / f[0];
  r[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int k = 1; k <= m; ++k) acc += f[k] * r[static_cast<std::size_t>(m - k)];
    r[static_cast<std::size_t>(m)] = -inv0 * acc;
  }
  return PowerSeries(std::move(r));
}

PowerSeries aerate(const PowerSeries& a) {
  const int n = a.order();
  std::vector<Rational> out(2 * static_cast<std::size_t>(n) + 2);
  for (int i = 0; i <= n; ++i) out[2 * static_cast<std::size_t>(i)] = a[i];
  return PowerSeries(std::move(out));
}

PowerSeries even_subsequence(const PowerSeries& a) {
  const int n = a.order() / 2;
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = a[2 * i];
  return PowerSeries(std::move(out));
}

PowerSeries binomial_transform(const PowerSeries& a, const Rational& xi) {
  const int n_max = a.order();
  std::vector<Rational> xi_pow(static_cast<std::size_t>(n_max) + 1);
  xi_pow[0] = 1;
  for (int j = 1; j <= n_max; ++j) xi_pow[static_cast<std::size_t>(j)] = xi_pow[j - 1] * xi;

  std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
  std::vector<Integer> row{Integer(1)};
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      row.push_back(Integer(1));
      for (int k = n - 1; k >= 1; --k) row[static_cast<std::size_t>(k)] += row[k - 1];
    }
    Rational b(0);
    for (int k = 0; k <= n; ++k)
      b += Rational(row[static_cast<std::size_t>(k)]) * a[k] * xi_pow[static_cast<std::size_t>(n - k)];
    out[static_cast<std::size_t>(n)] = b;
  }
  return PowerSeries(std::move(out));
}

}  // namespace momentcf
