#include "momentcf/oracle.hpp"

#include <stdexcept>
#include <utility>

#include "momentcf/errors.hpp"

namespace momentcf {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return Rational(1);

  int sign = 1;
  Rational prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

Rational hankel_minor(const PowerSeries& a, int size, int shift) {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(size),
                                       std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[i + j + shift];
  return determinant(std::move(m));
}

}  // namespace

HankelReport hankel_report(const PowerSeries& a) {
  const int n = a.order();
  HankelReport report;
  const int h0_count = n / 2 + 1;
  const int h1_count = n >= 1 ? (n - 1) / 2 + 1 : 0;
  report.dets_h0.reserve(static_cast<std::size_t>(h0_count));
  report.dets_h1.reserve(static_cast<std::size_t>(h1_count));
  for (int k = 0; k < h0_count; ++k)
    report.dets_h0.push_back(hankel_minor(a, k + 1, 0));
  for (int k = 0; k < h1_count; ++k)
    report.dets_h1.push_back(hankel_minor(a, k + 1, 1));

  for (int k = 0; k < h0_count && !report.first_negative; ++k) {
    if (report.dets_h0[static_cast<std::size_t>(k)] < 0)
      report.first_negative = HankelReport::Position{0, k};
    else if (k < h1_count && report.dets_h1[static_cast<std::size_t>(k)] < 0)
      report.first_negative = HankelReport::Position{1, k};
  }
  return report;
}

std::optional<CmViolation> completely_monotone_check(const PowerSeries& a) {
  const int n_max = a.order();
  std::vector<Rational> row = a.coeffs();
  for (int k = 0; k <= n_max; ++k) {
    const bool negate = (k % 2) == 1;
    for (int n = 0; n + k <= n_max; ++n) {
      const Rational& v = row[static_cast<std::size_t>(n)];
      if ((negate ? -v : v) < 0) return CmViolation{k, n};
    }
    for (int n = 0; n + k + 1 <= n_max; ++n)
      row[static_cast<std::size_t>(n)] = row[static_cast<std::size_t>(n) + 1] -
                                         row[static_cast<std::size_t>(n)];
  }
  return std::nullopt;
}

std::vector<Rational> catalan_numbers(int n_max) {
  if (n_max < 0) throw std::invalid_argument("catalan_numbers: negative n");
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(n_max) + 1);
  c.push_back(Rational(1));
  for (int n = 0; n < n_max; ++n) {
    Rational next(0);
    for (int k = 0; k <= n; ++k)
      next += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n - k)];
    c.push_back(next);
  }
  return c;
}

std::optional<int> catalan_audit(const SFraction& alpha, int order) {
  for (int i = 0; i < alpha.size(); ++i) {
    const Rational ai = alpha.alpha_at(i);
    if (ai < 0 || ai > 1) throw AlphaOutOfRange(i);
  }
  const PowerSeries a = series_from_sfrac(alpha, order);
  const std::vector<Rational> c = catalan_numbers(order);
  for (int n = 0; n <= order; ++n)
    if (a[n] < 0 || a[n] > c[static_cast<std::size_t>(n)]) return n;
  return std::nullopt;
}

}  // namespace momentcf
