#include <doctest.h>

#include "momentcf/errors.hpp"
#include "momentcf/sampling.hpp"
#include "momentcf/sfraction.hpp"
#include "support/oracles.hpp"

using namespace momentcf;

TEST_CASE("all-ones coefficients give the Catalan numbers") {
  const SFraction ones(std::vector<Rational>(6, Rational(1)));
  CHECK(series_from_sfrac(ones, 5) == PowerSeries({1, 1, 2, 5, 14, 42}));
}

TEST_CASE("a single coefficient gives a geometric series") {
  const SFraction s({1, {1, 3}});
  CHECK(series_from_sfrac(s, 4) ==
        PowerSeries({1, {1, 3}, {1, 9}, {1, 27}, {1, 81}}));
}

TEST_CASE("the series behind the harmonic-prefix coefficients") {
  const SFraction s({1, {1, 2}, {1, 6}, {1, 3}, {1, 5}});
  CHECK(series_from_sfrac(s, 4) == PowerSeries({1, {1, 2}, {1, 3}, {1, 4}, {1, 5}}));
}

TEST_CASE("expansion of 1/(n+1) and of n!") {
  CHECK(sfrac_from_series(PowerSeries({1, {1, 2}, {1, 3}, {1, 4}, {1, 5}})) ==
        SFraction({1, {1, 2}, {1, 6}, {1, 3}, {1, 5}}));
  CHECK(sfrac_from_series(PowerSeries({1, 1, 2, 6, 24})) == SFraction({1, 1, 1, 2, 2}));
}

TEST_CASE("aerated sequences are not S-fraction representable") {
  try {
    sfrac_from_series(PowerSeries({1, 0, 1, 0, 1}));
    FAIL("expected NotSFractionRepresentable");
  } catch (const NotSFractionRepresentable& e) {
    CHECK(e.level() == 1);
  }
  const SFracExtraction ex = try_sfrac_from_series(PowerSeries({1, 0, 1, 0, 1}));
  REQUIRE(ex.failure_level);
  CHECK(*ex.failure_level == 1);
  CHECK(ex.alpha == std::vector<Rational>{1});
}

TEST_CASE("terminating series get a standard zero tail") {
  // moments of the point mass at 1/2: 1/(1 - t/2)
  const SFraction s = sfrac_from_series(PowerSeries({1, {1, 2}, {1, 4}, {1, 8}}));
  CHECK(s == SFraction({1, {1, 2}, 0, 0}));
  CHECK(s.size() == 4);
  CHECK(s.is_standard());
}

TEST_CASE("zero-padded equality and standardness") {
  CHECK(SFraction({1, {1, 2}}) == SFraction({1, {1, 2}, 0, 0}));
  CHECK(SFraction({1, 1}) != SFraction({1, 1, 1}));
  CHECK(SFraction({1, 1, 0, 0}).is_standard());
  CHECK(!SFraction({1, 1, 0, 2}).is_standard());
  CHECK(SFraction({1}).is_standard());
}

TEST_CASE("series_from_sfrac requires a_0 != 0 on inversion only") {
  CHECK_THROWS_AS(sfrac_from_series(PowerSeries({0, 1})), ReciprocalOfZeroConstantTerm);
}

TEST_CASE("series matches the weighted-path oracle") {
  Sampler sampler(101);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = static_cast<int>(sampler.uniform(0, 7));
    std::vector<Rational> alpha{sampler.rational(1, 4, 3)};
    for (int i = 0; i < m; ++i) {
      Rational a = sampler.rational(-4, 4, 4);
      if (a == 0) a = 1;
      alpha.push_back(a);
    }
    const SFraction s(std::move(alpha));
    CHECK(series_from_sfrac(s, 7) == oracles::sfrac_series_by_paths(s, 7));
  }
}

TEST_CASE("roundtrip on random standard coefficients") {
  Sampler sampler(102);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = static_cast<int>(sampler.uniform(0, 10));
    std::vector<Rational> alpha{sampler.rational(1, 5, 4)};
    for (int i = 0; i < m; ++i) {
      Rational a = sampler.rational(-5, 5, 5);
      if (a == 0) a = Rational(1, 2);  // keep the list standard with nonzero entries
      alpha.push_back(a);
    }
    const SFraction s(std::move(alpha));
    CHECK(sfrac_from_series(series_from_sfrac(s, m)) == s);
  }
}

TEST_CASE("a_n depends only on alpha_0..alpha_n") {
  Sampler sampler(103);
  for (int trial = 0; trial < 30; ++trial) {
    const SFraction s = sampler.sfrac_positive(9);
    const int n = static_cast<int>(sampler.uniform(0, 8));
    std::vector<Rational> changed = s.alpha();
    changed[static_cast<std::size_t>(n) + 1] += sampler.rational(1, 3, 2);
    CHECK(series_from_sfrac(s, n) == series_from_sfrac(SFraction(changed), n));
  }
}

TEST_CASE("a_n is monotone in alpha on alpha >= 0") {
  Sampler sampler(104);
  for (int trial = 0; trial < 40; ++trial) {
    const SFraction lo = sampler.sfrac_unit(10);
    std::vector<Rational> hi = lo.alpha();
    for (std::size_t i = 1; i < hi.size(); ++i)
      hi[i] += (Rational(1) - hi[i]) * sampler.unit_closed();
    const PowerSeries a = series_from_sfrac(lo, 10);
    const PowerSeries b = series_from_sfrac(SFraction(hi), 10);
    for (int n = 0; n <= 10; ++n) CHECK(a[n] <= b[n]);
  }
}
