#include "momentcf/sampling.hpp"

#include <set>
#include <stdexcept>

namespace momentcf {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Sampler::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational Sampler::rational(std::int64_t num_lo, std::int64_t num_hi, std::int64_t max_den) {
  return make_rational(Integer(uniform(num_lo, num_hi)), Integer(uniform(1, max_den)));
}

Rational Sampler::unit_closed(std::int64_t max_den) {
  const std::int64_t den = uniform(1, max_den);
  return make_rational(Integer(uniform(0, den)), Integer(den));
}

Rational Sampler::unit_open(std::int64_t max_den) {
  const std::int64_t den = uniform(2, max_den);
  return make_rational(Integer(uniform(1, den - 1)), Integer(den));
}

std::vector<Rational> Sampler::g_interior(int n, std::int64_t max_den) {
  std::vector<Rational> g;
  g.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.push_back(unit_open(max_den));
  return g;
}

SFraction Sampler::sfrac_positive(int m, std::int64_t max_den) {
  std::vector<Rational> alpha{Rational(1)};
  for (int i = 0; i < m; ++i) {
    const std::int64_t den = uniform(1, max_den);
    alpha.push_back(make_rational(Integer(uniform(1, 2 * den)), Integer(den)));
  }
  return SFraction(std::move(alpha));
}

SFraction Sampler::sfrac_unit(int m, std::int64_t max_den) {
  std::vector<Rational> alpha{Rational(1)};
  for (int i = 0; i < m; ++i) alpha.push_back(unit_closed(max_den));
  return SFraction(std::move(alpha));
}

JFraction Sampler::jfraction(int gammas, int betas, std::int64_t range,
                             std::int64_t max_den) {
  std::vector<Rational> gamma, beta;
  gamma.reserve(static_cast<std::size_t>(gammas));
  beta.reserve(static_cast<std::size_t>(betas));
  for (int i = 0; i < gammas; ++i) {
    const std::int64_t den = uniform(1, max_den);
    gamma.push_back(make_rational(Integer(uniform(-range * den, range * den)), Integer(den)));
  }
  for (int i = 0; i < betas; ++i) {
    const std::int64_t den = uniform(1, max_den);
    beta.push_back(make_rational(Integer(uniform(-range * den, range * den)), Integer(den)));
  }
  return JFraction(std::move(gamma), std::move(beta));
}

DiscreteMeasure Sampler::measure_unit(int max_atoms, std::int64_t max_den) {
  const int count = static_cast<int>(uniform(1, max_atoms));
  std::set<Rational> locations;
  while (static_cast<int>(locations.size()) < count) locations.insert(unit_closed(max_den));
  std::vector<DiscreteMeasure::Atom> atoms;
  for (const Rational& x : locations) {
    const std::int64_t den = uniform(1, max_den);
    atoms.push_back({x, make_rational(Integer(uniform(1, 3 * den)), Integer(den))});
  }
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure Sampler::measure_squares(int max_atoms, std::int64_t max_den) {
  const int count = static_cast<int>(uniform(1, max_atoms));
  std::set<Rational> roots;
  while (static_cast<int>(roots.size()) < count) {
    const std::int64_t den = uniform(1, max_den);
    roots.insert(make_rational(Integer(uniform(0, 2 * den)), Integer(den)));
  }
  std::vector<DiscreteMeasure::Atom> atoms;
  for (const Rational& q : roots) {
    const std::int64_t den = uniform(1, max_den);
    atoms.push_back({q * q, make_rational(Integer(uniform(1, 2 * den)), Integer(den))});
  }
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure Sampler::measure_general(int max_atoms, std::int64_t range,
                                         std::int64_t max_den) {
  const int count = static_cast<int>(uniform(1, max_atoms));
  std::set<Rational> locations;
  while (static_cast<int>(locations.size()) < count) {
    const std::int64_t den = uniform(1, max_den);
    locations.insert(make_rational(Integer(uniform(-range * den, range * den)), Integer(den)));
  }
  std::vector<DiscreteMeasure::Atom> atoms;
  for (const Rational& x : locations) {
    const std::int64_t den = uniform(1, max_den);
    atoms.push_back({x, make_rational(Integer(uniform(1, 2 * den)), Integer(den))});
  }
  return DiscreteMeasure(std::move(atoms));
}

}  // namespace momentcf
