#include "momentcf/measure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "momentcf/errors.hpp"

namespace momentcf {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  std::map<Rational, Rational> merged;
  for (const Atom& a : atoms) {
    if (a.weight < 0)
      throw std::invalid_argument("DiscreteMeasure: negative weight at " +
                                  to_string(a.location));
    if (a.weight == 0) continue;
    merged[a.location] += a.weight;
  }
  atoms_.reserve(merged.size());
  for (auto& [location, weight] : merged) atoms_.push_back({location, weight});
}

DiscreteMeasure DiscreteMeasure::point_mass(Rational location, Rational weight) {
  return DiscreteMeasure({{std::move(location), std::move(weight)}});
}

Rational DiscreteMeasure::total_mass() const {
  Rational mass(0);
  for (const Atom& a : atoms_) mass += a.weight;
  return mass;
}

PowerSeries moments(const DiscreteMeasure& mu, int n_max) {
  if (n_max < 0) throw std::invalid_argument("moments: negative order");
  std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
  for (const auto& atom : mu.atoms()) {
    Rational power(1);
    for (int n = 0; n <= n_max; ++n) {
      a[static_cast<std::size_t>(n)] += atom.weight * power;
      power *= atom.location;
    }
  }
  return PowerSeries(std::move(a));
}

DiscreteMeasure translate(const DiscreteMeasure& mu, const Rational& xi) {
  std::vector<DiscreteMeasure::Atom> atoms = mu.atoms();
  for (auto& a : atoms) a.location += xi;
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure sqrt_aerate(const DiscreteMeasure& mu) {
  std::vector<DiscreteMeasure::Atom> atoms;
  for (const auto& a : mu.atoms()) {
    const auto root = exact_sqrt(a.location);
    if (!root) throw NonSquareAtom(a.location);
    if (*root == 0) {
      atoms.push_back({Rational(0), a.weight});
    } else {
      const Rational half = a.weight / 2;
      atoms.push_back({-*root, half});
      atoms.push_back({*root, half});
    }
  }
  return DiscreteMeasure(std::move(atoms));
}

}  // namespace momentcf
