#pragma once

#include <vector>

#include "momentcf/power_series.hpp"
#include "momentcf/rational.hpp"

namespace momentcf {

// Finitely many rational atoms with positive rational weights. Locations are
// pairwise distinct and kept sorted; construction merges duplicate locations,
// drops zero weights and rejects negative ones. Total mass is the weight sum,
// no normalization is imposed.
class DiscreteMeasure {
public:
  struct Atom {
    Rational location;
    Rational weight;
    friend bool operator==(const Atom&, const Atom&) = default;
  };

  explicit DiscreteMeasure(std::vector<Atom> atoms);
  static DiscreteMeasure point_mass(Rational location, Rational weight = Rational(1));

  const std::vector<Atom>& atoms() const { return atoms_; }
  Rational total_mass() const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

private:
  std::vector<Atom> atoms_;
};

// a_n = sum_i w_i x_i^n for n = 0..n_max, exact.
PowerSeries moments(const DiscreteMeasure& mu, int n_max);

// Shift every atom by xi. moments(translate(mu, xi), N) equals the
// xi-binomial transform of moments(mu, N).
DiscreteMeasure translate(const DiscreteMeasure& mu, const Rational& xi);

// Image of mu under x -> +-sqrt(x), half the weight on each sign; an atom at
// 0 keeps its full weight and appears once. Every location must be the square
// of a rational (NonSquareAtom otherwise). The moments of the result are the
// aeration of the moments of mu.
DiscreteMeasure sqrt_aerate(const DiscreteMeasure& mu);

}  // namespace momentcf
