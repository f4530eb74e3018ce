#include "momentcf/wall.hpp"

#include <limits>
#include <stdexcept>

#include "momentcf/errors.hpp"

namespace momentcf {

const char* to_string(WallStatus s) {
  switch (s) {
    case WallStatus::HausdorffConsistent: return "HausdorffConsistent";
    case WallStatus::RejectedGOutOfRange: return "RejectedGOutOfRange";
    case WallStatus::RejectedDegenerateDivision: return "RejectedDegenerateDivision";
    case WallStatus::NotSFractionRepresentable: return "NotSFractionRepresentable";
    case WallStatus::PatternViolation: return "PatternViolation";
  }
  return "?";
}

const char* to_string(MomentClass c) {
  switch (c) {
    case MomentClass::HausdorffConsistent: return "HausdorffConsistent";
    case MomentClass::StieltjesConsistentOnly: return "StieltjesConsistentOnly";
    case MomentClass::HamburgerConsistentOnly: return "HamburgerConsistentOnly";
    case MomentClass::Inconsistent: return "Inconsistent";
  }
  return "?";
}

Verdict g_from_alpha(const SFraction& alpha) {
  if (alpha.alpha0() < 0)
    throw std::invalid_argument("g_from_alpha: alpha_0 (the constant c) must be >= 0");
  const int n_max = alpha.max_index();

  Verdict v;
  v.attempted_g.reserve(static_cast<std::size_t>(n_max));
  std::optional<int> range_index;
  Rational range_value;

  for (int n = 1; n <= n_max; ++n) {
    Rational gn;
    if (n == 1) {
      gn = alpha.alpha_at(1);
    } else {
      const Rational d = Rational(1) - v.attempted_g.back();
      if (d == 0) {
        if (alpha.alpha_at(n) == 0) {
          gn = 0;  // undetermined, canonical choice
        } else if (range_index && *range_index < n) {
          v.status = WallStatus::RejectedGOutOfRange;
          v.index = *range_index;
          v.value = range_value;
          return v;
        } else {
          v.status = WallStatus::RejectedDegenerateDivision;
          v.index = n;
          return v;
        }
      } else {
        gn = alpha.alpha_at(n) / d;
      }
    }
    v.attempted_g.push_back(gn);
    if (!range_index && (gn < 0 || gn > 1)) {
      range_index = n;
      range_value = gn;
    }
  }

  if (range_index) {
    v.status = WallStatus::RejectedGOutOfRange;
    v.index = *range_index;
    v.value = range_value;
    return v;
  }
  v.status = WallStatus::HausdorffConsistent;
  v.params = WallParams{alpha.alpha0(), v.attempted_g};
  return v;
}

SFraction alpha_from_g(const WallParams& w) {
  if (w.c < 0) throw std::invalid_argument("alpha_from_g: c must be >= 0");
  for (std::size_t i = 0; i < w.g.size(); ++i)
    if (w.g[i] < 0 || w.g[i] > 1)
      throw GOutOfRange(static_cast<int>(i) + 1, w.g[i]);

  const std::size_t n_max = w.g.size();
  std::vector<Rational> alpha;
  alpha.reserve(n_max + 1);
  alpha.push_back(w.c);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational an = n == 1 ? w.g[0] : (Rational(1) - w.g[n - 2]) * w.g[n - 1];
    alpha.push_back(an);
    if (an == 0) {
      // Standard convention: a vanishing coefficient zeroes the tail.
      alpha.resize(n_max + 1, Rational(0));
      break;
    }
  }
  return SFraction(std::move(alpha));
}

Verdict extract_wall(const PowerSeries& a) {
  if (a[0] <= 0)
    throw std::invalid_argument("extract_wall: a_0 must be positive");
  SFracExtraction ex = try_sfrac_from_series(a);
  if (!ex.failure_level) return g_from_alpha(SFraction(std::move(ex.alpha)));

  // Fold the failed expansion into the verdict; the g prefix determined by
  // the partial coefficients is still reported as a witness.
  Verdict partial = g_from_alpha(SFraction(std::move(ex.alpha)));
  Verdict v;
  v.status = WallStatus::NotSFractionRepresentable;
  v.index = *ex.failure_level;
  v.attempted_g = std::move(partial.attempted_g);
  return v;
}

Verdict extract_wall_via_proof_path(const PowerSeries& a) {
  if (a[0] <= 0)
    throw std::invalid_argument("extract_wall_via_proof_path: a_0 must be positive");
  const int n_max = a.order();

  const PowerSeries unit = (Rational(1) / a[0]) * a;
  const PowerSeries tilde = binomial_transform(aerate(unit), Rational(1));
  SFracExtraction ex = try_sfrac_from_series(tilde);  // alpha'_0..alpha'_{2N+1} on success
  const std::vector<Rational>& ap = ex.alpha;
  const int last = static_cast<int>(ap.size()) - 1;

  // First index of the standard zero tail (success case only: a failed
  // extraction never stores a zero coefficient).
  int tail = std::numeric_limits<int>::max();
  for (int i = 1; i <= last; ++i)
    if (ap[static_cast<std::size_t>(i)] == 0) {
      tail = i;
      break;
    }

  Verdict v;
  std::optional<int> range_index;
  Rational range_value;
  std::optional<int> pattern_pair;

  if (last >= 1 && ap[1] != 1 && tail != 1) pattern_pair = 0;  // alpha'_1 must be 1

  for (int k = 1; k <= n_max && !pattern_pair; ++k) {
    if (2 * k > last) break;  // ran out of extracted coefficients
    if (tail <= 2 * k) {
      v.attempted_g.push_back(Rational(0));  // pair inside the tail: undetermined
      continue;
    }
    const Rational gk = ap[static_cast<std::size_t>(2 * k)];
    if (2 * k + 1 <= last && gk + ap[static_cast<std::size_t>(2 * k + 1)] != 1) {
      pattern_pair = k;
      break;
    }
    v.attempted_g.push_back(gk);
    if (!range_index && (gk < 0 || gk > 1)) {
      range_index = k;
      range_value = gk;
    }
  }

  // Earliest anomaly on the alpha' index scale decides the status.
  const int range_at = range_index ? 2 * *range_index : std::numeric_limits<int>::max();
  const int pattern_at = pattern_pair ? 2 * *pattern_pair + 1 : std::numeric_limits<int>::max();
  const int peel_at = ex.failure_level ? *ex.failure_level : std::numeric_limits<int>::max();

  if (range_at <= pattern_at && range_at <= peel_at) {
    if (range_index) {
      v.status = WallStatus::RejectedGOutOfRange;
      v.index = *range_index;
      v.value = range_value;
      return v;
    }
  } else if (pattern_at <= peel_at) {
    v.status = WallStatus::PatternViolation;
    v.index = *pattern_pair;
    return v;
  } else {
    v.status = WallStatus::NotSFractionRepresentable;
    v.index = *ex.failure_level;
    return v;
  }

  v.status = WallStatus::HausdorffConsistent;
  v.params = WallParams{a[0], v.attempted_g};
  return v;
}

bool verdicts_agree(const Verdict& a, const Verdict& b) {
  if (a.accepted() != b.accepted()) return false;
  if (a.accepted() && a.params->c != b.params->c) return false;
  const std::size_t n = std::min(a.attempted_g.size(), b.attempted_g.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.attempted_g[i] != b.attempted_g[i]) return false;
  return true;
}

Classification classify(const PowerSeries& a) {
  if (a[0] <= 0) throw std::invalid_argument("classify: a_0 must be positive");

  Classification out;
  out.wall = extract_wall(a);
  out.hankel = hankel_report(a);

  SFracExtraction ex = try_sfrac_from_series(a);
  if (ex.failure_level) {
    out.sfrac_level = ex.failure_level;
  } else {
    out.alpha = SFraction(std::move(ex.alpha));
    for (int i = 1; i <= out.alpha->max_index(); ++i)
      if (out.alpha->alpha_at(i) < 0) {
        out.negative_alpha_index = i;
        break;
      }
  }

  if (out.wall.accepted()) {
    out.moment_class = MomentClass::HausdorffConsistent;
    return out;
  }
  if (out.alpha && !out.negative_alpha_index) {
    out.moment_class = MomentClass::StieltjesConsistentOnly;
    return out;
  }
  bool h0_nonnegative = true;
  for (const Rational& d : out.hankel.dets_h0)
    if (d < 0) {
      h0_nonnegative = false;
      break;
    }
  out.moment_class = h0_nonnegative ? MomentClass::HamburgerConsistentOnly
                                    : MomentClass::Inconsistent;
  return out;
}

}  // namespace momentcf
