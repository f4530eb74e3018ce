#pragma once

#include <optional>
#include <vector>

#include "momentcf/oracle.hpp"
#include "momentcf/power_series.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/sfraction.hpp"

namespace momentcf {

// Wall parametrization of Hausdorff moment prefixes: a constant c >= 0 and
// g_1..g_N in [0,1] with alpha_1 = g_1 and alpha_n = (1 - g_{n-1}) g_n.
struct WallParams {
  Rational c;
  std::vector<Rational> g;  // g[k] holds g_{k+1}

  friend bool operator==(const WallParams&, const WallParams&) = default;
};

enum class WallStatus {
  HausdorffConsistent,
  RejectedGOutOfRange,
  RejectedDegenerateDivision,
  NotSFractionRepresentable,
  PatternViolation,
};

const char* to_string(WallStatus s);

// Finite-prefix verdict for Wall's condition. Acceptance certifies the
// prefix only up to its order; rejection is definitive. attempted_g holds
// the g prefix actually determined, including on rejection, as a witness.
struct Verdict {
  WallStatus status = WallStatus::HausdorffConsistent;
  std::optional<WallParams> params;   // present iff accepted
  std::optional<int> index;           // failing g index / peel level / pair
  std::optional<Rational> value;      // offending g for RejectedGOutOfRange
  std::vector<Rational> attempted_g;

  bool accepted() const { return status == WallStatus::HausdorffConsistent; }
};

// g_1 = alpha_1, g_n = alpha_n / (1 - g_{n-1}). When 1 - g_{n-1} = 0 and
// alpha_n = 0 the undetermined g_n is taken to be 0 and the recurrence
// continues; when alpha_n != 0 the division is impossible. Out-of-range
// values do not stop the recurrence — the whole attempted list is computed
// and the earliest failing index decides the status. c is read off alpha_0,
// which must be >= 0.
Verdict g_from_alpha(const SFraction& alpha);

// alpha_0 = c, alpha_1 = g_1, alpha_n = (1 - g_{n-1}) g_n, with the standard
// zero tail applied from the first vanishing coefficient on. Requires every
// g in [0,1] (GOutOfRange) and c >= 0.
SFraction alpha_from_g(const WallParams& w);

// Direct route: S-fraction expansion of a followed by the g recurrence,
// with c = a_0. Requires a_0 > 0. A failed expansion is folded into the
// verdict as NotSFractionRepresentable.
Verdict extract_wall(const PowerSeries& a);

// Independent route following the constructive proof of Wall's theorem:
// aerate a/a_0, apply the 1-binomial transform, expand that as an
// S-fraction alpha', check the pair pattern 1 = alpha'_1 = alpha'_2 +
// alpha'_3 = alpha'_4 + alpha'_5 = ..., and read g_n = alpha'_{2n}. Pairs
// inside the standard zero tail are undetermined and yield the conventional
// g = 0. Agrees with extract_wall in acceptance and on every commonly
// determined g value.
Verdict extract_wall_via_proof_path(const PowerSeries& a);

// Same acceptance and identical g on the commonly determined prefix
// (rejection payloads may legitimately differ between routes).
bool verdicts_agree(const Verdict& a, const Verdict& b);

enum class MomentClass {
  HausdorffConsistent,
  StieltjesConsistentOnly,
  HamburgerConsistentOnly,
  Inconsistent,
};

const char* to_string(MomentClass c);

// Strongest consistent class for the prefix, with the failing witness for
// each stronger class: the Wall verdict, the S-fraction outcome (failure
// level or first negative coefficient), and the Hankel report. Hamburger
// consistency here means no strictly negative H0 determinant; zero
// determinants are accepted (degenerate prefixes stay one-sided).
struct Classification {
  MomentClass moment_class = MomentClass::Inconsistent;
  Verdict wall;
  std::optional<SFraction> alpha;          // present when extraction succeeded
  std::optional<int> sfrac_level;          // present when extraction failed
  std::optional<int> negative_alpha_index; // first i >= 1 with alpha_i < 0
  HankelReport hankel;
};

// Total over prefixes with a_0 > 0.
Classification classify(const PowerSeries& a);

}  // namespace momentcf
