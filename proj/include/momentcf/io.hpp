#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "momentcf/jfraction.hpp"
#include "momentcf/power_series.hpp"
#include "momentcf/sfraction.hpp"
#include "momentcf/wall.hpp"

namespace momentcf {

// Line-oriented exact-rational documents. A header line declares the
// representation kind and entry counts, the values follow, one or more per
// line, separated by whitespace or commas; '#' starts a comment. Rationals
// are written "p" or "p/q" — decimals are rejected, never converted.
//
//   moments 5          sfrac 5        jfrac c=3 p=2 q=2     wall c=1 n=4
//   1                  1              1/2                   1/2
//   1/2 1/3 1/4 1/5    1/2 1/6        1/2                   1/3 1/2 2/5
//                      1/3 1/5        1/12 1/15
//
// jfrac: p gamma values then q beta values; c defaults to 1 and is only
// written when it differs. wall requires c >= 0 and every g in [0,1].

enum class ReprKind { Moments, SFrac, JFrac, Wall };

const char* to_string(ReprKind k);
std::optional<ReprKind> parse_repr_kind(std::string_view text);

struct MomentsDoc {
  PowerSeries series;
};
struct SFracDoc {
  SFraction sfrac;
};
struct JFracDoc {
  Rational c;
  JFraction jfrac;
};
struct WallDoc {
  WallParams params;
};

using Document = std::variant<MomentsDoc, SFracDoc, JFracDoc, WallDoc>;

ReprKind kind_of(const Document& doc);

// Highest order through which the document pins the represented sequence.
int determined_order(const Document& doc);

// The sequence a document represents, at the given order (defaults to the
// determined order). J-fraction and Wall documents carry their constant.
PowerSeries to_series(const Document& doc, std::optional<int> order = std::nullopt);

Document parse_document(std::istream& in);        // throws ParseError
Document parse_document(const std::string& text);

enum class OutputFormat { Text, Json };

void write_document(std::ostream& out, const Document& doc, OutputFormat fmt);
std::string document_to_string(const Document& doc, OutputFormat fmt);

}  // namespace momentcf
