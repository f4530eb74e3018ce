#include "momentcf/io.hpp"

#include <istream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>

#include "momentcf/errors.hpp"

namespace momentcf {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxEntries = 100000;

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream words(line);
    std::string word;
    while (words >> word) tokens.push_back({word, lineno});
  }
  return tokens;
}

class TokenReader {
public:
  explicit TokenReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ == tokens_.size(); }

  const Token& next(const char* what) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return tokens_[pos_++];
  }

  const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }

  void expect_done() const {
    if (!done())
      throw ParseError("unexpected trailing token '" + tokens_[pos_].text + "' (line " +
                       std::to_string(tokens_[pos_].line) + ")");
  }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::size_t parse_count(const Token& t, const char* what) {
  if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("expected a count for ") + what + ", got '" + t.text +
                     "' (line " + std::to_string(t.line) + ")");
  unsigned long long value = 0;
  try {
    value = std::stoull(t.text);
  } catch (const std::exception&) {
    throw ParseError(std::string("count out of range for ") + what + " (line " +
                     std::to_string(t.line) + ")");
  }
  if (value > kMaxEntries)
    throw ParseError(std::string("count too large for ") + what + " (line " +
                     std::to_string(t.line) + ")");
  return static_cast<std::size_t>(value);
}

Rational parse_value(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " (line " + std::to_string(t.line) + ")");
  }
}

std::vector<Rational> parse_values(TokenReader& reader, std::size_t count, const char* what) {
  std::vector<Rational> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) values.push_back(parse_value(reader.next(what)));
  return values;
}

// key=value fields in the header line, e.g. "c=1 n=4".
std::map<std::string, Token> parse_fields(TokenReader& reader) {
  std::map<std::string, Token> fields;
  while (const Token* t = reader.peek()) {
    const auto eq = t->text.find('=');
    if (eq == std::string::npos) break;
    const std::string key = t->text.substr(0, eq);
    Token value{t->text.substr(eq + 1), t->line};
    if (key.empty() || value.text.empty())
      throw ParseError("malformed header field '" + t->text + "' (line " +
                       std::to_string(t->line) + ")");
    if (fields.count(key))
      throw ParseError("duplicate header field '" + key + "' (line " +
                       std::to_string(t->line) + ")");
    fields.emplace(key, std::move(value));
    reader.next("header field");
  }
  return fields;
}

const Token& require_field(const std::map<std::string, Token>& fields, const std::string& key,
                           int header_line) {
  const auto it = fields.find(key);
  if (it == fields.end())
    throw ParseError("missing header field '" + key + "=' (line " +
                     std::to_string(header_line) + ")");
  return it->second;
}

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(to_string(v));
  return arr;
}

void write_values(std::ostream& out, const std::vector<Rational>& values) {
  for (const Rational& v : values) out << to_string(v) << '\n';
}

}  // namespace

const char* to_string(ReprKind k) {
  switch (k) {
    case ReprKind::Moments: return "moments";
    case ReprKind::SFrac: return "sfrac";
    case ReprKind::JFrac: return "jfrac";
    case ReprKind::Wall: return "wall";
  }
  return "?";
}

std::optional<ReprKind> parse_repr_kind(std::string_view text) {
  if (text == "moments") return ReprKind::Moments;
  if (text == "sfrac") return ReprKind::SFrac;
  if (text == "jfrac") return ReprKind::JFrac;
  if (text == "wall") return ReprKind::Wall;
  return std::nullopt;
}

ReprKind kind_of(const Document& doc) {
  return std::visit(
      [](const auto& d) -> ReprKind {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, MomentsDoc>) return ReprKind::Moments;
        if constexpr (std::is_same_v<T, SFracDoc>) return ReprKind::SFrac;
        if constexpr (std::is_same_v<T, JFracDoc>) return ReprKind::JFrac;
        if constexpr (std::is_same_v<T, WallDoc>) return ReprKind::Wall;
      },
      doc);
}

int determined_order(const Document& doc) {
  return std::visit(
      [](const auto& d) -> int {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, MomentsDoc>) return d.series.order();
        if constexpr (std::is_same_v<T, SFracDoc>) return d.sfrac.max_index();
        if constexpr (std::is_same_v<T, JFracDoc>) return d.jfrac.determined_order();
        if constexpr (std::is_same_v<T, WallDoc>) return static_cast<int>(d.params.g.size());
      },
      doc);
}

PowerSeries to_series(const Document& doc, std::optional<int> order) {
  const int n = order.value_or(determined_order(doc));
  return std::visit(
      [n](const auto& d) -> PowerSeries {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, MomentsDoc>) return d.series.truncated(n);
        if constexpr (std::is_same_v<T, SFracDoc>) return series_from_sfrac(d.sfrac, n);
        if constexpr (std::is_same_v<T, JFracDoc>)
          return d.c * series_from_jfrac(d.jfrac, n);
        if constexpr (std::is_same_v<T, WallDoc>)
          return series_from_sfrac(alpha_from_g(d.params), n);
      },
      doc);
}

Document parse_document(std::istream& in) {
  TokenReader reader(tokenize(in));
  const Token& head = reader.next("a representation kind");
  const auto kind = parse_repr_kind(head.text);
  if (!kind)
    throw ParseError("unknown representation '" + head.text + "' (line " +
                     std::to_string(head.line) + "), expected moments|sfrac|jfrac|wall");

  switch (*kind) {
    case ReprKind::Moments: {
      const std::size_t count = parse_count(reader.next("the moment count"), "moments");
      if (count == 0) throw ParseError("moments needs at least a_0");
      auto values = parse_values(reader, count, "a moment");
      reader.expect_done();
      return MomentsDoc{PowerSeries(std::move(values))};
    }
    case ReprKind::SFrac: {
      const std::size_t count = parse_count(reader.next("the coefficient count"), "sfrac");
      if (count == 0) throw ParseError("sfrac needs at least alpha_0");
      auto values = parse_values(reader, count, "a coefficient");
      reader.expect_done();
      return SFracDoc{SFraction(std::move(values))};
    }
    case ReprKind::JFrac: {
      auto fields = parse_fields(reader);
      const std::size_t gammas = parse_count(require_field(fields, "p", head.line), "jfrac p");
      const std::size_t betas = parse_count(require_field(fields, "q", head.line), "jfrac q");
      Rational c(1);
      if (const auto it = fields.find("c"); it != fields.end()) c = parse_value(it->second);
      for (const auto& [key, value] : fields)
        if (key != "p" && key != "q" && key != "c")
          throw ParseError("unknown jfrac header field '" + key + "' (line " +
                           std::to_string(value.line) + ")");
      auto gamma = parse_values(reader, gammas, "a gamma coefficient");
      auto beta = parse_values(reader, betas, "a beta coefficient");
      reader.expect_done();
      return JFracDoc{std::move(c), JFraction(std::move(gamma), std::move(beta))};
    }
    case ReprKind::Wall: {
      auto fields = parse_fields(reader);
      const Rational c = parse_value(require_field(fields, "c", head.line));
      const std::size_t count = parse_count(require_field(fields, "n", head.line), "wall n");
      for (const auto& [key, value] : fields)
        if (key != "c" && key != "n")
          throw ParseError("unknown wall header field '" + key + "' (line " +
                           std::to_string(value.line) + ")");
      if (c < 0) throw ParseError("wall constant c must be >= 0");
      auto g = parse_values(reader, count, "a g value");
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] < 0 || g[i] > 1)
          throw ParseError("g_" + std::to_string(i + 1) + " = " + to_string(g[i]) +
                           " lies outside [0,1]");
      reader.expect_done();
      return WallDoc{WallParams{std::move(c), std::move(g)}};
    }
  }
  throw ParseError("unreachable");
}

Document parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

void write_document(std::ostream& out, const Document& doc, OutputFormat fmt) {
  if (fmt == OutputFormat::Text) {
    std::visit(
        [&out](const auto& d) {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, MomentsDoc>) {
            out << "moments " << d.series.coeffs().size() << '\n';
            write_values(out, d.series.coeffs());
          } else if constexpr (std::is_same_v<T, SFracDoc>) {
            out << "sfrac " << d.sfrac.alpha().size() << '\n';
            write_values(out, d.sfrac.alpha());
          } else if constexpr (std::is_same_v<T, JFracDoc>) {
            out << "jfrac ";
            if (d.c != 1) out << "c=" << to_string(d.c) << ' ';
            out << "p=" << d.jfrac.gamma().size() << " q=" << d.jfrac.beta().size() << '\n';
            write_values(out, d.jfrac.gamma());
            write_values(out, d.jfrac.beta());
          } else if constexpr (std::is_same_v<T, WallDoc>) {
            out << "wall c=" << to_string(d.params.c) << " n=" << d.params.g.size() << '\n';
            write_values(out, d.params.g);
          }
        },
        doc);
    return;
  }

  json j;
  std::visit(
      [&j](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, MomentsDoc>) {
          j["kind"] = "moments";
          j["values"] = rationals_to_json(d.series.coeffs());
        } else if constexpr (std::is_same_v<T, SFracDoc>) {
          j["kind"] = "sfrac";
          j["alpha"] = rationals_to_json(d.sfrac.alpha());
        } else if constexpr (std::is_same_v<T, JFracDoc>) {
          j["kind"] = "jfrac";
          j["c"] = to_string(d.c);
          j["gamma"] = rationals_to_json(d.jfrac.gamma());
          j["beta"] = rationals_to_json(d.jfrac.beta());
        } else if constexpr (std::is_same_v<T, WallDoc>) {
          j["kind"] = "wall";
          j["c"] = to_string(d.params.c);
          j["g"] = rationals_to_json(d.params.g);
        }
      },
      doc);
  out << j.dump(2) << '\n';
}

std::string document_to_string(const Document& doc, OutputFormat fmt) {
  std::ostringstream out;
  write_document(out, doc, fmt);
  return out.str();
}

}  // namespace momentcf
