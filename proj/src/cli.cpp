#include "momentcf/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <type_traits>

#include "momentcf/errors.hpp"
#include "momentcf/jfraction.hpp"
#include "momentcf/oracle.hpp"
#include "momentcf/sampling.hpp"
#include "momentcf/wall.hpp"

namespace momentcf {

namespace {

using json = nlohmann::ordered_json;

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(to_string(v));
  return arr;
}

void write_list(std::ostream& out, const char* key, const std::vector<Rational>& values) {
  out << key << ' ' << values.size() << '\n';
  for (const Rational& v : values) out << to_string(v) << '\n';
}

// ---------------------------------------------------------------- verdicts

void render_verdict_text(std::ostream& out, const Verdict& v, const char* prefix) {
  out << prefix << "verdict " << to_string(v.status) << '\n';
  if (v.index) out << prefix << "index " << *v.index << '\n';
  if (v.value) out << prefix << "value " << to_string(*v.value) << '\n';
  if (v.accepted()) {
    out << prefix << "c " << to_string(v.params->c) << '\n';
    std::string key = std::string(prefix) + "g";
    write_list(out, key.c_str(), v.params->g);
  } else {
    std::string key = std::string(prefix) + "attempted-g";
    write_list(out, key.c_str(), v.attempted_g);
  }
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["verdict"] = to_string(v.status);
  if (v.index) j["index"] = *v.index;
  if (v.value) j["value"] = to_string(*v.value);
  if (v.accepted()) {
    j["c"] = to_string(v.params->c);
    j["g"] = rationals_to_json(v.params->g);
  } else {
    j["attempted_g"] = rationals_to_json(v.attempted_g);
  }
  return j;
}

// ------------------------------------------------------------------ errors

void render_error(std::ostream& err, OutputFormat fmt, const char* name,
                  const std::string& message,
                  const std::vector<std::pair<std::string, std::string>>& details = {}) {
  if (fmt == OutputFormat::Text) {
    err << "error " << name << '\n' << "message " << message << '\n';
    for (const auto& [key, value] : details) err << key << ' ' << value << '\n';
  } else {
    json j;
    j["error"] = name;
    j["message"] = message;
    for (const auto& [key, value] : details) j[key] = value;
    err << j.dump(2) << '\n';
  }
}

// ------------------------------------------------------------------- input

Document load_input(const JobSpec& job, std::istream& in) {
  if (job.input.empty()) throw ParseError("no input given (use --input PATH or '-')");
  if (job.input == "-") return parse_document(in);
  std::ifstream file(job.input);
  if (!file) throw ParseError("cannot open input file '" + job.input + "'");
  return parse_document(file);
}

int working_order(const Document& doc, const std::optional<int>& requested) {
  const int determined = determined_order(doc);
  if (!requested) return determined;
  if (*requested < 0 || *requested > determined)
    throw ParseError("requested order " + std::to_string(*requested) +
                     " is not determined by the input (determined order " +
                     std::to_string(determined) + "); output is never padded");
  return *requested;
}

// Splits the leading constant off an S-fraction document.
std::pair<Rational, SFraction> normalized_sfrac(const SFraction& s) {
  std::vector<Rational> alpha = s.alpha();
  Rational c = alpha[0];
  alpha[0] = 1;
  return {std::move(c), SFraction(std::move(alpha))};
}

SFraction with_alpha0(const SFraction& s, const Rational& c) {
  std::vector<Rational> alpha = s.alpha();
  alpha[0] = c;
  return SFraction(std::move(alpha));
}

// --------------------------------------------------------------- commands

int run_convert(const JobSpec& job, const Document& input, std::ostream& out) {
  const ReprKind target = *job.target;

  // Identity conversion passes the document through untouched so stored
  // coefficients beyond the determined order survive.
  if (target == kind_of(input) && !job.order && !job.xi) {
    write_document(out, input, job.format);
    return 0;
  }

  Document doc = input;
  int order = working_order(doc, job.order);

  if (job.xi) {
    if (const auto* jf = std::get_if<JFracDoc>(&doc)) {
      // Exact at the coefficient level; all stored gammas shift.
      doc = JFracDoc{jf->c, jfrac_shift(jf->jfrac, *job.xi)};
    } else {
      doc = MomentsDoc{binomial_transform(to_series(doc, order), *job.xi)};
    }
  }

  switch (target) {
    case ReprKind::Moments: {
      write_document(out, MomentsDoc{to_series(doc, order)}, job.format);
      return 0;
    }
    case ReprKind::SFrac: {
      SFraction result = [&] {
        if (const auto* s = std::get_if<SFracDoc>(&doc))
          return SFraction(std::vector<Rational>(s->sfrac.alpha().begin(),
                                                 s->sfrac.alpha().begin() + order + 1));
        if (const auto* w = std::get_if<WallDoc>(&doc)) {
          WallParams params = w->params;
          params.g.resize(static_cast<std::size_t>(order));
          return alpha_from_g(params);
        }
        if (const auto* jf = std::get_if<JFracDoc>(&doc))
          return with_alpha0(uncontract(jf->jfrac), jf->c);
        return sfrac_from_series(to_series(doc, order));
      }();
      write_document(out, SFracDoc{std::move(result)}, job.format);
      return 0;
    }
    case ReprKind::JFrac: {
      JFracDoc result = [&]() -> JFracDoc {
        if (const auto* jf = std::get_if<JFracDoc>(&doc)) {
          if (!job.order) return *jf;  // xi shift only: exact for all stored gammas
          std::vector<Rational> gamma(jf->jfrac.gamma());
          std::vector<Rational> beta(jf->jfrac.beta());
          gamma.resize(static_cast<std::size_t>((order + 1) / 2));
          beta.resize(static_cast<std::size_t>(order / 2));
          return {jf->c, JFraction(std::move(gamma), std::move(beta))};
        }
        if (const auto* s = std::get_if<SFracDoc>(&doc)) {
          auto [c, normalized] = normalized_sfrac(s->sfrac);
          return {std::move(c), contract(normalized)};
        }
        if (const auto* w = std::get_if<WallDoc>(&doc)) {
          WallParams params = w->params;
          params.g.resize(static_cast<std::size_t>(order));
          auto [c, normalized] = normalized_sfrac(alpha_from_g(params));
          return {std::move(c), contract(normalized)};
        }
        const PowerSeries a = to_series(doc, order);
        if (a[0] == 0) throw Error("cannot extract a J-fraction: a_0 is zero");
        return {a[0], jfrac_from_series((Rational(1) / a[0]) * a)};
      }();
      write_document(out, Document{std::move(result)}, job.format);
      return 0;
    }
    case ReprKind::Wall: {
      Verdict v = [&] {
        if (const auto* w = std::get_if<WallDoc>(&doc)) {
          WallParams params = w->params;
          params.g.resize(static_cast<std::size_t>(order));
          return Verdict{WallStatus::HausdorffConsistent, params, std::nullopt,
                         std::nullopt, params.g};
        }
        if (const auto* s = std::get_if<SFracDoc>(&doc))
          return g_from_alpha(SFraction(std::vector<Rational>(
              s->sfrac.alpha().begin(), s->sfrac.alpha().begin() + order + 1)));
        const PowerSeries a = to_series(doc, order);
        if (a[0] <= 0) throw Error("Wall extraction needs a_0 > 0, got " + to_string(a[0]));
        return extract_wall(a);
      }();
      if (v.accepted()) {
        write_document(out, WallDoc{*v.params}, job.format);
      } else if (job.format == OutputFormat::Text) {
        render_verdict_text(out, v, "");
      } else {
        out << verdict_to_json(v).dump(2) << '\n';
      }
      return 0;  // a rejection verdict is a successful conversion outcome
    }
  }
  throw Error("unreachable");
}

int run_classify(const JobSpec& job, const Document& input, std::ostream& out) {
  const PowerSeries a = to_series(input, working_order(input, job.order));
  if (a[0] <= 0) throw Error("classification needs a_0 > 0, got " + to_string(a[0]));
  const Classification c = classify(a);

  if (job.format == OutputFormat::Text) {
    out << "class " << to_string(c.moment_class) << '\n';
    render_verdict_text(out, c.wall, "wall-");
    if (c.sfrac_level) out << "sfrac-level " << *c.sfrac_level << '\n';
    if (c.negative_alpha_index)
      out << "negative-alpha-index " << *c.negative_alpha_index << '\n';
    if (c.alpha) write_list(out, "alpha", c.alpha->alpha());
    write_list(out, "hankel-h0", c.hankel.dets_h0);
    write_list(out, "hankel-h1", c.hankel.dets_h1);
    if (c.hankel.first_negative)
      out << "hankel-negative " << (c.hankel.first_negative->table == 0 ? "h0" : "h1") << ' '
          << c.hankel.first_negative->index << '\n';
    else
      out << "hankel-negative none\n";
    return 0;
  }

  json j;
  j["class"] = to_string(c.moment_class);
  j["wall"] = verdict_to_json(c.wall);
  if (c.sfrac_level) j["sfrac_level"] = *c.sfrac_level;
  if (c.negative_alpha_index) j["negative_alpha_index"] = *c.negative_alpha_index;
  if (c.alpha) j["alpha"] = rationals_to_json(c.alpha->alpha());
  j["hankel_h0"] = rationals_to_json(c.hankel.dets_h0);
  j["hankel_h1"] = rationals_to_json(c.hankel.dets_h1);
  if (c.hankel.first_negative)
    j["hankel_negative"] = {{"table", c.hankel.first_negative->table == 0 ? "h0" : "h1"},
                            {"index", c.hankel.first_negative->index}};
  else
    j["hankel_negative"] = nullptr;
  out << j.dump(2) << '\n';
  return 0;
}

int run_gparams(const JobSpec& job, const Document& input, std::ostream& out) {
  const PowerSeries a = to_series(input, working_order(input, job.order));
  if (a[0] <= 0) throw Error("Wall extraction needs a_0 > 0, got " + to_string(a[0]));
  const Verdict direct = extract_wall(a);
  const Verdict proof = extract_wall_via_proof_path(a);
  const bool agree = verdicts_agree(direct, proof);

  if (job.format == OutputFormat::Text) {
    render_verdict_text(out, direct, "direct-");
    render_verdict_text(out, proof, "proof-path-");
    out << "agree " << (agree ? "yes" : "no") << '\n';
    return 0;
  }
  json j;
  j["direct"] = verdict_to_json(direct);
  j["proof_path"] = verdict_to_json(proof);
  j["agree"] = agree;
  out << j.dump(2) << '\n';
  return 0;
}

int run_oracle(const JobSpec& job, const Document& input, std::ostream& out) {
  const PowerSeries a = to_series(input, working_order(input, job.order));
  const HankelReport report = hankel_report(a);
  const auto cm = completely_monotone_check(a);

  if (job.format == OutputFormat::Text) {
    write_list(out, "hankel-h0", report.dets_h0);
    write_list(out, "hankel-h1", report.dets_h1);
    if (report.first_negative)
      out << "hankel-negative " << (report.first_negative->table == 0 ? "h0" : "h1") << ' '
          << report.first_negative->index << '\n';
    else
      out << "hankel-negative none\n";
    if (cm)
      out << "cm-violation k=" << cm->k << " n=" << cm->n << '\n';
    else
      out << "cm-violation none\n";
    return 0;
  }
  json j;
  j["hankel_h0"] = rationals_to_json(report.dets_h0);
  j["hankel_h1"] = rationals_to_json(report.dets_h1);
  if (report.first_negative)
    j["hankel_negative"] = {{"table", report.first_negative->table == 0 ? "h0" : "h1"},
                            {"index", report.first_negative->index}};
  else
    j["hankel_negative"] = nullptr;
  if (cm)
    j["cm_violation"] = {{"k", cm->k}, {"n", cm->n}};
  else
    j["cm_violation"] = nullptr;
  out << j.dump(2) << '\n';
  return 0;
}

// Worked examples at desk scale plus a seeded randomized spot check.
int run_demo(const JobSpec& job, std::ostream& out) {
  std::ostringstream text;
  json j;
  bool ok = true;

  {  // All-ones coefficients reproduce the Catalan numbers.
    const SFraction ones(std::vector<Rational>(10, Rational(1)));
    const PowerSeries a = series_from_sfrac(ones, 9);
    const std::vector<Rational> catalan = catalan_numbers(9);
    const bool match = a.coeffs() == catalan;
    ok = ok && match;
    text << "== catalan ==\n" << "series";
    for (const Rational& v : a.coeffs()) text << ' ' << to_string(v);
    text << '\n' << (match ? "ok\n" : "MISMATCH\n");
    j["catalan"] = {{"series", rationals_to_json(a.coeffs())}, {"ok", match}};
  }

  {  // Moments 1/(n+1): the alternating g pattern 1/2, k/(2k+1).
    std::vector<Rational> a;
    for (int n = 0; n <= 10; ++n) a.push_back(Rational(1, n + 1));
    const Verdict v = extract_wall(PowerSeries(a));
    const bool match = v.accepted();
    ok = ok && match;
    text << "== uniform ==\n" << "verdict " << to_string(v.status) << '\n' << "g";
    for (const Rational& g : v.attempted_g) text << ' ' << to_string(g);
    text << '\n' << (match ? "ok\n" : "MISMATCH\n");
    j["uniform"] = {{"verdict", to_string(v.status)},
                    {"g", rationals_to_json(v.attempted_g)},
                    {"ok", match}};
  }

  {  // Factorials are Stieltjes but not Hausdorff.
    std::vector<Rational> a{Rational(1)};
    for (int n = 1; n <= 8; ++n) a.push_back(a.back() * n);
    const Classification c = classify(PowerSeries(a));
    const bool match = c.moment_class == MomentClass::StieltjesConsistentOnly;
    ok = ok && match;
    text << "== factorial ==\n"
         << "class " << to_string(c.moment_class) << '\n'
         << "wall-verdict " << to_string(c.wall.status);
    if (c.wall.index) text << " index " << *c.wall.index;
    text << '\n' << (match ? "ok\n" : "MISMATCH\n");
    j["factorial"] = {{"class", to_string(c.moment_class)},
                      {"wall_verdict", to_string(c.wall.status)},
                      {"ok", match}};
  }

  {  // Seeded spot check of the two extraction routes.
    Sampler sampler(job.seed);
    int accepted = 0;
    int agreeing = 0;
    for (int i = 0; i < job.samples; ++i) {
      const DiscreteMeasure mu = sampler.measure_unit(4);
      const PowerSeries a = moments(mu, 10);
      const Verdict direct = extract_wall(a);
      if (direct.accepted()) ++accepted;
      if (verdicts_agree(direct, extract_wall_via_proof_path(a))) ++agreeing;
    }
    const bool match = accepted == job.samples && agreeing == job.samples;
    ok = ok && match;
    text << "== samples seed=" << job.seed << " ==\n"
         << "measures-accepted " << accepted << '/' << job.samples << '\n'
         << "routes-agreeing " << agreeing << '/' << job.samples << '\n'
         << (match ? "ok\n" : "MISMATCH\n");
    j["samples"] = {{"seed", job.seed},
                    {"measures_accepted", accepted},
                    {"routes_agreeing", agreeing},
                    {"total", job.samples},
                    {"ok", match}};
  }

  if (job.format == OutputFormat::Text)
    out << text.str();
  else
    out << j.dump(2) << '\n';
  return ok ? 0 : 3;
}

}  // namespace

int run(const JobSpec& job, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ofstream file_out;
  std::ostream* sink = &out;
  try {
    if (!job.output.empty()) {
      file_out.open(job.output);
      if (!file_out) throw Error("cannot open output file '" + job.output + "'");
      sink = &file_out;
    }
    switch (job.command) {
      case Command::Demo:
        return run_demo(job, *sink);
      case Command::Convert: {
        if (!job.target) throw ParseError("convert needs --to moments|sfrac|jfrac|wall");
        const Document doc = load_input(job, in);
        return run_convert(job, doc, *sink);
      }
      case Command::Classify:
        return run_classify(job, load_input(job, in), *sink);
      case Command::GParams:
        return run_gparams(job, load_input(job, in), *sink);
      case Command::Oracle:
        return run_oracle(job, load_input(job, in), *sink);
    }
    throw Error("unreachable");
  } catch (const ParseError& e) {
    render_error(err, job.format, e.name(), e.what(), e.details());
    return 2;
  } catch (const Error& e) {
    render_error(err, job.format, e.name(), e.what(), e.details());
    return 3;
  } catch (const std::exception& e) {
    render_error(err, job.format, "DomainError", e.what());
    return 3;
  } catch (...) {
    render_error(err, job.format, "InternalError", "unknown failure");
    return 3;
  }
}

int run(const JobSpec& job) { return run(job, std::cin, std::cout, std::cerr); }

}  // namespace momentcf
