#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "momentcf/cli.hpp"
#include "momentcf/errors.hpp"

namespace {

struct RawOptions {
  std::string input;
  std::string output;
  std::string target;
  std::string xi;
  std::string format = "text";
  int order = -1;
  bool order_set = false;
  std::uint64_t seed = 0;
  int samples = 25;
};

void add_common(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--output", raw.output, "Output path (default: stdout)");
  cmd->add_option("--format", raw.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_input(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--input", raw.input, "Input document path, or '-' for stdin")
      ->required();
  cmd->add_option("--order", raw.order,
                  "Working order; may only reduce the determined order")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conversions among moment sequences, Stieltjes/Jacobi "
               "continued fractions, and Wall g-parameters, with independent "
               "brute-force oracles."};
  app.require_subcommand(1);

  RawOptions raw;

  CLI::App* convert = app.add_subcommand(
      "convert", "Convert a document to another representation");
  add_input(convert, raw);
  convert->add_option("--to", raw.target, "Target: moments, sfrac, jfrac or wall")
      ->required()
      ->check(CLI::IsMember({"moments", "sfrac", "jfrac", "wall"}));
  convert->add_option("--xi", raw.xi,
                      "Apply the xi-binomial transform (rational, e.g. -1 or 3/2)");
  add_common(convert, raw);

  CLI::App* classify = app.add_subcommand(
      "classify", "Strongest consistent moment class with witnesses");
  add_input(classify, raw);
  add_common(classify, raw);

  CLI::App* gparams = app.add_subcommand(
      "gparams", "Run both Wall extraction routes and report agreement");
  add_input(gparams, raw);
  add_common(gparams, raw);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Hankel determinants and the complete-monotonicity table");
  add_input(oracle, raw);
  add_common(oracle, raw);

  CLI::App* demo = app.add_subcommand(
      "demo", "Worked examples plus a seeded randomized spot check");
  demo->add_option("--seed", raw.seed, "Sampling seed");
  demo->add_option("--samples", raw.samples, "Spot-check sample count")
      ->check(CLI::PositiveNumber);
  add_common(demo, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  momentcf::JobSpec job;
  if (convert->parsed()) job.command = momentcf::Command::Convert;
  if (classify->parsed()) job.command = momentcf::Command::Classify;
  if (gparams->parsed()) job.command = momentcf::Command::GParams;
  if (oracle->parsed()) job.command = momentcf::Command::Oracle;
  if (demo->parsed()) job.command = momentcf::Command::Demo;

  job.input = raw.input;
  job.output = raw.output;
  job.seed = raw.seed;
  job.samples = raw.samples;
  job.format = raw.format == "json" ? momentcf::OutputFormat::Json
                                    : momentcf::OutputFormat::Text;
  if (!raw.target.empty()) job.target = momentcf::parse_repr_kind(raw.target);
  if (convert->count("--order") || classify->count("--order") ||
      gparams->count("--order") || oracle->count("--order"))
    job.order = raw.order;
  if (!raw.xi.empty()) {
    try {
      job.xi = momentcf::parse_rational(raw.xi);
    } catch (const momentcf::ParseError& e) {
      std::cerr << "error ParseError\nmessage --xi: " << e.what() << '\n';
      return 2;
    }
  }

  return momentcf::run(job);
}
