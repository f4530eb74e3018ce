#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "momentcf/io.hpp"
#include "momentcf/rational.hpp"

namespace momentcf {

// The command surface, decoupled from argument parsing so it can be driven
// directly from tests. Exit codes: 0 success (including rejection verdicts),
// 2 parse/usage errors, 3 representation/domain errors. Errors are rendered
// to the error stream in the selected format; commands never throw out.
enum class Command { Convert, Classify, GParams, Oracle, Demo };

struct JobSpec {
  Command command = Command::Demo;
  std::string input;            // path, or "-" for the standard input stream
  std::string output;           // path, empty = standard output stream
  std::optional<ReprKind> target;
  std::optional<int> order;     // may only reduce the determined order
  std::optional<Rational> xi;   // binomial transform applied to the input
  std::uint64_t seed = 0;       // demo sampling
  int samples = 25;             // demo sample count
  OutputFormat format = OutputFormat::Text;
};

int run(const JobSpec& job, std::istream& in, std::ostream& out, std::ostream& err);
int run(const JobSpec& job);  // binds the process streams

}  // namespace momentcf
