#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "momentcf/cli.hpp"
#include "momentcf/io.hpp"

using namespace momentcf;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

// Drives the command layer in-process; input text stands in for stdin.
Outcome drive(JobSpec job, const std::string& input_text = "") {
  if (!input_text.empty() && job.input.empty()) job.input = "-";
  std::istringstream in(input_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(job, in, out, err);
  return {code, out.str(), err.str()};
}

JobSpec convert_job(ReprKind target) {
  JobSpec job;
  job.command = Command::Convert;
  job.target = target;
  return job;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path);
  file << content;
  return path;
}

}  // namespace

TEST_CASE("classify the uniform prefix from a document") {
  const Outcome r = drive([] {
    JobSpec job;
    job.command = Command::Classify;
    return job;
  }(), "moments 4\n1, 1/2, 1/3, 1/4\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("class HausdorffConsistent") != std::string::npos);
  CHECK(r.out.find("1/2") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("convert moments to wall emits a reingestible wall document") {
  const Outcome r = drive(convert_job(ReprKind::Wall), "moments 4\n1 1/2 1/3 1/4\n");
  CHECK(r.code == 0);
  const Document doc = parse_document(r.out);
  const auto& wall = std::get<WallDoc>(doc);
  CHECK(wall.params.c == 1);
  CHECK(wall.params.g == std::vector<Rational>{{1, 2}, {1, 3}, {1, 2}});
}

TEST_CASE("convert to wall reports rejections as verdicts with exit 0") {
  const Outcome r = drive(convert_job(ReprKind::Wall), "moments 5\n1 1 2 6 24\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict RejectedDegenerateDivision") != std::string::npos);
  CHECK(r.out.find("index 2") != std::string::npos);
}

TEST_CASE("convert wall back to moments") {
  const Outcome r = drive(convert_job(ReprKind::Moments), "wall c=1 n=3\n1\n0\n0\n");
  CHECK(r.code == 0);
  CHECK(r.out == "moments 4\n1\n1\n1\n1\n");
}

TEST_CASE("cli-level roundtrips reproduce the input document") {
  const std::string moments = "moments 5\n1\n1/2\n1/3\n1/4\n1/5\n";

  const Outcome to_sfrac = drive(convert_job(ReprKind::SFrac), moments);
  REQUIRE(to_sfrac.code == 0);
  const Outcome back = drive(convert_job(ReprKind::Moments), to_sfrac.out);
  CHECK(back.out == moments);

  const Outcome to_jfrac = drive(convert_job(ReprKind::JFrac), moments);
  REQUIRE(to_jfrac.code == 0);
  const Outcome back_j = drive(convert_job(ReprKind::Moments), to_jfrac.out);
  CHECK(back_j.out == moments);

  const Outcome to_wall = drive(convert_job(ReprKind::Wall), moments);
  REQUIRE(to_wall.code == 0);
  const Outcome back_w = drive(convert_job(ReprKind::Moments), to_wall.out);
  CHECK(back_w.out == moments);

  const std::string jfrac = "jfrac c=2 p=2 q=2\n1/2\n1/2\n1/12\n1/15\n";
  const Outcome j_to_s = drive(convert_job(ReprKind::SFrac), jfrac);
  REQUIRE(j_to_s.code == 0);
  const Outcome s_to_j = drive(convert_job(ReprKind::JFrac), j_to_s.out);
  CHECK(s_to_j.out == jfrac);
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::string input = "moments 4\n1 2/3 1/2 2/5\n";
  for (const auto format : {OutputFormat::Text, OutputFormat::Json}) {
    JobSpec job = convert_job(ReprKind::SFrac);
    job.format = format;
    const Outcome first = drive(job, input);
    const Outcome second = drive(job, input);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("xi transforms the represented sequence") {
  JobSpec job = convert_job(ReprKind::Moments);
  job.xi = Rational(1);
  const Outcome r = drive(job, "moments 4\n1 1 1 1\n");
  CHECK(r.out == "moments 4\n1\n2\n4\n8\n");

  // at the J-fraction level the shift is exact coefficient surgery
  JobSpec jshift = convert_job(ReprKind::JFrac);
  jshift.xi = Rational(1);
  const Outcome js = drive(jshift, "jfrac p=2 q=2\n0 0\n1 0\n");
  CHECK(js.out == "jfrac p=2 q=2\n1\n1\n1\n0\n");
}

TEST_CASE("order flag truncates and never pads") {
  JobSpec job = convert_job(ReprKind::Moments);
  job.order = 2;
  CHECK(drive(job, "moments 4\n1 1/2 1/3 1/4\n").out == "moments 3\n1\n1/2\n1/3\n");

  job.order = 9;
  const Outcome r = drive(job, "moments 4\n1 1/2 1/3 1/4\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("ParseError") != std::string::npos);
}

TEST_CASE("identity conversion passes documents through verbatim") {
  const std::string jfrac = "jfrac p=1 q=4\n1\n1\n2\n3\n4\n";
  const Outcome r = drive(convert_job(ReprKind::JFrac), jfrac);
  CHECK(r.out == jfrac);
}

TEST_CASE("representation errors exit 3 with a structured report") {
  const Outcome r = drive(convert_job(ReprKind::SFrac), "moments 5\n1 0 1 0 1\n");
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(r.err.find("error NotSFractionRepresentable") != std::string::npos);
  CHECK(r.err.find("level 1") != std::string::npos);

  JobSpec json_job = convert_job(ReprKind::SFrac);
  json_job.format = OutputFormat::Json;
  const Outcome rj = drive(json_job, "moments 5\n1 0 1 0 1\n");
  CHECK(rj.code == 3);
  CHECK(rj.err.find("\"error\": \"NotSFractionRepresentable\"") != std::string::npos);
}

TEST_CASE("parse errors exit 2") {
  const Outcome r = drive(convert_job(ReprKind::Moments), "moments 2\n1 0.5\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("decimal") != std::string::npos);

  JobSpec job;
  job.command = Command::Classify;
  job.input = "/nonexistent/momentcf-input";
  const Outcome missing = drive(job);
  CHECK(missing.code == 2);
}

TEST_CASE("gparams reports both routes and agreement") {
  JobSpec job;
  job.command = Command::GParams;
  const Outcome r = drive(job, "moments 4\n1 1/2 1/3 1/4\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("direct-verdict HausdorffConsistent") != std::string::npos);
  CHECK(r.out.find("proof-path-verdict HausdorffConsistent") != std::string::npos);
  CHECK(r.out.find("agree yes") != std::string::npos);
}

TEST_CASE("oracle reports hankel determinants and the cm table verdict") {
  JobSpec job;
  job.command = Command::Oracle;
  const Outcome r = drive(job, "moments 5\n1 1/2 1/3 1/4 1/5\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("hankel-h0 3\n1\n1/12\n1/2160\n") != std::string::npos);
  CHECK(r.out.find("hankel-negative none") != std::string::npos);
  CHECK(r.out.find("cm-violation none") != std::string::npos);

  const Outcome bad = drive(job, "moments 4\n1 2 4 8\n");
  CHECK(bad.out.find("cm-violation k=1 n=0") != std::string::npos);
}

TEST_CASE("demo runs clean in both formats") {
  JobSpec job;
  job.command = Command::Demo;
  job.samples = 5;
  CHECK(drive(job).code == 0);
  job.format = OutputFormat::Json;
  const Outcome r = drive(job);
  CHECK(r.code == 0);
  CHECK(r.out.find("\"catalan\"") != std::string::npos);
}

TEST_CASE("output lands in the requested file") {
  JobSpec job = convert_job(ReprKind::Moments);
  const auto out_path = std::filesystem::temp_directory_path() / "momentcf-out.txt";
  job.output = out_path.string();
  const Outcome r = drive(job, "moments 2\n1 1/2\n");
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(out_path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == "moments 2\n1\n1/2\n");
  std::filesystem::remove(out_path);
}

// End-to-end checks against the real binary.
TEST_CASE("installed binary honors the exit-code contract") {
  const std::string bin = MOMENTCF_CLI_PATH;
  const auto in_path = temp_file("momentcf-cli-in.txt", "moments 4\n1 1/2 1/3 1/4\n");
  const auto bad_path = temp_file("momentcf-cli-bad.txt", "moments 2\n1 0.5\n");
  const auto null_out = std::string(" > /dev/null 2>&1");

  CHECK(std::system((bin + " demo --samples 3" + null_out).c_str()) == 0);
  CHECK(std::system((bin + " classify --input " + in_path.string() + null_out).c_str()) == 0);
  CHECK(std::system((bin + " --help" + null_out).c_str()) == 0);

  const int parse_fail =
      std::system((bin + " classify --input " + bad_path.string() + null_out).c_str());
  CHECK(WEXITSTATUS(parse_fail) == 2);

  const int usage_fail = std::system((bin + " convert --input " + in_path.string() +
                                      " --to nowhere" + null_out).c_str());
  CHECK(WEXITSTATUS(usage_fail) == 2);

  std::filesystem::remove(in_path);
  std::filesystem::remove(bad_path);
}
