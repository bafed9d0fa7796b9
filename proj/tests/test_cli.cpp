#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mdlmon/cli.hpp"

using namespace mdlmon;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult drive(cli::Options opts, const std::string& trace) {
  std::istringstream in(trace);
  std::ostringstream out, err;
  int code = cli::run(opts, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kExampleTrace =
    "{\"t\": \"0\", \"props\": [\"p1\"]}\n"
    "{\"t\": \"4\", \"props\": [\"p1\", \"p2\"]}\n"
    "{\"t\": \"7\", \"props\": [\"p2\"]}\n";

}  // namespace

TEST_CASE("the running example emits one verdict per event and exits fulfilled") {
  cli::Options opts;
  opts.formula = "eventually[8] always[3] p2";
  RunResult r = drive(opts, kExampleTrace);
  CHECK(r.exit_code == cli::kExitFulfilled);
  CHECK(r.out ==
        "{\"t\":\"0\",\"verdict\":\"undetermined\",\"source\":\"initial\"}\n"
        "{\"t\":\"4\",\"verdict\":\"undetermined\",\"source\":\"event\"}\n"
        "{\"t\":\"7\",\"verdict\":\"fulfilled\",\"source\":\"event\"}\n");
  CHECK(r.err.empty());
}

TEST_CASE("identical inputs produce byte-identical output") {
  cli::Options opts;
  opts.formula = "eventually[8] always[3] p2";
  RunResult a = drive(opts, kExampleTrace);
  RunResult b = drive(opts, kExampleTrace);
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("an immediately failed atom exits with the failure code") {
  cli::Options opts;
  opts.formula = "p1";
  RunResult r = drive(opts, "{\"t\": \"0\", \"props\": []}\n");
  CHECK(r.exit_code == cli::kExitFailed);
  CHECK(r.out == "{\"t\":\"0\",\"verdict\":\"failed\",\"source\":\"initial\"}\n");
}

TEST_CASE("timer injection fails the conflicted formula at its bound") {
  cli::Options opts;
  opts.formula = "eventually[5] p & always[5] !p";
  opts.timer = true;
  RunResult r = drive(opts, "{\"t\": \"0\", \"props\": []}\n");
  CHECK(r.exit_code == cli::kExitFailed);
  CHECK(r.out ==
        "{\"t\":\"0\",\"verdict\":\"undetermined\",\"source\":\"initial\"}\n"
        "{\"t\":\"5\",\"verdict\":\"failed\",\"source\":\"timer\"}\n");
}

TEST_CASE("an undetermined end of trace exits with code two") {
  cli::Options opts;
  opts.formula = "eventually[100] p2";
  RunResult r = drive(opts, "{\"t\": \"0\", \"props\": []}\n{\"t\": \"1\", \"props\": []}\n");
  CHECK(r.exit_code == cli::kExitUndetermined);
}

TEST_CASE("input errors carry the line number and exit three") {
  cli::Options opts;
  opts.formula = "p1";
  opts.formula = "eventually[100] p2";

  RunResult bad_json = drive(opts, "{\"t\": \"0\", \"props\": []}\nnot json\n");
  CHECK(bad_json.exit_code == cli::kExitInputError);
  CHECK(bad_json.err.find("line 2") != std::string::npos);

  RunResult decreasing = drive(opts, "{\"t\": \"0\", \"props\": []}\n{\"t\": \"0\", \"props\": []}\n");
  CHECK(decreasing.exit_code == cli::kExitInputError);

  RunResult late_start = drive(opts, "{\"t\": \"1\", \"props\": []}\n");
  CHECK(late_start.exit_code == cli::kExitInputError);

  RunResult empty = drive(opts, "");
  CHECK(empty.exit_code == cli::kExitInputError);

  cli::Options bad_formula;
  bad_formula.formula = "always[";
  RunResult r = drive(bad_formula, "");
  CHECK(r.exit_code == cli::kExitInputError);
  CHECK(r.err.find("formula error") != std::string::npos);
}

TEST_CASE("fractional timestamps are parsed exactly") {
  cli::Options opts;
  opts.formula = "eventually[4] p1";
  RunResult r = drive(opts, "{\"t\": \"0\", \"props\": []}\n{\"t\": \"7/2\", \"props\": [\"p1\"]}\n");
  CHECK(r.exit_code == cli::kExitFulfilled);
  CHECK(r.out.find("{\"t\":\"7/2\",\"verdict\":\"fulfilled\",\"source\":\"event\"}") != std::string::npos);
}

TEST_CASE("the explain report names polarities and homogeneity") {
  cli::Options opts;
  opts.explain = true;

  opts.formula = "always (p1 -> eventually[30] !p1)";
  RunResult leads_to = drive(opts, "");
  CHECK(leads_to.exit_code == 0);
  CHECK(leads_to.out.find("homogeneous: yes") != std::string::npos);
  CHECK(leads_to.out.find("negative predicates: P1") != std::string::npos);
  CHECK(leads_to.out.find("positive predicates: (none)") != std::string::npos);

  opts.formula = "always[5] p1 & eventually[5] !p1";
  CHECK(drive(opts, "").out.find("homogeneous: no") != std::string::npos);

  opts.formula = "p1";
  CHECK(drive(opts, "").out.find("homogeneous: yes") != std::string::npos);
}

TEST_CASE("the reference check confirms the running example") {
  cli::Options opts;
  opts.formula = "eventually[8] always[3] p2";
  opts.check = true;
  opts.horizon = Rational(7);
  RunResult r = drive(opts, kExampleTrace);
  CHECK(r.exit_code == cli::kExitFulfilled);
  CHECK(r.out.find("{\"check\":\"ok\",\"reference\":\"true\"}") != std::string::npos);
}

TEST_CASE("the diagram dump is written after the run") {
  std::string path = "cli_dump_test.txt";
  cli::Options opts;
  opts.formula = "eventually[8] always[3] p2";
  opts.dump_ddd_path = path;
  RunResult r = drive(opts, "{\"t\": \"0\", \"props\": [\"p1\"]}\n");
  CHECK(r.exit_code == cli::kExitUndetermined);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().find("# zero-substitution") != std::string::npos);
  CHECK(buf.str().find("# one-substitution") != std::string::npos);
  CHECK(buf.str().find("# root") != std::string::npos);
  f.close();
  std::remove(path.c_str());
}
