#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "solvcore/cli.hpp"

using namespace solvcore;
using namespace solvcore::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::vector<const char*> argv{"solvcore"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// exit codes of the installed binary, for the process-level contract
int spawn(const std::string& args) {
  std::string cmd = std::string(SOLVCORE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("wp/cp/pp answers") {
  CHECK(invoke({"cp", "--group", "S(2,2)", "x1 x2 X1 X2", "x1 x1"}).out == "no\n");
  CHECK(invoke({"cp", "--group", "S(2,2)", "x1 x2 X1 X2", "x1 x1"}).code == kExitOk);
  CHECK(invoke({"pp", "--group", "S(2,2)", "x1 x1", "x1"}).out == "n = 2\n");
  CHECK(invoke({"wp", "--group", "S(1,2)", "x1 x2 X1 X2"}).out == "yes\n");
  CHECK(invoke({"wp", "--group", "Z/3", "x1 x1 x1"}).out == "yes\n");
  CHECK(invoke({"pp", "--group", "S(2,2)", "x1", "x2"}).out == "no\n");
}

TEST_CASE("csp answers") {
  Result r = invoke({"csp", "--group", "S(2,2)", "x1 x2 X1 X2", "x1 x1 x2 X1 X2 X1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.substr(0, 12) == "conjugator: ");
  CHECK(invoke({"csp", "--group", "Z/3", "x1", "x1 x1"}).out == "no\n");
}

TEST_CASE("pair and magnus printing") {
  CHECK(invoke({"pair", "--group", "wr(Z^1,Z^1)", "x1 y1"}).out == "y1 | y1 -> x1\n");
  CHECK(invoke({"magnus", "--group", "S(2,2)", "x1 x2 X1 X2"}).out ==
        "mu = 1 ; u[1] = 1*1 + -1*x2 ; u[2] = 1*x1 + -1*1\n");
  CHECK(invoke({"pair", "--group", "S(2,2)", "x1"}).code == kExitUnsupported);
  CHECK(invoke({"magnus", "--group", "S(1,2)", "x1"}).code == kExitUnsupported);
  CHECK(invoke({"magnus", "--group", "Z^2", "x1"}).code == kExitUnsupported);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"cp", "--group", "Z/0", "x1", "x1"}).code == kExitUsage);
  CHECK(invoke({"wp", "--group", "Z^2", "x9"}).code == kExitUsage);
  CHECK(invoke({"wp", "--group", "Z^2", "bogus token"}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"wp"}).code == kExitUsage);
}

TEST_CASE("answers are byte-deterministic") {
  std::vector<std::string> args{"csp", "--group", "wr(Z^1,Z^1)", "y1 x1", "x1 y1"};
  Result a = invoke(args);
  Result b = invoke(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  CHECK(a.out == "conjugator: Y1\n");
}

TEST_CASE("trace goes to stderr, answers to stdout") {
  Result r = invoke({"cp", "--group", "wr(Z^1,Z^1)", "y1 x1", "x1 y1", "--trace"});
  CHECK(r.out == "yes\n");
  CHECK(r.err.find("# step 1") != std::string::npos);
  CHECK(r.err.find("# case 3") != std::string::npos);
}

TEST_CASE("cross-check flag answers the same") {
  CHECK(invoke({"cp", "--group", "S(2,2)", "x1 x2 X1 X2", "x1 x2 x1 x2 X1 X2 X1 X2", "--cross-check"})
            .out ==
        invoke({"cp", "--group", "S(2,2)", "x1 x2 X1 X2", "x1 x2 x1 x2 X1 X2 X1 X2"}).out);
}

TEST_CASE("process exit codes") {
  CHECK(spawn("cp --group \"S(2,2)\" \"x1 x2 X1 X2\" \"x1 x1\"") == kExitOk);
  CHECK(spawn("wp --group \"Z^2\" \"x9\"") == kExitUsage);
  CHECK(spawn("magnus --group \"S(1,2)\" \"x1\"") == kExitUnsupported);
  CHECK(spawn("--help") == kExitOk);
}

TEST_CASE("selftest passes end to end") { CHECK(spawn("selftest") == kExitOk); }

TEST_CASE("SOLVCORE_BUDGET env variable reaches the lifting fallback") {
  std::string cmd = std::string("SOLVCORE_BUDGET=3 ") + SOLVCORE_CLI_PATH +
                    " csp --group \"S(2,2)\" \"x1 x2\" \"x2 x1 x2 X1 X2\" >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == kExitOk);
}

TEST_CASE("verbose is an alias for trace") {
  Result r = invoke({"cp", "--group", "wr(Z^1,Z^1)", "y1 x1", "x1 y1", "--verbose"});
  CHECK(r.out == "yes\n");
  CHECK(r.err.find("# case 3") != std::string::npos);
}

TEST_CASE("wreath cp over a solvable base answers rather than bailing") {
  Result r = invoke({"cp", "--group", "wr(Z/2,S(2,2))", "x1 y1", "y1 x1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "yes\n");  // shift the support by y1^-1 in the S(2,2) base
  Result neg = invoke({"cp", "--group", "wr(Z/2,S(2,2))", "x1 y1", "x1 x1 y1"});
  CHECK(neg.code == kExitOk);
  CHECK(neg.out == "no\n");
}
