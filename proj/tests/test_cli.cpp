#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// Path of the command-line binary, passed as the one positional argument.
static std::string g_bin = "../cdf";

namespace {

struct Run {
  int code;
  std::string out;  // stdout and stderr, merged
};

Run run(const std::string& args) {
  std::string cmd = g_bin + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string tmp_file(const std::string& name, const std::string& text) {
  std::string path = "cli_" + name;
  std::ofstream(path) << text;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("verify runs the default configuration and exits clean") {
  Run r = run("verify --suite sign-action --suite wedge --seed 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "suite=sign-action"));
  CHECK(contains(r.out, "suite=wedge"));
  CHECK(contains(r.out, "fail=0"));

  std::string report = "cli_report.txt";
  Run r2 = run("verify --suite sign-action --seed 5 --report " + report);
  CHECK(r2.code == 0);
  std::ifstream in(report);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == r2.out);
}

TEST_CASE("check failures flip the exit code and carry a witness") {
  std::string cfg = tmp_file("corrupt.cfg",
                             "cdfcfg 1\nring Q\nvars x y\ngroup Heis3\n"
                             "suite ideal-identities\ncorrupt ideal 0\n");
  Run r = run("verify --config " + cfg);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "status=fail"));
  CHECK(contains(r.out, "witness="));
}

TEST_CASE("usage and format problems exit with the distinguished code") {
  CHECK(run("verify --config no_such_file.cfg").code == 2);
  CHECK(run("verify --suite no-such-suite").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("eval --expr no_such_file.txt").code == 2);
  std::string junk = tmp_file("junk.cfg", "cdfcfg 1\nring Q\nvars x\ngroup Ga\nwibble 3\n");
  Run r = run("import --file " + junk);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "wibble"));
}

TEST_CASE("expression files evaluate to rendered elements") {
  std::string expr = tmp_file("expr.txt",
                              "cdfexpr 1\nring Q\nvars x y\ngroup Heis3\n"
                              "form f 1 p = d x\nform g 1 q = d y\n"
                              "eval nu d x\neval classical bracket f g\n");
  Run r = run("eval --expr " + expr);
  CHECK(r.code == 0);
  CHECK(r.out == "e(1,x)\n[r] -> dx^dy\n");

  std::string dangling = tmp_file("dangling.txt", "cdfexpr 1\nring Q\nvars x\neval h\n");
  Run bad = run("eval --expr " + dangling);
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "undefined form"));
}

TEST_CASE("definitions round-trip through export and import") {
  Run e = run("export --file cli_default.cfg");
  REQUIRE(e.code == 0);
  Run i = run("import --file cli_default.cfg");
  CHECK(i.code == 0);
  std::ifstream in("cli_default.cfg");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(i.out == ss.str());

  // a custom group participates in validation: a broken antipode is rejected
  std::string bad = tmp_file("badgroup.cfg",
                             "cdfcfg 1\nring Q\nvars x\ngroup Brk\n"
                             "begin group Brk\ngen t\ncomul t = t@0 + t@1\n"
                             "counit t = 0\nantipode t = t\nend\n");
  Run r = run("import --file " + bad);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "antipode"));
}

int main(int argc, char** argv) {
  std::vector<char*> args{argv[0]};
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] != '-')
      g_bin = argv[i];
    else
      args.push_back(argv[i]);
  }
  doctest::Context ctx(static_cast<int>(args.size()), args.data());
  return ctx.run();
}
