#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "sdr/cli.hpp"

using namespace sdr;

namespace {

struct RunResult {
  int code = -1;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli_run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json slurp_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("check: classical triangle passes, exit 0") {
  const RunResult r = run({"check", "--tri", "builtin:pascal", "--order", "5", "--rows", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("triangle: pascal") != std::string::npos);
  CHECK(r.out.find("order 5 on 12 rows: PASS") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("check: usage and precondition errors exit 2 with one-line diagnostics") {
  const RunResult rows = run({"check", "--tri", "builtin:pascal", "--order", "8", "--rows", "5"});
  CHECK(rows.code == 2);
  CHECK(rows.out.empty());
  CHECK(rows.err.rfind("error: ", 0) == 0);

  const RunResult flag = run({"check", "--tri", "builtin:pascal", "--order", "3", "--rows", "5",
                              "--bogus"});
  CHECK(flag.code == 2);
  CHECK(flag.err.rfind("error: ", 0) == 0);

  const RunResult none = run({});
  CHECK(none.code == 2);

  const RunResult spec = run({"check", "--tri", "builtin:nope", "--order", "3", "--rows", "5"});
  CHECK(spec.code == 2);
  CHECK(spec.err.find("nope") != std::string::npos);

  const RunResult missing =
      run({"check", "--tri", "file:/no/such/file.json", "--order", "3", "--rows", "4"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("/no/such/file.json") != std::string::npos);
}

TEST_CASE("help exits 0 and descends to the requested subcommand") {
  const RunResult top = run({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("check") != std::string::npos);
  CHECK(top.out.find("conjecture") != std::string::npos);

  const RunResult sub = run({"check", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--order") != std::string::npos);
}

TEST_CASE("check --json writes the machine-readable report") {
  const std::string path = "cli_tmp_check.json";
  const RunResult r = run({"check", "--tri", "builtin:narayana", "--order", "4", "--rows", "9",
                           "--json", path});
  CHECK(r.code == 0);
  const nlohmann::json j = slurp_json(path);
  CHECK(j["order"] == 4);
  CHECK(j["rows"] == 9);
  CHECK(j["verdict"] == "pass");
  CHECK(j["violations_total"] == 0);
  std::remove(path.c_str());
}

TEST_CASE("minor output pipes back in as a file triangle") {
  const std::string path = "cli_tmp_minor.json";
  const RunResult mk =
      run({"minor", "--tri", "builtin:aerated", "--rows", "7", "--j", "2", "--json", path});
  REQUIRE(mk.code == 0);

  const RunResult chk = run({"check", "--tri", "file:" + path, "--order", "3", "--rows", "6"});
  CHECK(chk.code == 1);
  CHECK(chk.out.find("FAIL") != std::string::npos);
  CHECK(chk.out.find("54 != 48") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("max-order reports the boundary and exits by cap") {
  const RunResult aer = run({"max-order", "--tri", "builtin:aerated", "--rows", "12", "--cap", "8"});
  CHECK(aer.code == 1);
  CHECK(aer.out.find("max verified order on 12 rows (cap 8): 3") != std::string::npos);

  const RunResult pas = run({"max-order", "--tri", "builtin:pascal", "--rows", "8", "--cap", "8"});
  CHECK(pas.code == 0);
  CHECK(pas.out.find("(cap 8): 8") != std::string::npos);
}

TEST_CASE("print and the window transforms render exact tables") {
  CHECK(run({"print", "--tri", "builtin:pascal", "--rows", "3"}).out == "1\n1  1\n1  2  1\n");
  CHECK(run({"invert", "--tri", "builtin:pascal", "--rows", "3"}).out ==
        " 1\n-1   1\n 1  -2  1\n");
  CHECK(run({"power", "--tri", "builtin:pascal", "--rows", "3", "--exp", "2"}).out ==
        "1\n2  1\n4  4  1\n");
  CHECK(run({"power", "--tri", "builtin:pascal", "--rows", "3", "--exp=-1"}).out ==
        run({"invert", "--tri", "builtin:pascal", "--rows", "3"}).out);
  CHECK(run({"minor", "--tri", "builtin:pascal", "--rows", "4", "--j", "2"}).out ==
        "1\n1  1\n1  3  1\n");
}

TEST_CASE("hadamard modes and their conflicts") {
  CHECK(run({"hadamard", "--a", "builtin:pascal", "--b", "builtin:narayana", "--rows", "3"}).out ==
        "1\n1  1\n1  6  1\n");

  const RunResult inv = run({"hadamard", "--inv", "builtin:lah", "--rows", "2"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("1/2") != std::string::npos);

  const RunResult both =
      run({"hadamard", "--inv", "builtin:lah", "--a", "builtin:pascal", "--rows", "2"});
  CHECK(both.code == 2);
  CHECK(both.err.find("cannot be combined") != std::string::npos);

  CHECK(run({"hadamard", "--a", "builtin:pascal", "--rows", "2"}).code == 2);
}

TEST_CASE("riordan subcommands") {
  const RunResult win =
      run({"riordan", "window", "--d", "geomrec:1", "--h", "tgeomrec:1", "--rows", "3"});
  CHECK(win.code == 0);
  CHECK(win.out == "1\n1  1\n1  2  1\n");

  const RunResult mul = run({"riordan", "mul", "--d", "geomrec:1", "--h", "tgeomrec:1", "--d2",
                             "geomrec:1", "--h2", "tgeomrec:1", "--rows", "5"});
  CHECK(mul.code == 0);
  CHECK(mul.out == "d: 1,2,4,8,16\nh: 0,1,2,4,8\n");

  const RunResult inv =
      run({"riordan", "inverse", "--d", "geomrec2", "--h", "tgeomrec2", "--rows", "9"});
  CHECK(inv.code == 0);
  CHECK(inv.out == "d: 1,0,-1,0,2,0,-5,0,14\nh: 0,1,0,-1,0,2,0,-5,0\n");

  CHECK(run({"riordan", "mul", "--d", "geomrec:1", "--h", "tgeomrec:1", "--rows", "4"}).code == 2);
  CHECK(run({"riordan", "inverse", "--d", "geomrec:1", "--h", "geomrec:1", "--rows", "4"}).code ==
        2);

  const std::string path = "cli_tmp_riordan.json";
  const RunResult js = run({"riordan", "inverse", "--d", "geomrec:1", "--h", "tgeomrec:1",
                            "--rows", "4", "--json", path});
  CHECK(js.code == 0);
  const nlohmann::json j = slurp_json(path);
  CHECK(j["d"] == nlohmann::json({"1", "-1", "1", "-1"}));
  CHECK(j["h"] == nlohmann::json({"0", "1", "-1", "1"}));
  std::remove(path.c_str());
}

TEST_CASE("conjecture harness through the CLI") {
  const RunResult ok = run({"conjecture", "inverse", "--family", "product-random", "--trials", "3",
                            "--rows", "7", "--seed", "9"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verdicts: 3 consistent, 0 candidates, 0 skipped") != std::string::npos);

  const std::string path = "cli_tmp_conj.json";
  const RunResult bad = run({"conjecture", "minor", "--family", "aerated-binomial", "--j", "2",
                             "--rows", "7", "--json", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("counterexample-candidate") != std::string::npos);
  CHECK(bad.out.find("[exploratory]") != std::string::npos);
  CHECK(bad.out.find("verdicts: 0 consistent, 1 candidates, 0 skipped") != std::string::npos);
  const nlohmann::json j = slurp_json(path);
  REQUIRE(j.is_array());
  CHECK(j[0]["verdict"] == "counterexample-candidate");
  std::remove(path.c_str());

  CHECK(run({"conjecture", "minor", "--family", "no-such", "--trials", "1"}).code == 2);
}

TEST_CASE("SDR_MAX_CELLS caps work before it starts") {
  setenv("SDR_MAX_CELLS", "10", 1);
  const RunResult capped =
      run({"check", "--tri", "builtin:pascal", "--order", "5", "--rows", "12"});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("SDR_MAX_CELLS") != std::string::npos);

  setenv("SDR_MAX_CELLS", "abc", 1);
  const RunResult bad = run({"check", "--tri", "builtin:pascal", "--order", "3", "--rows", "4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("SDR_MAX_CELLS") != std::string::npos);

  unsetenv("SDR_MAX_CELLS");
  CHECK(run({"check", "--tri", "builtin:pascal", "--order", "5", "--rows", "12"}).code == 0);
}
