#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "yangrep/serialize.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = {}) {
  const std::string dir = "/tmp/yangrep_cli_test";
  std::system(("mkdir -p " + dir).c_str());
  std::string cmd = std::string(YANGREP_CLI_PATH) + " " + args;
  if (!stdin_data.empty()) {
    std::ofstream in(dir + "/stdin.json");
    in << stdin_data;
    in.close();
    cmd += " < " + dir + "/stdin.json";
  }
  cmd += " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_file(const std::string& name, const std::string& text) {
  const std::string dir = "/tmp/yangrep_cli_test";
  std::system(("mkdir -p " + dir).c_str());
  const std::string path = dir + "/" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("build and analyze round trip through files") {
  const std::string spec = write_file(
      "spec.json", R"({"family":"Y-","N":2,"expr":{"eval":{"hw":["3/2","-1/2"]}}})");
  const std::string mod = "/tmp/yangrep_cli_test/mod.json";
  auto built = run_cli("build --spec " + spec + " --out " + mod);
  CHECK(built.exit_code == 0);

  auto analyzed = run_cli("analyze --module " + mod);
  CHECK(analyzed.exit_code == 0);
  auto j = yangrep::Json::parse(analyzed.out);
  CHECK(j.at("irreducible") == true);
  CHECK(j.at("singular_dim") == 1);

  // build -> serialize -> load -> analyze equals build -> analyze (bitwise).
  using namespace yangrep;
  auto parsed = module_spec_from_json(Json::parse(
      R"({"family":"Y-","N":2,"expr":{"eval":{"hw":["3/2","-1/2"]}}})"));
  Action direct = build_from_expr(parsed.family, parsed.N, parsed.expr);
  CHECK(Json::parse(analyzed.out) == analysis_to_json(analyze(direct)));
}

TEST_CASE("trivial module and malformed input exit codes") {
  const std::string spec =
      write_file("triv.json", R"({"family":"Y","N":2,"expr":{"eval":{"hw":["0","0"]}}})");
  auto built = run_cli("build --spec " + spec);
  CHECK(built.exit_code == 0);
  CHECK(yangrep::Json::parse(built.out).at("dim") == 1);

  const std::string bad =
      write_file("bad.json", R"({"family":"Y","N":2,"expr":{"eval":{"hw":["1/0","0"]}}})");
  CHECK(run_cli("build --spec " + bad).exit_code == 2);

  const std::string nonjson = write_file("nonjson.json", "not json at all");
  CHECK(run_cli("build --spec " + nonjson).exit_code == 2);
}

TEST_CASE("analyze reports reducible structure") {
  const std::string spec = write_file(
      "red.json", R"({"family":"Y+","N":2,"expr":{"eval":{"hw":["3/2","-1/2"]}}})");
  const std::string mod = "/tmp/yangrep_cli_test/red_mod.json";
  REQUIRE(run_cli("build --spec " + spec + " --out " + mod).exit_code == 0);
  auto analyzed = run_cli("analyze --module " + mod);
  REQUIRE(analyzed.exit_code == 0);
  auto j = yangrep::Json::parse(analyzed.out);
  CHECK(j.at("singular_dim") == 2);
  CHECK(j.at("irreducible") == false);
  CHECK(j.at("quotient_dim") == 1);
}

TEST_CASE("classify subcommand") {
  auto res = run_cli("classify", R"({"predicate":"fd_Y","lambda":[
    {"factors":[["1",1]]},{"factors":[]},{"factors":[]}]})");
  CHECK(res.exit_code == 0);
  auto j = yangrep::Json::parse(res.out);
  CHECK(j.at("finite_dim") == true);
  CHECK(j.at("P")[0].at("roots").at("0") == 1);
  CHECK(j.at("P")[1].at("roots").empty());

  CHECK(run_cli("classify", R"({"predicate":"fd_Y"')").exit_code == 2);
}

TEST_CASE("verify subcommand exit codes") {
  auto ok = run_cli("verify --suite example57 --gamma1 3/2 --gamma2 1/2");
  CHECK(ok.exit_code == 0);
  CHECK(yangrep::Json::parse(ok.out).at("pass") == true);

  // A corrupted module file fails the defining suite with exit code 1.
  using namespace yangrep;
  auto parsed = module_spec_from_json(
      Json::parse(R"({"family":"Y-","N":2,"expr":{"eval":{"hw":["1","0"]}}})"));
  Action x = build_from_expr(parsed.family, parsed.N, parsed.expr);
  RatFuncMat e = x.entry(1, 0);
  e.set(0, 0, e.get(0, 0) + RatFuncU(Rat(1)));
  x.entry(1, 0) = e;
  const std::string corrupted = write_file("corrupt.json", action_to_json(x).dump());
  auto bad = run_cli("verify --suite defining --module " + corrupted);
  CHECK(bad.exit_code == 1);
  auto j = Json::parse(bad.out);
  CHECK(j.at("pass") == false);

  CHECK(run_cli("verify --suite nosuch").exit_code == 2);
}

TEST_CASE("verify suites through the command line") {
  CHECK(run_cli("verify --suite star_hw --alpha 1 --beta 0").exit_code == 0);
  CHECK(run_cli("verify --suite prop62 --alpha 2 --beta 0 --pmax 2").exit_code == 0);
  CHECK(run_cli("verify --suite prop63_64").exit_code == 0);
}

TEST_CASE("sweep subcommand") {
  const std::string cfg = write_file("sweep.json", R"({"predicate":"plus3_vs_odd",
    "axes":{"alpha":["1","1/2","1/4"],"beta":["0"]}})");
  auto res = run_cli("sweep --config " + cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("TOTAL,3,3,true") != std::string::npos);

  const std::string bad = write_file("badsweep.json", R"({"predicate":"???","axes":{}})");
  CHECK(run_cli("sweep --config " + bad).exit_code == 2);
}
