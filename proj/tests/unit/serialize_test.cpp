#include "doctest.h"
#include "yangrep/serialize.hpp"

using namespace yangrep;

namespace {
Rat rr(const char* s) { return parse_rat_or_throw(s); }
}

TEST_CASE("expression round trip") {
  Json j = Json::parse(R"({"family":"Y+","N":2,"expr":{"tensor_mixed":{
    "left":{"eval":{"hw":["3/2","-1/2"]}},
    "right":{"onedim":{"gamma":"-3/2"}}}}})");
  auto spec = module_spec_from_json(j);
  CHECK(spec.family == Family::YPlus);
  Json back = expr_to_json(spec.expr);
  CHECK(expr_to_json(expr_from_json(back)) == back);

  CHECK_THROWS_AS(module_spec_from_json(Json::parse(R"({"family":"Q","N":2,"expr":{}})")),
                  ParseError);
  CHECK_THROWS_AS(
      module_spec_from_json(Json::parse(R"({"family":"Y","N":2,"expr":{"eval":{"hw":["1/0","0"]}}})")),
      ParseError);
}

TEST_CASE("module files round trip bit for bit") {
  Json spec = Json::parse(R"({"family":"Y-","N":2,"expr":{"tensor":[
    {"eval":{"hw":["1","0"]}},{"eval":{"hw":["2","-1"]}}]}})");
  auto parsed = module_spec_from_json(spec);
  Action x = build_from_expr(parsed.family, parsed.N, parsed.expr);
  Json file = action_to_json(x);
  Action y = action_from_json(file, true);
  CHECK(action_to_json(y) == file);
  CHECK(y.dim == x.dim);
  for (std::size_t i = 0; i < x.entries.size(); ++i) CHECK(x.entries[i] == y.entries[i]);
  REQUIRE(y.underlying != nullptr);
  CHECK(y.underlying->dim == x.underlying->dim);

  // Analysis of the loaded module matches analysis of the built one.
  CHECK(analysis_to_json(analyze(x)) == analysis_to_json(analyze(y)));
}

TEST_CASE("lie module serialization") {
  Json j = lie_module_to_json(build_glN({Rat(1), Rat(1), Rat(0)}));
  CHECK(j.at("algebra") == "gl");
  CHECK(j.at("N") == 3);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("hw") == Json::array({"1", "1", "0"}));
  CHECK(j.at("matrices").size() == 9);

  Json s = lie_module_to_json(build_spin(3));
  CHECK(s.at("algebra") == "o");
  CHECK(s.at("hw") == Json::array({"-1/2"}));
}

TEST_CASE("classification dispatch") {
  Json in = Json::parse(R"({"predicate":"fd_Y-","mu":[{"factors":[["-1",1]]}]})");
  Json out = run_classify_json(in);
  CHECK(out.at("finite_dim") == true);
  CHECK(out.at("P")[0].at("roots").at("0") == 1);
  CHECK(out.at("P")[0].at("roots").at("-1") == 1);

  Json plus3 = run_classify_json(
      Json::parse(R"({"predicate":"fd_Y+3","alpha":["1/2"],"beta":["0"]})"));
  CHECK(plus3.at("finite_dim") == true);
  CHECK(plus3.at("branch") == "half_integral_last");

  Json sym = run_classify_json(Json::parse(R"({"predicate":"sym_arrow","mu":{"factors":[]}})"));
  CHECK(sym.at("exists") == true);
  CHECK(sym.at("P").at("roots").empty());

  CHECK_THROWS_AS(run_classify_json(Json::parse(R"({"predicate":"nope"})")), ParseError);
}

TEST_CASE("verify report serialization is deterministic") {
  VerifyReport rep = verify_reducible_restriction(rr("3/2"), rr("1/2"));
  Json a = verify_report_to_json(rep);
  Json b = verify_report_to_json(verify_reducible_restriction(rr("3/2"), rr("1/2")));
  CHECK(a.dump() == b.dump());
  CHECK(a.at("pass") == true);
}

TEST_CASE("sweep config parsing and csv shape") {
  Json cfg = Json::parse(R"({"predicate":"plus3_vs_odd",
    "axes":{"alpha":["1","1/2"],"beta":["0"]}})");
  SweepResult res = run_sweep(sweep_config_from_json(cfg));
  CHECK(res.points == 2);
  CHECK(res.all_agree);
  const std::string csv = sweep_to_csv(res);
  CHECK(csv.find("alpha,beta,parameterized,odd_rank_one,agree") == 0);
  CHECK(csv.find("TOTAL,2,2,true") != std::string::npos);

  // Empty grid: header-only output.
  Json empty = Json::parse(R"({"predicate":"plus3_vs_odd","axes":{"alpha":[],"beta":["0"]}})");
  SweepResult r2 = run_sweep(sweep_config_from_json(empty));
  CHECK(r2.points == 0);
  CHECK(sweep_to_csv(r2).find("TOTAL,0,0,true") != std::string::npos);

  CHECK_THROWS_AS(sweep_config_from_json(Json::parse(R"({"grid":"zzz"})")), ParseError);
}
