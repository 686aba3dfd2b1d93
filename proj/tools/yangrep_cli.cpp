// Command line interface: build, analyze, classify, verify, sweep.
// stdout carries pure JSON or CSV; diagnostics go to stderr.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "yangrep/serialize.hpp"

namespace {

using yangrep::Json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw yangrep::ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw yangrep::ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw yangrep::Error("cannot write " + path);
  out << text;
}

int run_build(const std::string& spec_path, const std::string& out_path) {
  Json spec = read_json_file(spec_path);
  auto parsed = yangrep::module_spec_from_json(spec);
  yangrep::Action x = yangrep::build_from_expr(parsed.family, parsed.N, parsed.expr);
  x.check_identity_at_infinity();
  Json out = yangrep::action_to_json(x);
  if (out_path.empty())
    std::cout << out.dump(2) << "\n";
  else
    write_text_file(out_path, out.dump(2) + "\n");
  return 0;
}

int run_analyze(const std::string& module_path) {
  yangrep::Action x = yangrep::action_from_json(read_json_file(module_path));
  std::cout << yangrep::analysis_to_json(yangrep::analyze(x)).dump(2) << "\n";
  return 0;
}

int run_classify(const std::string& input_path) {
  Json in;
  if (input_path.empty()) {
    try {
      std::cin >> in;
    } catch (const std::exception& e) {
      throw yangrep::ParseError(std::string("invalid JSON on stdin: ") + e.what());
    }
  } else {
    in = read_json_file(input_path);
  }
  std::cout << yangrep::run_classify_json(in).dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& suite, const std::string& module_path,
               const std::vector<std::string>& alphas, const std::vector<std::string>& betas,
               int pmax, const std::vector<int>& ps, const std::string& g1,
               const std::string& g2) {
  using namespace yangrep;
  VerifyReport rep;
  auto rats = parse_rat_list(alphas);
  auto bats = parse_rat_list(betas);
  if (suite == "defining") {
    if (module_path.empty()) {
      rep = verify_defining_catalog();
    } else {
      Action x = action_from_json(read_json_file(module_path));
      rep = verify_defining(x, module_path);
    }
  } else if (suite == "qdet_sdet") {
    if (module_path.empty()) {
      rep = verify_qdet_sdet_catalog();
    } else {
      Action x = action_from_json(read_json_file(module_path), true);
      rep = verify_qdet_sdet(x, module_path);
    }
  } else if (suite == "star_hw") {
    rep = verify_star_hw(rats, bats);
  } else if (suite == "prop62") {
    if (rats.size() != 1 || bats.size() != 1)
      throw ParseError("prop62 takes one --alpha and one --beta");
    rep = verify_lowering_chain(rats[0], bats[0], pmax);
  } else if (suite == "prop63_64") {
    rep = verify_singular_chains(rats, bats, ps);
  } else if (suite == "example57") {
    rep = verify_reducible_restriction(parse_rat_or_throw(g1), parse_rat_or_throw(g2));
  } else if (suite == "oracle_sweep") {
    rep = verify_oracle_sweeps();
  } else {
    throw ParseError("unknown suite: " + suite);
  }
  std::cout << verify_report_to_json(rep).dump(2) << "\n";
  return rep.pass() ? 0 : kExitCheckFailed;
}

int run_sweep_cmd(const std::string& config_path, const std::string& grid_name,
                  const std::string& out_path) {
  if (config_path.empty() == grid_name.empty())
    throw yangrep::ParseError("sweep needs exactly one of --config or --grid");
  yangrep::SweepConfig cfg =
      grid_name.empty() ? yangrep::sweep_config_from_json(read_json_file(config_path))
                        : yangrep::standard_grid(grid_name);
  yangrep::SweepResult res = yangrep::run_sweep(cfg);
  const std::string csv = yangrep::sweep_to_csv(res);
  if (out_path.empty())
    std::cout << csv;
  else
    write_text_file(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with Yangian and twisted Yangian modules"};
  app.require_subcommand(1);

  std::string spec_path, out_path, module_path, input_path, config_path, grid_name;
  std::string suite, g1 = "3/2", g2 = "1/2";
  std::vector<std::string> alphas{"1"}, betas{"0"};
  std::vector<int> ps{1, 1};
  int pmax = 3;

  auto* build = app.add_subcommand("build", "construct a module from a specification");
  build->add_option("--spec", spec_path, "module specification JSON")->required();
  build->add_option("--out", out_path, "output module file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "structural analysis of a module file");
  analyze->add_option("--module", module_path, "module file")->required();

  auto* classify = app.add_subcommand("classify", "run a classification predicate");
  classify->add_option("--input", input_path, "predicate JSON (default stdin)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "defining|qdet_sdet|star_hw|prop62|prop63_64|example57|oracle_sweep")
      ->required();
  verify->add_option("--module", module_path, "module file (defining/qdet_sdet)");
  verify->add_option("--alpha", alphas, "alpha parameters");
  verify->add_option("--beta", betas, "beta parameters");
  verify->add_option("--pmax", pmax, "largest chain length (prop62)");
  verify->add_option("--p", ps, "lowering counts (prop63_64)");
  verify->add_option("--gamma1", g1, "first parameter (example57)");
  verify->add_option("--gamma2", g2, "second parameter (example57)");

  auto* sweep = app.add_subcommand("sweep", "evaluate a predicate/oracle grid to CSV");
  sweep->add_option("--config", config_path, "sweep configuration JSON");
  sweep->add_option("--grid", grid_name,
                    "standard grid: tensor_pairs|symplectic_pairs|orthogonal_mixed|"
                    "plus3_vs_odd|y_witness|yminus_witness|plus_odd_witness");
  sweep->add_option("--out", out_path, "output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  // Documented default instance for the two-parameter chain suite.
  if (verify->parsed() && suite == "prop63_64" && !verify->count("--alpha")) {
    alphas = {"2", "3"};
    betas = {"0", "1"};
  }

  try {
    if (build->parsed()) return run_build(spec_path, out_path);
    if (analyze->parsed()) return run_analyze(module_path);
    if (classify->parsed()) return run_classify(input_path);
    if (verify->parsed())
      return run_verify(suite, module_path, alphas, betas, pmax, ps, g1, g2);
    if (sweep->parsed()) return run_sweep_cmd(config_path, grid_name, out_path);
  } catch (const yangrep::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const yangrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
