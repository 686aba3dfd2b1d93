// Acceptance suite: runs every top-level criterion and prints one
// PASS/FAIL line each. Exits nonzero if any criterion fails.

#include <iostream>
#include <random>
#include <sstream>

#include "yangrep/serialize.hpp"

using namespace yangrep;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = {}) {
  std::cout << "CRITERION " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

Rat rq(const char* s) { return parse_rat_or_throw(s); }

RatFuncU lf(const Rat& c) { return RatFuncU::linear_factor(c); }
RatFuncU lf(const char* c) { return RatFuncU::linear_factor(rq(c)); }

RatFuncU half_den() { return lf("1/2").reciprocal(); }

DenseVec unit_vec(int dim, int idx) {
  DenseVec v(dim, Rat(0));
  v[idx] = Rat(1);
  return v;
}

// ---- criterion 1: defining relations over the catalog --------------------

void criterion_relations() {
  auto cat = standard_catalog();
  bool coverage = cat.size() >= 12;
  const char* needles[] = {"Y2:",  "Y3:",      "Y-2:", "Y+2:", "Y+3:",
                           "sp2-", "o3-spin"};
  for (const char* n : needles) {
    bool found = false;
    for (const auto& [name, x] : cat) found = found || name.find(n) != std::string::npos;
    coverage = coverage && found;
  }
  VerifyReport rep = verify_defining_catalog();
  std::string detail;
  for (const auto& c : rep.checks)
    if (!c.pass) detail = c.description + ": " + c.counterexample;
  report(1, "defining relations hold exactly on the module catalog (" +
                std::to_string(cat.size()) + " modules)",
         coverage && rep.pass(), detail);
}

// ---- criteria 2 and 3: criterion/oracle sweeps ---------------------------

void criterion_sweeps() {
  SweepResult t = run_sweep(grid_tensor_pairs());
  std::ostringstream d2;
  d2 << t.agreements << "/" << t.points;
  report(2, "tensor-pair string criterion equals brute-force irreducibility (" +
                d2.str() + " points)",
         t.all_agree && t.points == 144);

  SweepResult s = run_sweep(grid_symplectic_pairs());
  SweepResult o = run_sweep(grid_orthogonal_mixed());
  std::ostringstream d3;
  d3 << s.agreements << "/" << s.points << " symplectic, " << o.agreements << "/"
     << o.points << " orthogonal mixed";
  report(3, "twisted string criteria equal brute-force irreducibility (" + d3.str() + ")",
         s.all_agree && o.all_agree && s.points > 0 && o.points > 0);
}

// ---- criterion 4: highest-weight product formulas ------------------------

std::map<std::string, std::vector<RatFuncU>> expected_highest_weights() {
  std::map<std::string, std::vector<RatFuncU>> e;
  e["Y2:L(1,0)"] = {lf("1"), RatFuncU::one()};
  e["Y2:L(1,0)xL(1,0)"] = {lf("1") * lf("1"), RatFuncU::one()};
  e["Y2:L(2,0)xL(1,-1)"] = {lf("2") * lf("1"), lf("-1")};
  e["Y2:L(1,0)xL(1/2,-1/2)xL(0,-1)"] = {lf("1") * lf("1/2"), lf("-1/2") * lf("-1")};
  e["Y2:shift(1/2,L(1,0))"] = {lf("1").shift(rq("1/2")), RatFuncU::one()};
  e["Y2:twist((1+1/u)^-1,L(1,1))"] = {RatFuncU::one(), RatFuncU::one()};
  e["Y3:L(1,1,0)"] = {lf("1"), lf("1"), RatFuncU::one()};
  e["Y3:L(1,0,0)xL(1,1,0)"] = {lf("1") * lf("1"), lf("1"), RatFuncU::one()};
  e["Y-2:L(3/2,-1/2)"] = {lf("-1/2") * lf("-3/2")};
  e["Y-2:L(1,0)xL(2,-1)"] = {lf("0") * lf("-1") * lf("-1") * lf("-2")};
  e["Y+2:L(3/2,-1/2)"] = {lf("-1/2") * lf("-3/2")};
  e["Y+2:L(1,0)xV(-3/2)"] = {lf("-1") * lf("0") * lf("-3/2") * half_den()};
  e["Y+2:L(3/2,-1/2)xV(1)"] = {lf("-3/2") * lf("-1/2") * lf("1") * half_den()};
  e["Y+3:L(1,1,0)"] = {lf("1") * lf("-1"), lf("-1") * lf("0")};
  e["Y+3:L(2,2,0)xL(1,1,0)"] = {lf("2") * lf("-2") * lf("1") * lf("-1"),
                                lf("-2") * lf("0") * lf("-1") * lf("0")};
  e["sp2-eval:mu=-1"] = {lf("-3/2") / lf("-1/2")};
  e["o3-spin"] = {RatFuncU::one(), lf("0") * half_den()};
  return e;
}

void criterion_hw_products() {
  auto expected = expected_highest_weights();
  bool ok = true;
  std::string detail;
  for (const auto& [name, x] : standard_catalog()) {
    auto it = expected.find(name);
    if (it == expected.end()) {
      ok = false;
      detail = "no expected value for " + name;
      break;
    }
    auto blocks = singular_eigenspaces(x);
    HighestWeight hw = extract_hw(x, blocks[0].basis[0]);
    if (hw.components.size() != it->second.size()) {
      ok = false;
      detail = name + ": component count";
      break;
    }
    for (std::size_t i = 0; i < hw.components.size(); ++i)
      if (!(hw.components[i] == it->second[i])) {
        ok = false;
        detail = name + ": component " + std::to_string(i);
      }
  }
  report(4, "extracted highest weights equal the product formulas on every catalog module",
         ok, detail);
}

// ---- criterion 5: determinants -------------------------------------------

void criterion_determinants() {
  VerifyReport rep = verify_qdet_sdet_catalog();
  std::string detail;
  for (const auto& c : rep.checks)
    if (!c.pass) detail = c.description;
  report(5, "quantum/Sklyanin determinant checks pass on the catalog", rep.pass(), detail);
}

// ---- criterion 6: classification solvers ---------------------------------

void criterion_solvers() {
  bool ok = true;
  std::string detail;

  FactoredSeries one = FactoredSeries::one();
  FactoredSeries plus1;
  plus1.mul_factor(Rat(1), 1);
  auto a = arrow(plus1, one);
  if (!a || !(a->to_poly() == PolyU({Rat(0), Rat(1)}))) {
    ok = false;
    detail = "arrow((1+1/u), 1)";
  }

  FactoredSeries minus1;
  minus1.mul_factor(Rat(-1), 1);
  auto sa = sym_arrow(minus1);
  if (!sa || !sa->center_symmetric() ||
      !(sa->to_poly() == PolyU({Rat(0), Rat(-1), Rat(1)}))) {  // u(u-1)
    ok = false;
    detail = "sym_arrow((1-1/u))";
  }

  for (const char* g : {"-3/2", "-1", "-1/2", "0", "1/2", "1", "3/2", "2"}) {
    FactoredSeries mu;
    mu.mul_factor(rq(g), 1);
    mu.mul_factor(rq("1/2"), -1);
    auto sol = gamma_solver(mu);
    if (!sol || !sol->first.is_one() || sol->second != -rq(g)) {
      ok = false;
      detail = std::string("gamma_solver on the one-dimensional weight, gamma=") + g;
    }
  }

  // 200 randomized round trips: build the weight from a random symmetric
  // polynomial and gamma, then recover the pair exactly.
  std::mt19937 rng(20231201);
  std::uniform_int_distribution<int> small(-2, 2), cnt(0, 2), half(0, 1);
  int done = 0;
  while (done < 200) {
    RootMultiset p;
    std::vector<Rat> deltas;
    const int s = cnt(rng);
    for (int i = 0; i < s; ++i) deltas.push_back(Rat(small(rng)) + Rat(half(rng)) / 2);
    for (const auto& d : deltas) {
      p.add(d, 1);
      p.add(-(d + 1), 1);
    }
    const Rat gamma = Rat(small(rng)) + Rat(half(rng)) / 2;
    if (p.mult.count(gamma)) continue;
    FactoredSeries mu;
    for (const auto& d : deltas) {
      mu.mul_factor(-(d + 1), 1);
      mu.mul_factor(d, 1);
    }
    mu.mul_factor(-gamma, 1);
    mu.mul_factor(rq("1/2"), -1);
    auto sol = gamma_solver(mu);
    if (!sol || !(sol->first == p) || sol->second != gamma) {
      ok = false;
      detail = "random round trip " + std::to_string(done);
      break;
    }
    ++done;
  }
  report(6, "classification solvers: examples and 200 randomized exact round trips", ok,
         detail);
}

// ---- criterion 7: module-level vs formula-level sharp weights -------------

void criterion_sharp() {
  struct Tuple {
    std::vector<Rat> gammas;
  };
  std::vector<Tuple> tuples;
  for (const char* g : {"-3/2", "-1", "0", "1", "3/2", "2"}) tuples.push_back({{rq(g)}});
  tuples.push_back({{Rat(1), Rat(0), rq("-1/2")}});
  tuples.push_back({{rq("3/2"), rq("1/2"), Rat(-1)}});
  tuples.push_back({{Rat(1), Rat(0), rq("1/2")}});
  tuples.push_back({{Rat(2), Rat(0), rq("-3/2")}});
  tuples.push_back({{rq("1/2"), rq("1/2"), Rat(0)}});
  tuples.push_back({{Rat(2), Rat(1), rq("1/2")}});

  bool ok = tuples.size() >= 10;
  std::string detail;
  for (const auto& [gammas] : tuples) {
    Action m = [&] {
      if (gammas.size() == 1) return onedim_plus(-gammas[0]);
      Action left = eval_module(build_gl2(gammas[0], -gammas[1]), symmetric_scheme(2));
      return tensor_mixed(left, onedim_plus(-gammas[2]));
    }();
    if (!is_irreducible(m)) {
      ok = false;
      detail = "tuple is reducible";
      break;
    }
    Action conj = sharp_conjugate(m);
    auto blocks = singular_eigenspaces(conj);
    RatFuncU module_level = extract_hw(conj, blocks[0].basis[0]).components[0];
    RatFuncU formula = factored_to_ratfunc(sharp_weight(gammas));
    if (!(module_level == formula)) {
      ok = false;
      std::ostringstream os;
      os << "mismatch for (";
      for (const auto& g : gammas) os << rat_str(g) << " ";
      os << ")";
      detail = os.str();
      break;
    }
  }
  report(7, "module-level sharp weights equal the closed formula on " +
                std::to_string(tuples.size()) + " modules",
         ok, detail);
}

// ---- criterion 8: reducible restriction decompositions --------------------

void criterion_example_decompositions() {
  bool ok = true;
  std::string detail;
  const std::pair<const char*, const char*> params[] = {
      {"3/2", "1/2"}, {"5/2", "1/2"}, {"5/2", "3/2"}};
  for (const auto& [g1, g2] : params) {
    VerifyReport rep = verify_reducible_restriction(rq(g1), rq(g2));
    if (!rep.pass()) {
      ok = false;
      for (const auto& c : rep.checks)
        if (!c.pass) detail = std::string(g1) + "," + g2 + ": " + c.description;
    }
  }
  report(8, "reducible orthogonal restrictions decompose with the stated parts", ok, detail);
}

// ---- criterion 9: chain operator identities -------------------------------

void criterion_chains() {
  bool ok = true;
  std::string detail;
  const std::pair<const char*, const char*> k1[] = {{"2", "0"}, {"3", "1"}, {"5/2", "1/2"}};
  for (const auto& [a, b] : k1) {
    VerifyReport rep = verify_lowering_chain(rq(a), rq(b), 3);
    if (!rep.pass()) {
      ok = false;
      for (const auto& c : rep.checks)
        if (!c.pass) detail = std::string(a) + "," + b + ": " + c.description;
    }
  }
  for (const std::vector<int>& ps : {std::vector<int>{1, 0}, std::vector<int>{1, 1}}) {
    VerifyReport rep = verify_singular_chains({Rat(2), Rat(3)}, {Rat(0), Rat(1)}, ps);
    if (!rep.pass()) {
      ok = false;
      for (const auto& c : rep.checks)
        if (!c.pass) detail = "k=2: " + c.description;
    }
  }
  report(9, "lowering-chain and star-operator identities hold exactly", ok, detail);
}

// ---- criterion 10: predicate cross-validation and witnesses ----------------

void criterion_cross_validation() {
  SweepResult cross = run_sweep(grid_plus3_vs_odd());
  SweepResult wy = run_sweep(grid_y_witness());
  SweepResult wm = run_sweep(grid_yminus_witness());
  SweepResult wo = run_sweep(grid_plus_odd_witness());
  std::ostringstream d;
  d << "cross " << cross.agreements << "/" << cross.points << ", witnesses "
    << wy.agreements << "/" << wy.points << ", " << wm.agreements << "/" << wm.points
    << ", " << wo.agreements << "/" << wo.points;
  report(10, "predicate cross-validation and constructive witnesses (" + d.str() + ")",
         cross.all_agree && wy.all_agree && wm.all_agree && wo.all_agree &&
             cross.points == 36);
}

// ---- criterion 11: determinism --------------------------------------------

void criterion_determinism() {
  bool ok = true;
  std::string detail;
  auto same_twice = [&](const char* what, const std::function<std::string()>& f) {
    const std::string a = f(), b = f();
    if (a != b) {
      ok = false;
      detail = what;
    }
  };
  same_twice("defining catalog", [] {
    return verify_report_to_json(verify_defining_catalog()).dump();
  });
  same_twice("determinant catalog", [] {
    return verify_report_to_json(verify_qdet_sdet_catalog()).dump();
  });
  same_twice("star highest weight", [] {
    return verify_report_to_json(verify_star_hw({Rat(1)}, {Rat(0)})).dump();
  });
  same_twice("lowering chain", [] {
    return verify_report_to_json(verify_lowering_chain(Rat(2), Rat(0), 3)).dump();
  });
  same_twice("reducible restriction", [] {
    return verify_report_to_json(verify_reducible_restriction(rq("3/2"), rq("1/2"))).dump();
  });
  same_twice("oracle sweeps", [] {
    return verify_report_to_json(verify_oracle_sweeps()).dump();
  });
  same_twice("cross-validation csv", [] {
    return sweep_to_csv(run_sweep(grid_plus3_vs_odd()));
  });
  same_twice("module serialization", [] {
    auto parsed = module_spec_from_json(Json::parse(
        R"({"family":"Y+","N":2,"expr":{"tensor_mixed":{
          "left":{"eval":{"hw":["3/2","-1/2"]}},
          "right":{"onedim":{"gamma":"-3/2"}}}}})"));
    Action x = build_from_expr(parsed.family, parsed.N, parsed.expr);
    return action_to_json(x).dump() + analysis_to_json(analyze(x)).dump();
  });
  report(11, "all suites re-run bit-identically", ok, detail);
}

}  // namespace

int main() {
  criterion_relations();
  criterion_sweeps();
  criterion_hw_products();
  criterion_determinants();
  criterion_solvers();
  criterion_sharp();
  criterion_example_decompositions();
  criterion_chains();
  criterion_cross_validation();
  criterion_determinism();
  if (failures == 0)
    std::cout << "ACCEPTANCE: all criteria passed\n";
  else
    std::cout << "ACCEPTANCE: " << failures << " criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
