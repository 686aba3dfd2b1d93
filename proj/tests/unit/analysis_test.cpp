#include <random>

#include "doctest.h"
#include "yangrep/analysis.hpp"

using namespace yangrep;

namespace {

Rat rr(const char* s) { return parse_rat_or_throw(s); }

Action eval_gl2(const char* a, const char* b, bool sym = false) {
  return eval_module(build_gl2(rr(a), rr(b)), sym ? symmetric_scheme(2) : standard_scheme(2));
}

RatFuncU fac(std::initializer_list<std::pair<const char*, int>> fs) {
  FactoredSeries f;
  for (const auto& [c, e] : fs) f.mul_factor(rr(c), e);
  return factored_to_ratfunc(f);
}

}  // namespace

TEST_CASE("singular spaces") {
  Action irr = tensor_action({eval_gl2("1", "0"), eval_gl2("1", "0")});
  CHECK(singular_space(irr).dim() == 1);

  // Two singular lines in this leg order; the opposite order has one.
  Action red = tensor_action({eval_gl2("1", "-1"), eval_gl2("2", "0")});
  CHECK(singular_space(red).dim() == 2);
  Action red_flip = tensor_action({eval_gl2("2", "0"), eval_gl2("1", "-1")});
  CHECK(singular_space(red_flip).dim() == 1);

  Action triv = eval_gl2("0", "0");
  CHECK(singular_space(triv).dim() == 1);
}

TEST_CASE("highest weight extraction") {
  Action x = restrict_S(eval_gl2("1", "0", true), Family::YMinus);
  DenseVec v(x.dim, Rat(0));
  v[0] = Rat(1);
  auto hw = extract_hw(x, v);
  CHECK(hw.components[0] == fac({{"-1", 1}, {"0", 1}}));
  REQUIRE(hw.factored[0].has_value());
  FactoredSeries expect;
  expect.mul_factor(Rat(-1), 1);
  CHECK(*hw.factored[0] == expect);  // the (1+0 u^{-1}) factor is invisible

  Action triv = eval_gl2("0", "0");
  DenseVec w{Rat(1)};
  for (const auto& c : extract_hw(triv, w).components) CHECK(c.is_one());

  // Bad mixture in a two-dimensional singular space is rejected.
  Action red = tensor_action({eval_gl2("1", "-1"), eval_gl2("2", "0")});
  Subspace s = singular_space(red);
  REQUIRE(s.dim() == 2);
  DenseVec mix = s.basis[0] + s.basis[1];
  CHECK_THROWS_AS(extract_hw(red, mix), Error);
}

TEST_CASE("cyclic spans and irreducibility") {
  Action irr = tensor_action({eval_gl2("1", "0"), eval_gl2("1", "0")});
  DenseVec hw(irr.dim, Rat(0));
  hw[0] = Rat(1);
  CHECK(cyclic_span(irr, hw).dim() == 4);
  CHECK(is_irreducible(irr));

  Action red = tensor_action({eval_gl2("2", "0"), eval_gl2("1", "-1")});
  DenseVec hw2(red.dim, Rat(0));
  hw2[0] = Rat(1);
  CHECK(cyclic_span(red, hw2).dim() < red.dim);
  CHECK(!is_irreducible(red));

  // Orthogonal restriction of L(3/2,-1/2) is reducible (the string
  // of the factor contains -1/2).
  Action y = restrict_S(eval_gl2("3/2", "-1/2", true), Family::YPlus);
  CHECK(!is_irreducible(y));

  // Every nonzero vector of an irreducible module generates everything.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(-2, 2);
  for (int t = 0; t < 10; ++t) {
    DenseVec v(irr.dim, Rat(0));
    bool nz = false;
    for (auto& c : v) {
      c = Rat(coin(rng));
      nz = nz || c != 0;
    }
    if (!nz) v[0] = Rat(1);
    CHECK(cyclic_span(irr, v).dim() == irr.dim);
  }
}

TEST_CASE("irreducible quotients") {
  // L(2,0) x L(1,-1) has a 9-dimensional carrier and an 8-dimensional
  // irreducible quotient from the highest vector (same highest weight as
  // the irreducible L(1,0) x L(2,-1)).
  Action red = tensor_action({eval_gl2("2", "0"), eval_gl2("1", "-1")});
  DenseVec hw(red.dim, Rat(0));
  hw[0] = Rat(1);
  auto [q, dim] = irreducible_quotient(red, hw);
  CHECK(dim == 8);
  CHECK(is_irreducible(q));
  DenseVec qhw(q.dim, Rat(0));
  qhw[0] = Rat(1);  // images keep the highest vector first
  auto cross = tensor_action({eval_gl2("1", "0"), eval_gl2("2", "-1")});
  CHECK(cross.dim == 8);
  CHECK(is_irreducible(cross));

  // Quotient of an already irreducible module is itself.
  Action irr = tensor_action({eval_gl2("1", "0"), eval_gl2("1", "0")});
  DenseVec v(irr.dim, Rat(0));
  v[0] = Rat(1);
  CHECK(irreducible_quotient(irr, v).second == 4);

  // Non-singular vector is rejected.
  DenseVec bottom(irr.dim, Rat(0));
  bottom[irr.dim - 1] = Rat(1);
  CHECK_THROWS_AS(irreducible_quotient(irr, bottom), Error);

  // Orthogonal restriction of L(3/2,-1/2): the highest vector generates a
  // one-dimensional submodule, and so does the second singular line.
  Action y = restrict_S(eval_gl2("3/2", "-1/2", true), Family::YPlus);
  DenseVec xi(y.dim, Rat(0));
  xi[0] = Rat(1);
  CHECK(irreducible_quotient(y, xi).second == 1);
  auto blocks = singular_eigenspaces(y);
  REQUIRE(blocks.size() == 2);
  CHECK(cyclic_span(y, blocks[1].basis[0]).dim() == 1);
}

TEST_CASE("weight spaces") {
  Action a = eval_gl2("1", "0");
  auto w = weight_spaces(a);
  REQUIRE(w.size() == 2);
  CHECK(w[0].first == DenseVec{Rat(0), Rat(1)});
  CHECK(w[0].second == 1);
  CHECK(w[1].first == DenseVec{Rat(1), Rat(0)});
  CHECK(w[1].second == 1);

  Action t = tensor_action({a, a});
  for (const auto& [wt, count] : weight_spaces(t))
    if (wt == DenseVec{Rat(1), Rat(1)}) CHECK(count == 2);

  Action spin = twisted_eval(build_spin(3), Family::YPlus);
  auto ws = weight_spaces(spin);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].first == DenseVec{rr("-1/2")});
  CHECK(ws[1].first == DenseVec{rr("1/2")});
}

TEST_CASE("full analysis report") {
  Action irr = tensor_action({eval_gl2("1", "0"), eval_gl2("1", "0")});
  AnalysisReport r = analyze(irr);
  CHECK(r.singular_dim == 1);
  CHECK(r.irreducible);
  CHECK(r.quotient_dim == 4);
  CHECK(r.hw.components[0] == fac({{"1", 2}}));

  Action red = tensor_action({eval_gl2("1", "-1"), eval_gl2("2", "0")});
  AnalysisReport r2 = analyze(red);
  CHECK(r2.singular_dim == 2);
  CHECK(!r2.irreducible);
  CHECK(r2.quotient_dim == 8);
  // The report extracts the highest weight from the maximal-weight line.
  CHECK(r2.hw.components[0] == fac({{"2", 1}, {"1", 1}}));
  CHECK(r2.hw.components[1] == fac({{"0", 1}, {"-1", 1}}));
}
