#include "doctest.h"
#include "yangrep/verify.hpp"

using namespace yangrep;

namespace {
Rat rr(const char* s) { return parse_rat_or_throw(s); }
}

TEST_CASE("catalog sanity") {
  auto cat = standard_catalog();
  CHECK(cat.size() >= 12);
  for (const auto& [name, x] : cat) {
    CHECK(x.dim >= 1);
    CHECK(!name.empty());
  }
}

TEST_CASE("defining relations on small catalog entries") {
  for (const auto& [name, x] : standard_catalog()) {
    if (x.dim > 4) continue;  // the full pass is an acceptance criterion
    VerifyReport rep = verify_defining(x, name);
    CHECK(rep.pass());
    CHECK(rep.samples_used >= (2 * x.degree_bound + 3) * (2 * x.degree_bound + 3));
  }
}

TEST_CASE("corrupted module fails with a localized counterexample") {
  Action x = restrict_S(eval_module(build_gl2(rr("3/2"), rr("-1/2")), symmetric_scheme(2)),
                        Family::YMinus);
  RatFuncMat e = x.entry(1, 0);
  e.set(0, 0, e.get(0, 0) + RatFuncU::linear_factor(Rat(2)) - RatFuncU::one());
  x.entry(1, 0) = e;
  VerifyReport rep = verify_defining(x, "corrupted");
  CHECK(!rep.pass());
  bool found = false;
  for (const auto& c : rep.checks)
    if (!c.pass && !c.counterexample.empty()) found = true;
  CHECK(found);
}

TEST_CASE("determinant suite on a restriction") {
  Action x = restrict_S(eval_module(build_gl2(Rat(1), Rat(0)), symmetric_scheme(2)),
                        Family::YMinus);
  VerifyReport rep = verify_qdet_sdet(x, "Y-2:L(1,0)");
  CHECK(rep.pass());
  CHECK(rep.samples_used >= 5);
}

TEST_CASE("star highest weight checks") {
  VerifyReport rep = verify_star_hw({Rat(1)}, {Rat(0)});
  CHECK(rep.pass());
  CHECK(rep.samples_used == 8);
}

TEST_CASE("lowering chain identities, small instance") {
  VerifyReport rep = verify_lowering_chain(Rat(2), Rat(0), 2);
  for (const auto& c : rep.checks) {
    INFO(c.description << " " << c.counterexample);
    CHECK(c.pass);
  }
}

TEST_CASE("reducible restriction decomposition") {
  VerifyReport rep = verify_reducible_restriction(rr("3/2"), rr("1/2"));
  for (const auto& c : rep.checks) {
    INFO(c.description << " " << c.counterexample);
    CHECK(c.pass);
  }
  CHECK_THROWS_AS(verify_reducible_restriction(Rat(1), Rat(0)), Error);
}
