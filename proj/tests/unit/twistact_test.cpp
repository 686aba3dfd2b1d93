#include "doctest.h"
#include "yangrep/analysis.hpp"
#include "yangrep/classify.hpp"
#include "yangrep/twisted.hpp"

using namespace yangrep;

namespace {

Rat rr(const char* s) { return parse_rat_or_throw(s); }

Action eval_sym_gl2(const char* a, const char* b) {
  return eval_module(build_gl2(rr(a), rr(b)), symmetric_scheme(2));
}

RatFuncU fac(std::initializer_list<std::pair<const char*, int>> fs) {
  FactoredSeries f;
  for (const auto& [c, e] : fs) f.mul_factor(rr(c), e);
  return factored_to_ratfunc(f);
}

RatFuncU hw_component(const Action& x, int comp) {
  DenseVec v(x.dim, Rat(0));
  v[0] = Rat(1);
  return extract_hw(x, v).components[comp];
}

// Quaternary commutation relation at one admissible sample pair, all
// index quadruples; exact rational arithmetic throughout.
bool quaternary_at(const Action& x, const Rat& u0, const Rat& v0) {
  const int N = x.N();
  const LieAlgebra alg = twisted_algebra(x.family);
  std::vector<SparseMat> at_u, at_v;
  for (int p = 0; p < N * N; ++p) {
    at_u.push_back(x.entries[p].eval(u0));
    at_v.push_back(x.entries[p].eval(v0));
  }
  auto U = [&](int i, int j) -> const SparseMat& {
    return at_u[x.scheme.pos_of(i) * N + x.scheme.pos_of(j)];
  };
  auto V = [&](int i, int j) -> const SparseMat& {
    return at_v[x.scheme.pos_of(i) * N + x.scheme.pos_of(j)];
  };
  const Rat duv = u0 - v0, suv = u0 + v0, squ = u0 * u0 - v0 * v0;
  for (int i : x.scheme.all_indices())
    for (int j : x.scheme.all_indices())
      for (int k : x.scheme.all_indices())
        for (int l : x.scheme.all_indices()) {
          SparseMat lhs = U(i, j) * V(k, l) - V(k, l) * U(i, j);
          SparseMat rhs = (U(k, j) * V(i, l) - V(k, j) * U(i, l)) * (Rat(1) / duv);
          rhs = rhs - (U(i, -k) * V(-j, l) * Rat(theta(alg, k, -j)) -
                       V(k, -i) * U(-l, j) * Rat(theta(alg, i, -l))) *
                          (Rat(1) / suv);
          rhs = rhs + (U(k, -i) * V(-j, l) - V(k, -i) * U(-j, l)) *
                          (Rat(theta(alg, i, -j)) / squ);
          if (!(lhs == rhs)) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("restriction highest weights") {
  // Symplectic restriction of L(3/2,-1/2): mu(u) = (1-(3/2)u^{-1})(1-(1/2)u^{-1}).
  Action x = restrict_S(eval_sym_gl2("3/2", "-1/2"), Family::YMinus);
  CHECK(symmetry_relation_holds(x));
  CHECK(hw_component(x, 0) == fac({{"-3/2", 1}, {"-1/2", 1}}));

  // Restriction of the trivial module is trivial.
  Action triv = restrict_S(eval_sym_gl2("0", "0"), Family::YPlus);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      if (p == q)
        CHECK(triv.entry(p, q) == RatFuncMat::identity(1));
      else
        CHECK(triv.entry(p, q).is_zero());
    }

  // Orthogonal restriction: s_{1,-1}(u) is even in u.
  Action y = restrict_S(eval_sym_gl2("3/2", "-1/2"), Family::YPlus);
  const RatFuncMat& s1m1 = y.entry(y.scheme.pos_of(1), y.scheme.pos_of(-1));
  CHECK(s1m1 == s1m1.negate_u());

  // Symplectic: (2u-1) s_{1,-1}(u) = -(2u+1) s_{1,-1}(-u).
  const RatFuncMat& t1m1 = x.entry(x.scheme.pos_of(1), x.scheme.pos_of(-1));
  RatFuncU two_u_m1(PolyU({Rat(-1), Rat(2)}), PolyU::one());
  RatFuncU neg_two_u_m1(PolyU({Rat(-1), Rat(-2)}), PolyU::one());
  CHECK(t1m1.scaled(two_u_m1) == t1m1.negate_u().scaled(neg_two_u_m1));
}

TEST_CASE("sampled quaternary relation") {
  Action x = restrict_S(eval_sym_gl2("3/2", "-1/2"), Family::YMinus);
  CHECK(quaternary_at(x, Rat(1), Rat(2)));
  CHECK(quaternary_at(x, Rat(3), rr("9/2")));
  Action y = restrict_S(eval_sym_gl2("1", "0"), Family::YPlus);
  CHECK(quaternary_at(y, Rat(2), Rat(5)));
}

TEST_CASE("twisted evaluation modules") {
  // o(2) one-dimensional: F_11 = gamma - 1/2 gives (1+gamma u^{-1})(1+u^{-1}/2)^{-1}.
  LieModule o2 = build_g_rank1(LieAlgebra::O, 2, rr("1/2"));  // gamma = 1
  Action x = twisted_eval(o2, Family::YPlus);
  CHECK(hw_component(x, 0) == fac({{"1", 1}, {"1/2", -1}}));

  // sp(2) trivial module.
  Action sp = twisted_eval(build_g_rank1(LieAlgebra::SP, 2, Rat(0)), Family::YMinus);
  CHECK(sp.entry(0, 0) == RatFuncMat::identity(1));

  // o(3) spin: mu_1(u) = u/(u+1/2), mu_0(u) = 1.
  Action spin = twisted_eval(build_spin(3), Family::YPlus);
  const int hw = build_spin(3).hw_index;
  DenseVec v(spin.dim, Rat(0));
  v[hw] = Rat(1);
  auto hwdata = extract_hw(spin, v);
  CHECK(hwdata.components[0].is_one());                      // mu_0
  CHECK(hwdata.components[1] == fac({{"0", 1}, {"1/2", -1}}));  // mu_1
  CHECK(quaternary_at(spin, Rat(1), Rat(3)));

  CHECK_THROWS_AS(twisted_eval(build_spin(3), Family::YMinus), Error);
}

TEST_CASE("one-dimensional orthogonal modules") {
  // gamma = 1/2 is the trivial representation.
  Action triv = onedim_plus(rr("1/2"));
  CHECK(triv.entry(0, 0) == RatFuncMat::identity(1));
  CHECK(triv.entry(1, 1) == RatFuncMat::identity(1));

  // gamma = 1: s_{-1,-1}(u) = u/(u+1/2).
  Action v1 = onedim_plus(Rat(1));
  CHECK(v1.entry(0, 0).get(0, 0) == fac({{"0", 1}, {"1/2", -1}}));

  // The highest weight solves the rank-one classification with (P, gamma') = (1, -gamma).
  auto sol = gamma_solver(factor_ratfunc(v1.entry(1, 1).get(0, 0)).value());
  REQUIRE(sol.has_value());
  CHECK(sol->first.is_one());
  CHECK(sol->second == Rat(-1));
}

TEST_CASE("mixed coideal tensor products") {
  // L(g1,-g2) x V(-g3): product highest weight with the half denominator.
  Action left = eval_sym_gl2("1", "0");  // gamma1 = 1, gamma2 = 0
  Action mixed = tensor_mixed(left, onedim_plus(rr("-3/2")));  // gamma3 = 3/2
  CHECK(hw_component(mixed, 0) ==
        fac({{"-1", 1}, {"0", 1}, {"-3/2", 1}, {"1/2", -1}}));
  CHECK(quaternary_at(mixed, Rat(1), Rat(4)));

  // Tensoring with the trivial one-dimensional module is the restriction.
  Action restr = restrict_S(left, Family::YPlus);
  Action with_triv = tensor_mixed(left, onedim_plus(rr("1/2")));
  for (int p = 0; p < 4; ++p) CHECK(with_triv.entries[p] == restr.entries[p]);
}

TEST_CASE("sklyanin determinant through the quantum determinant") {
  Action triv = restrict_S(eval_sym_gl2("0", "0"), Family::YPlus);
  CHECK(sdet_at(triv, Rat(4)) == SparseMat::identity(1));

  // Symplectic trivial module: the determinant reduces to the gamma factor.
  Action triv_m = restrict_S(eval_sym_gl2("0", "0"), Family::YMinus);
  CHECK(sdet_at(triv_m, Rat(4)) == SparseMat::identity(1) * rr("9/7"));

  // gamma factor identity gamma(u) gamma(-u + N/2 - 1) = 1 at sample points.
  for (int N : {2, 4}) {
    RatFuncU g = gamma_factor(Family::YMinus, N);
    for (const Rat& u : {Rat(2), Rat(3), Rat(5), rr("7/3"), rr("11/4")})
      CHECK(g.eval_or_throw(u) * g.eval_or_throw(-u + Rat(N) / 2 - 1) == 1);
  }

  // Explicit value on the symplectic restriction of L(1,0) at u0 = 4:
  // (9/7) qdet(4) qdet(-3) with qdet scalars 5/4 and 2/3.
  Action x = restrict_S(eval_sym_gl2("1", "0"), Family::YMinus);
  SparseMat s = sdet_at(x, Rat(4));
  Rat scalar;
  REQUIRE(s.is_scalar(&scalar));
  CHECK(scalar == rr("9/7") * rr("5/4") * rr("2/3"));

  // Central: commutes with sampled entries.
  for (int p = 0; p < 4; ++p)
    for (const Rat& v0 : {Rat(1), Rat(2), Rat(3)})
      CHECK(commutator(s, x.entries[p].eval(v0)).is_zero());
  CHECK(sdet_scalar(x, Rat(4)) == scalar);

  CHECK_THROWS_AS(sdet_at(twisted_eval(build_spin(3), Family::YPlus), Rat(3)), Error);
}

TEST_CASE("sharp conjugation") {
  Action v1 = onedim_plus(Rat(1));
  Action c = sharp_conjugate(v1);
  CHECK(c.entry(0, 0) == v1.entry(1, 1));
  CHECK(c.entry(1, 1) == v1.entry(0, 0));
  Action cc = sharp_conjugate(c);
  for (int p = 0; p < 4; ++p) CHECK(cc.entries[p] == v1.entries[p]);

  // Module-level sharp weight of V(gamma) matches the closed formula:
  // it is the s_{-1,-1} eigenvalue.
  for (const char* g : {"-1", "0", "1", "3/2"}) {
    Action v = onedim_plus(rr(g));
    FactoredSeries expected = sharp_weight({-rr(g)});
    CHECK(v.entry(0, 0).get(0, 0) == factored_to_ratfunc(expected));
  }
}

TEST_CASE("orthogonal rank two: spin factor realizes the contracted branch") {
  // Mixed tensor of a gl(4) evaluation module with the o(4) spin module.
  // Its highest weight lands exactly in the branch of the even-rank
  // classification that needs the extra (2u-1)/(2u+1) contraction.
  Action left = eval_module(build_glN({Rat(1), Rat(1), Rat(0), Rat(0)}), symmetric_scheme(4));
  Action spin = twisted_eval(build_spin(4), Family::YPlus);
  Action x = tensor_mixed(left, spin);
  CHECK(x.dim == 12);
  CHECK(symmetry_relation_holds(x));

  auto blocks = singular_eigenspaces(x);
  auto hw = extract_hw(x, blocks[0].basis[0]);
  const RatFuncU expect = fac({{"-1", 1}, {"1/2", -1}});
  CHECK(hw.components[0] == expect);
  CHECK(hw.components[1] == expect);

  FactoredSeries mu;
  mu.mul_factor(Rat(-1), 1);
  mu.mul_factor(rr("1/2"), -1);
  auto res = fd_Yplus_even({mu, mu});
  CHECK(res.finite_dim);
  CHECK(res.epsilon == 2);
  REQUIRE(!res.witnesses.empty());
  CHECK(res.witnesses[0].to_poly() == PolyU({Rat(0), Rat(-1), Rat(1)}));  // u(u-1)
}

TEST_CASE("explicit comatrix entries for the orthogonal rank one case") {
  Action triv3 = restrict_S(eval_module(build_glN({Rat(0), Rat(0), Rat(0)}),
                                        symmetric_scheme(3)),
                            Family::YPlus);
  CHECK(scomatrix3_at(triv3, 0, 0, Rat(4)) == SparseMat::identity(1));

  Action x = restrict_S(eval_module(build_glN({Rat(1), Rat(1), Rat(0)}),
                                    symmetric_scheme(3)),
                        Family::YPlus);
  // Highest vector is an eigenvector of the (1,1) comatrix entry, and the
  // raising entry (-1,0) annihilates it.
  DenseVec xi(x.dim, Rat(0));
  const LieModule m = build_glN({Rat(1), Rat(1), Rat(0)});
  xi[m.hw_index] = Rat(1);
  const Rat u0 = Rat(5);
  DenseVec w = scomatrix3_at(x, 1, 1, u0).apply(xi);
  // From the explicit entry and the highest-weight relations:
  // comatrix_11(u) xi = mu_1(-u) mu_0(u-1) xi.
  RatFuncU mu0 = fac({{"1", 1}, {"-1", 1}});
  RatFuncU mu1 = fac({{"-1", 1}, {"0", 1}});
  Rat expect = mu1.negate_u().eval_or_throw(u0) * mu0.eval_or_throw(u0 - 1);
  CHECK(w == scale(xi, expect));
  CHECK(is_zero_vec(scomatrix3_at(x, -1, 0, u0).apply(xi)));

  // Full comatrix by exact solve agrees with the three explicit entries
  // and satisfies the defining product identity.
  auto full = scomatrix_solve_at(x, u0);
  CHECK(full.at({0, 0}) == scomatrix3_at(x, 0, 0, u0));
  CHECK(full.at({-1, 0}) == scomatrix3_at(x, -1, 0, u0));
  CHECK(full.at({1, 1}) == scomatrix3_at(x, 1, 1, u0));
  const SparseMat det = sdet_at(x, u0);
  for (int i : x.scheme.all_indices())
    for (int k : x.scheme.all_indices()) {
      SparseMat acc(x.dim, x.dim);
      for (int j : x.scheme.all_indices())
        acc = acc + full.at({i, j}) *
                        x.entry(x.scheme.pos_of(j), x.scheme.pos_of(k)).eval(u0 - 2);
      CHECK(acc == (i == k ? det : SparseMat(x.dim, x.dim)));
    }
}
