#include <set>

#include "doctest.h"
#include "yangrep/lie_module.hpp"

using namespace yangrep;

namespace {

Rat rr(const char* s) { return parse_rat_or_throw(s); }

// [E_ij, E_kl] = d_kj E_il - d_il E_kj, checked on every constructed module.
void check_gl_commutators(const LieModule& m) {
  for (int i = 0; i < m.N; ++i)
    for (int j = 0; j < m.N; ++j)
      for (int k = 0; k < m.N; ++k)
        for (int l = 0; l < m.N; ++l) {
          SparseMat lhs = commutator(m.gen(i, j), m.gen(k, l));
          SparseMat rhs(m.dim, m.dim);
          if (k == j) rhs = rhs + m.gen(i, l);
          if (i == l) rhs = rhs - m.gen(k, j);
          CHECK(lhs == rhs);
        }
}

// [F_ij, F_kl] from the twisted bracket, plus the antisymmetry relation.
void check_g_commutators(const LieModule& m) {
  IndexScheme sch = symmetric_scheme(m.N);
  auto F = [&](int i, int j) -> const SparseMat& { return m.gen(sch.pos_of(i), sch.pos_of(j)); };
  for (int i : sch.all_indices())
    for (int j : sch.all_indices()) {
      SparseMat anti = F(i, j) + F(-j, -i) * Rat(theta(m.algebra, i, j));
      CHECK(anti.is_zero());
      for (int k : sch.all_indices())
        for (int l : sch.all_indices()) {
          SparseMat lhs = commutator(F(i, j), F(k, l));
          SparseMat rhs(m.dim, m.dim);
          if (k == j) rhs = rhs + F(i, l);
          if (i == l) rhs = rhs - F(k, j);
          if (i == -k) rhs = rhs - F(-j, l) * Rat(theta(m.algebra, k, -j));
          if (-l == j) rhs = rhs + F(k, -i) * Rat(theta(m.algebra, i, -l));
          CHECK(lhs == rhs);
        }
    }
}

}  // namespace

TEST_CASE("index schemes") {
  IndexScheme st = standard_scheme(3);
  CHECK(st.index_at(0) == 1);
  CHECK(st.pos_of(3) == 2);
  IndexScheme sy = symmetric_scheme(4);
  CHECK(sy.all_indices() == std::vector<int>{-2, -1, 1, 2});
  CHECK(sy.neg_pos(sy.pos_of(1)) == sy.pos_of(-1));
  IndexScheme so = symmetric_scheme(3);
  CHECK(so.all_indices() == std::vector<int>{-1, 0, 1});
  CHECK(so.pos_of(0) == 1);
  CHECK(theta(LieAlgebra::SP, -1, 1) == -1);
  CHECK(theta(LieAlgebra::O, -1, 1) == 1);
}

TEST_CASE("gl(2) modules") {
  LieModule m = build_gl2(Rat(1), Rat(0));
  CHECK(m.dim == 2);
  CHECK(m.gen(0, 1).get(0, 1) == 1);  // E_12 xi_1 = 1 * xi_0
  check_gl_commutators(m);

  LieModule triv = build_gl2(Rat(0), Rat(0));
  CHECK(triv.dim == 1);
  CHECK(triv.gen(0, 1).is_zero());
  CHECK(triv.gen(1, 0).is_zero());

  LieModule m3 = build_gl2(rr("3/2"), rr("-1/2"));
  CHECK(m3.dim == 3);
  CHECK(m3.gen(0, 1).get(1, 2) == 2);  // E_12 xi_2 = 2 * xi_1
  check_gl_commutators(m3);

  CHECK_THROWS_AS(build_gl2(Rat(0), Rat(1)), Error);
  CHECK_THROWS_AS(build_gl2(rr("1/2"), Rat(0)), Error);
}

TEST_CASE("gl(N) modules via tensor powers") {
  LieModule m = build_glN({Rat(1), Rat(1), Rat(0)});
  CHECK(m.dim == 3);
  check_gl_commutators(m);
  CHECK(weyl_dim_gl({Rat(1), Rat(1), Rat(0)}) == 3);

  // (a, a, b) has the triangular dimension (m+1)(m+2)/2.
  for (int d = 0; d <= 2; ++d) {
    std::vector<Rat> lam{Rat(d), Rat(d), Rat(0)};
    CHECK(weyl_dim_gl(lam) == Rat((d + 1) * (d + 2)) / 2);
    CHECK(build_glN(lam).dim == (d + 1) * (d + 2) / 2);
  }

  // Rational shift: same shape, scalar-translated weights.
  LieModule shifted = build_glN({rr("5/2"), rr("5/2"), rr("1/2")});
  CHECK(shifted.dim == 6);
  check_gl_commutators(shifted);
  CHECK(shifted.weights[shifted.hw_index] == DenseVec{rr("5/2"), rr("5/2"), rr("1/2")});

  // gl(2) consistency with the explicit construction.
  LieModule a = build_glN({Rat(1), Rat(0)});
  LieModule b = build_gl2(Rat(1), Rat(0));
  CHECK(a.dim == b.dim);
  std::multiset<DenseVec> wa(a.weights.begin(), a.weights.end());
  std::multiset<DenseVec> wb(b.weights.begin(), b.weights.end());
  CHECK(wa == wb);

  CHECK_THROWS_AS(build_glN({Rat(0), Rat(1)}), Error);
}

TEST_CASE("spin modules") {
  LieModule o3 = build_spin(3);
  CHECK(o3.dim == 2);
  check_g_commutators(o3);
  // F_11 eigenvalues -1/2, +1/2
  std::multiset<Rat> eig;
  for (const auto& w : o3.weights) eig.insert(w[0]);
  CHECK(eig == std::multiset<Rat>{rr("-1/2"), rr("1/2")});

  LieModule o4 = build_spin(4);
  CHECK(o4.dim == 2);
  check_g_commutators(o4);

  LieModule o5 = build_spin(5);
  CHECK(o5.dim == 4);
  check_g_commutators(o5);

  CHECK(weyl_dim_g(LieAlgebra::O, 4, {rr("-1/2"), rr("-1/2")}) == 2);
  CHECK(weyl_dim_g(LieAlgebra::O, 5, {rr("-1/2"), rr("-1/2")}) == 4);
}

TEST_CASE("rank one modules") {
  LieModule sp2 = build_g_rank1(LieAlgebra::SP, 2, Rat(-1));
  CHECK(sp2.dim == 2);
  check_g_commutators(sp2);
  CHECK(weyl_dim_g(LieAlgebra::SP, 2, {Rat(-1)}) == 2);

  LieModule o2 = build_g_rank1(LieAlgebra::O, 2, rr("5/2"));
  CHECK(o2.dim == 1);
  CHECK(o2.gen(1, 1).get(0, 0) == rr("5/2"));

  LieModule o3 = build_g_rank1(LieAlgebra::O, 3, rr("-1/2"));
  CHECK(o3.dim == 2);
  check_g_commutators(o3);
  LieModule spin3 = build_spin(3);
  std::multiset<DenseVec> wa(o3.weights.begin(), o3.weights.end());
  std::multiset<DenseVec> wb(spin3.weights.begin(), spin3.weights.end());
  CHECK(wa == wb);

  LieModule big = build_g_rank1(LieAlgebra::O, 3, rr("-3/2"));
  CHECK(big.dim == 4);
  check_g_commutators(big);

  CHECK_THROWS_AS(build_g_rank1(LieAlgebra::SP, 2, rr("-1/2")), Error);
  CHECK_THROWS_AS(build_g_rank1(LieAlgebra::O, 3, rr("-1/4")), Error);
}
