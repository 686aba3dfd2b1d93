#include <random>

#include "doctest.h"
#include "yangrep/linalg.hpp"

using namespace yangrep;

namespace {

Rat rr(const char* s) { return parse_rat_or_throw(s); }

std::mt19937 rng(20240527);

Rat random_rat(int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return Rat(num(rng)) / Rat(den(rng));
}

PolyU random_poly(int maxdeg) {
  std::uniform_int_distribution<int> d(0, maxdeg);
  std::vector<Rat> c;
  const int deg = d(rng);
  for (int i = 0; i <= deg; ++i) c.push_back(random_rat());
  return PolyU(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(rr("-3/2")) == "-3/2");
  CHECK(rat_str(rr("4/2")) == "2");
  CHECK(rr("0") == Rat(0));
  CHECK(!parse_rat("1/0"));
  CHECK(!parse_rat(""));
  CHECK(!parse_rat("1.5"));
  CHECK(!parse_rat("2/-3"));
  CHECK(is_half_integer(rr("-3/2")));
  CHECK(!is_half_integer(rr("2")));
  CHECK(is_nonneg_integer(rr("0")));
  CHECK(!is_nonneg_integer(rr("-1")));
}

TEST_CASE("exact arithmetic round trips") {
  for (int i = 0; i < 50; ++i) {
    Rat a = random_rat(), b = random_rat();
    CHECK((a + b) - b == a);
  }
  for (int i = 0; i < 30; ++i) {
    PolyU a = random_poly(4), b = random_poly(4);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      auto [q, r] = PolyU::divmod(a, b);
      CHECK(q * b + r == a);
    }
  }
  for (int i = 0; i < 30; ++i) {
    RatFuncU a(random_poly(3), PolyU::linear(Rat(i + 1)));
    RatFuncU b(random_poly(3), PolyU::linear(Rat(-i - 2)));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("polynomial shift, negate and roots") {
  PolyU p = PolyU::from_roots({Rat(1), rr("-1/2")});
  CHECK(p.eval(Rat(1)) == 0);
  CHECK(p.shift(Rat(1)).eval(Rat(0)) == 0);
  CHECK(p.negate_u().eval(Rat(-1)) == 0);
  auto [roots, rest] = p.rational_roots();
  CHECK(rest.degree() == 0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == rr("-1/2"));
  CHECK(roots[1].first == Rat(1));
}

TEST_CASE("rational function series expansion") {
  // (u+1)/u = 1 + u^{-1}
  RatFuncU f(PolyU::linear(Rat(1)), PolyU({Rat(0), Rat(1)}));
  auto s = f.series_at_infinity(4);
  CHECK(s[0] == 1);
  CHECK(s[1] == 1);
  CHECK(s[2] == 0);
  CHECK(s[3] == 0);
  // 1/(u+1/2) = u^{-1} - (1/2) u^{-2} + (1/4) u^{-3} - ...
  RatFuncU g(PolyU::one(), PolyU::linear(rr("1/2")));
  auto t = g.series_at_infinity(4);
  CHECK(t[0] == 0);
  CHECK(t[1] == 1);
  CHECK(t[2] == rr("-1/2"));
  CHECK(t[3] == rr("1/4"));
}

TEST_CASE("kernel examples") {
  SparseMat m(2, 2);
  m.set(0, 0, Rat(1));
  m.set(0, 1, Rat(1));
  m.set(1, 0, Rat(1));
  m.set(1, 1, Rat(1));
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == DenseVec{Rat(1), Rat(-1)});

  CHECK(kernel(SparseMat::identity(3)).empty());

  SparseMat z(1, 1);
  auto kz = kernel(z);
  REQUIRE(kz.size() == 1);
  CHECK(kz[0] == DenseVec{Rat(1)});
}

TEST_CASE("kernel rank property on random matrices") {
  std::uniform_int_distribution<int> dim(1, 7), entry(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int r = dim(rng), c = dim(rng);
    SparseMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (entry(rng) > 0) m.set(i, j, Rat(entry(rng)) / Rat(1 + (trial % 3)));
    auto k = kernel(m);
    CHECK(static_cast<int>(k.size()) + rank(m) == c);
    for (const auto& v : k) CHECK(is_zero_vec(m.apply(v)));
  }
}

TEST_CASE("subspace closure examples and properties") {
  // Cyclic shift on 3 coordinates spans everything from e1.
  SparseMat shift(3, 3);
  shift.set(1, 0, Rat(1));
  shift.set(2, 1, Rat(1));
  DenseVec e1{Rat(1), Rat(0), Rat(0)};
  auto span = subspace_closure({e1}, {shift});
  CHECK(span.dim() == 3);

  auto just_seed = subspace_closure({e1}, {});
  CHECK(just_seed.dim() == 1);

  // Idempotent and monotone.
  auto again = subspace_closure(span.basis, {shift});
  CHECK(again.basis == span.basis);
  auto bigger = subspace_closure({e1, DenseVec{Rat(0), Rat(1), Rat(0)}}, {});
  CHECK(bigger.dim() >= just_seed.dim());

  SparseMat wrong(2, 2);
  CHECK_THROWS_AS(subspace_closure({e1}, {wrong}), Error);
}

TEST_CASE("intersect kernels") {
  std::vector<SparseMat> id{SparseMat::identity(2)};
  CHECK(intersect_kernels(id).empty());
  std::vector<SparseMat> zeros{SparseMat::zero(2, 3), SparseMat::zero(1, 3)};
  CHECK(intersect_kernels(zeros).size() == 3);
}

TEST_CASE("rational interpolation") {
  // f(u) = (u+1)/u from four samples.
  std::vector<std::pair<Rat, Rat>> samples;
  for (int x = 1; x <= 4; ++x) samples.emplace_back(Rat(x), Rat(x + 1) / Rat(x));
  RatFuncU f = interpolate_ratfunc(samples, 1, 1);
  CHECK(f.num() == PolyU::linear(Rat(1)));
  CHECK(f.den() == PolyU({Rat(0), Rat(1)}));

  std::vector<std::pair<Rat, Rat>> ones{{Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(3), Rat(1)}};
  CHECK(interpolate_ratfunc(ones, 0, 0).is_one());

  std::vector<std::pair<Rat, Rat>> bad{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(3), Rat(1)}};
  CHECK_THROWS_AS(interpolate_ratfunc(bad, 0, 0), Error);

  // A sample point sitting on the pole of every candidate is rejected.
  std::vector<std::pair<Rat, Rat>> pole{
      {Rat(0), Rat(5)}, {Rat(1), Rat(1)}, {Rat(2), rr("1/2")}, {Rat(3), rr("1/3")}};
  CHECK_THROWS_AS(interpolate_ratfunc(pole, 0, 1), Error);
}

TEST_CASE("interpolation round trip on random rational functions") {
  std::uniform_int_distribution<int> d(0, 4);
  int done = 0;
  while (done < 100) {
    const int nd = d(rng), dd = d(rng);
    PolyU num = random_poly(nd);
    PolyU den = PolyU::from_roots([&] {
      std::vector<Rat> roots;
      for (int i = 0; i < dd; ++i) roots.push_back(Rat(-(i + 20)));
      return roots;
    }());
    if (num.is_zero()) continue;
    RatFuncU f(num, den);
    std::vector<std::pair<Rat, Rat>> samples;
    for (int x = 1; x <= nd + dd + 2; ++x) samples.emplace_back(Rat(x), f.eval_or_throw(Rat(x)));
    RatFuncU g = interpolate_ratfunc(samples, nd, dd);
    CHECK(g == f);
    ++done;
  }
}
