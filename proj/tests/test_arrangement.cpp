#include <algorithm>

#include "crgstir/arrangement.hpp"
#include "test_util.hpp"

using namespace crgstir;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
  // product over divisors is x^m - 1
  for (int m = 1; m <= 12; ++m) {
    IntPoly prod(1);
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) prod = prod * cyclotomic_polynomial(d);
    CHECK(prod == IntPoly::monomial(1, static_cast<std::size_t>(m)) - IntPoly(1));
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  for (int m = 1; m <= 8; ++m) {
    auto z = CycloNumber::zeta_power(m, 1);
    CycloNumber acc(m, 1);
    CycloNumber sum(m, 0);
    for (int i = 0; i < m; ++i) {
      sum += acc;
      acc = acc * z;
    }
    CHECK(acc == CycloNumber(m, 1));
    if (m > 1) CHECK(sum.is_zero());
    CHECK(z * z.inverse() == CycloNumber(m, 1));
    auto w = CycloNumber(m, 3) + CycloNumber::zeta_power(m, 2) - CycloNumber(m, Rational(1, 2)) * z;
    if (!w.is_zero()) CHECK(w * w.inverse() == CycloNumber(m, 1));
    CHECK(CycloNumber::zeta_power(m, -1) == z.inverse());
  }
  CHECK(CycloNumber::zeta_power(4, 2).to_string() == "-1");
  CHECK(CycloNumber::zeta_power(3, 2).to_string() == "-1-z");
  CHECK_THROWS_AS(CycloNumber(3, 0).inverse(), std::domain_error);
}

TEST_CASE("reflection hyperplanes") {
  CHECK(reflection_hyperplanes(2, 1, 2).size() == 4);
  CHECK(reflection_hyperplanes(2, 2, 2).size() == 2);
  auto a = reflection_hyperplanes(1, 1, 2);
  REQUIRE(a.size() == 1);
  CHECK(a[0].to_string() == "(1)X1 + (-1)X2");
  CHECK_THROWS_AS(reflection_hyperplanes(4, 3, 2), std::invalid_argument);
  auto b2 = reflection_hyperplanes(2, 1, 2);
  std::vector<std::string> s;
  for (auto& f : b2) s.push_back(f.to_string());
  CHECK(s == std::vector<std::string>{"(1)X1", "(1)X2", "(1)X1 + (-1)X2", "(-1)X1 + (-1)X2"});
}

TEST_CASE("intersection lattices: sizes") {
  auto a1 = intersection_lattice(reflection_hyperplanes(1, 1, 2), 1, 2);
  CHECK(a1.elements.size() == 2);
  auto b2 = intersection_lattice(reflection_hyperplanes(2, 1, 2), 2, 2);
  CHECK(b2.elements.size() == 6);
  CHECK(b2.whitney().second == std::vector<BigInt>{1, 4, 1});
  auto d2 = intersection_lattice(reflection_hyperplanes(2, 2, 2), 2, 2);
  CHECK(d2.elements.size() == 4);
}

TEST_CASE("subspace canonical form is order independent") {
  auto hs = reflection_hyperplanes(3, 1, 3);
  Subspace fwd(3, 3), rev(3, 3);
  for (std::size_t i = 0; i < hs.size(); i += 3) fwd = fwd.intersect(hs[i]);
  for (std::size_t i = hs.size(); i-- > 0;)
    if (i % 3 == 0) rev = rev.intersect(hs[i]);
  CHECK(fwd == rev);
  CHECK(fwd.codim() == 3);
  Subspace one = Subspace(3, 3).intersect(hs[4]).intersect(hs[7]);
  Subspace two = Subspace(3, 3).intersect(hs[7]).intersect(hs[4]);
  CHECK(one == two);
  CHECK(Subspace(3, 3).below(one));
  CHECK(!one.below(Subspace(3, 3)));
}

TEST_CASE("iso check on small cases") {
  struct T {
    int m, p, n;
  };
  for (T t : {T{2, 1, 2}, T{2, 2, 2}, T{1, 1, 3}, T{3, 1, 2}, T{3, 3, 2}, T{2, 2, 3}}) {
    auto geom = intersection_lattice(reflection_hyperplanes(t.m, t.p, t.n), t.m, t.n);
    auto cert = iso_check(geom, t.m, t.p, t.n);
    INFO(t.m << "," << t.p << "," << t.n << ": " << cert.counterexample);
    CHECK(cert.ok);
    auto comb = PartitionLattice::build(t.m, t.n, t.p == t.m);
    CHECK(whitney_numbers(comb).second == geom.whitney().second);
    CHECK(whitney_numbers(comb).first == geom.whitney().first);
  }
}

TEST_CASE("proper divisors give the same lattice") {
  auto a = intersection_lattice(reflection_hyperplanes(4, 1, 2), 4, 2);
  auto b = intersection_lattice(reflection_hyperplanes(4, 2, 2), 4, 2);
  CHECK(a.elements == b.elements);
  auto c = intersection_lattice(reflection_hyperplanes(4, 4, 2), 4, 2);
  CHECK(c.elements.size() < a.elements.size());
}

TEST_CASE("pseudoreflections fix their hyperplanes") {
  for (int m = 1; m <= 4; ++m)
    for (int p = 1; p <= m; ++p) {
      if (m % p) continue;
      for (const auto& h : reflection_hyperplanes(m, p, 3)) CHECK(pseudoreflection_fixes(h, m, p));
    }
}
