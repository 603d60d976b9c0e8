#include <functional>
#include <random>

#include "crgstir/qpoly.hpp"
#include "test_util.hpp"

using namespace crgstir;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

// Sum over all multisets of size d drawn from vals (monomial expansion).
IntPoly h_bruteforce(int d, const std::vector<IntPoly>& vals) {
  IntPoly total;
  std::function<void(std::size_t, int, IntPoly)> rec = [&](std::size_t start, int left, IntPoly acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (std::size_t i = start; i < vals.size(); ++i) rec(i, left - 1, acc * vals[i]);
  };
  rec(0, d, IntPoly(1));
  return total;
}

// Sum over all d-subsets (square-free monomials).
IntPoly e_bruteforce(int d, const std::vector<IntPoly>& vals) {
  IntPoly total;
  std::function<void(std::size_t, int, IntPoly)> rec = [&](std::size_t start, int left, IntPoly acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (std::size_t i = start; i < vals.size(); ++i) rec(i + 1, left - 1, acc * vals[i]);
  };
  rec(0, d, IntPoly(1));
  return total;
}

}  // namespace

TEST_CASE("IntPoly is canonical and prints compactly") {
  CHECK(poly({1, 2, 0, 0}).coeffs().size() == 2);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({2, 1, 1}).to_string() == "2+q+q^2");
  CHECK((-poly({2, 1, 1})).to_string() == "-2-q-q^2");
  CHECK(poly({0, 0, 3}).to_string() == "3q^2");
  CHECK(IntPoly().to_string() == "0");
  CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
}

TEST_CASE("q_bracket") {
  CHECK(q_bracket(3) == poly({1, 1, 1}));
  CHECK(q_bracket(0).is_zero());
  CHECK(q_bracket(-2).is_zero());
  for (long k = 0; k <= 20; ++k) CHECK(q_bracket(k).at_one() == k);
}

TEST_CASE("m-step factorials") {
  CHECK(q_mstep_factorial(7, 3) == q_bracket(7) * q_bracket(4) * q_bracket(1));
  CHECK(q_mstep_factorial(-1, 2) == IntPoly(1));
  CHECK(q_mstep_factorial(0, 4) == IntPoly(1));
  CHECK(mstep_factorial(3, 2) == 3);
  CHECK(mstep_factorial(-4, 3) == 1);
  CHECK(mstep_factorial(6, 3) == 18);
  for (long m = 1; m <= 5; ++m)
    for (long l = -3; l <= 15; ++l) CHECK(q_mstep_factorial(l, m).at_one() == mstep_factorial(l, m));
}

TEST_CASE("homogeneous and elementary evaluations") {
  std::vector<IntPoly> v14{IntPoly(1), IntPoly(4)};
  CHECK(homogeneous_eval(0, v14) == IntPoly(1));
  CHECK(homogeneous_eval(2, v14) == IntPoly(21));
  std::vector<IntPoly> br{q_bracket(1), q_bracket(3)};
  CHECK(homogeneous_eval(1, br) == poly({2, 1, 1}));
  std::vector<IntPoly> v123{IntPoly(1), IntPoly(2), IntPoly(3)};
  CHECK(elementary_eval(0, v123) == IntPoly(1));
  CHECK(elementary_eval(2, v123) == IntPoly(11));
  std::vector<IntPoly> v12{IntPoly(1), IntPoly(2)};
  CHECK(elementary_eval(3, v12).is_zero());
}

TEST_CASE("h and e agree with monomial expansion (up to 5 variables, degree 5)") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    for (std::size_t nv = 0; nv <= 5; ++nv) {
      std::vector<IntPoly> vals;
      for (std::size_t i = 0; i < nv; ++i) vals.push_back(poly({coef(rng), coef(rng), coef(rng)}));
      for (int d = 0; d <= 5; ++d) {
        CHECK(homogeneous_eval(d, vals) == h_bruteforce(d, vals));
        CHECK(elementary_eval(d, vals) == e_bruteforce(d, vals));
      }
      // sum_i (-1)^i e_i h_{d-i} = 0 for d >= 1
      for (int d = 1; d <= static_cast<int>(nv); ++d) {
        IntPoly acc;
        for (int i = 0; i <= d; ++i) {
          IntPoly term = elementary_eval(i, vals) * homogeneous_eval(d - i, vals);
          if (i % 2) acc -= term; else acc += term;
        }
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("reverse and substitute") {
  CHECK(reverse_coefficients(poly({1, 2, 3})) == poly({3, 2, 1}));
  CHECK(reverse_coefficients(IntPoly()).is_zero());
  CHECK(reverse_coefficients(poly({0, 0, 1})) == IntPoly(1));
  CHECK(substitute_power(poly({1, 1}), 3) == poly({1, 0, 0, 1}));
  CHECK(substitute_power(q_bracket(2), 2) == poly({1, 0, 1}));
  CHECK(substitute_power(IntPoly(), 5).is_zero());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly p = poly({coef(rng) == 0 ? 1 : coef(rng), coef(rng), coef(rng), 5});
    if (p.coeff(0) == 0) continue;
    CHECK(reverse_coefficients(reverse_coefficients(p)) == p);
  }
}

TEST_CASE("BivarPoly arithmetic") {
  BivarPoly t = BivarPoly::t();
  BivarPoly a = t - BivarPoly(q_bracket(2));
  BivarPoly sq = a * a;
  CHECK(sq.t_coeff(2) == IntPoly(1));
  CHECK(sq.t_coeff(1) == -(q_bracket(2) * IntPoly(2)));
  CHECK(sq.t_coeff(0) == q_bracket(2) * q_bracket(2));
  CHECK((a - a).is_zero());
}

TEST_CASE("series_map examples") {
  RationalSeries x = RationalSeries::linear(3, 0, 1);
  auto e = series_map(SeriesFn::Exp, x);
  CHECK(e[0] == 1);
  CHECK(e[1] == 1);
  CHECK(e[2] == Rational(1, 2));
  CHECK(e[3] == Rational(1, 6));

  auto l = series_map(SeriesFn::Log, RationalSeries::linear(3, 1, 1));
  CHECK(l[0] == 0);
  CHECK(l[1] == 1);
  CHECK(l[2] == Rational(-1, 2));
  CHECK(l[3] == Rational(1, 3));

  auto p = series_map(SeriesFn::Pow, RationalSeries::linear(2, 1, 2), Rational(1, 2));
  CHECK(p[0] == 1);
  CHECK(p[1] == 1);
  CHECK(p[2] == Rational(-1, 2));

  CHECK_THROWS_AS(series_map(SeriesFn::Exp, RationalSeries::linear(3, 1, 1)), std::domain_error);
  CHECK_THROWS_AS(series_map(SeriesFn::Log, x), std::domain_error);
  CHECK_THROWS_WITH_AS(series_map(SeriesFn::Pow, RationalSeries::linear(3, 2, 1), Rational(1, 3)),
                       "pow requires constant term 1, got 2", std::domain_error);
}

TEST_CASE("log(exp(s)) == s for constant-term-0 series, orders up to 12") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (std::size_t order = 0; order <= 12; ++order) {
    RationalSeries s(order);
    for (std::size_t i = 1; i <= order; ++i) s[i] = Rational(num(rng), den(rng));
    for (std::size_t i = 0; i <= order; ++i) s[i].canonicalize();
    CHECK(series_map(SeriesFn::Log, series_map(SeriesFn::Exp, s)) == s);
  }
}

TEST_CASE("pow agrees with repeated multiplication for integer exponents") {
  RationalSeries s(8, {Rational(1), Rational(3), Rational(-2, 5), Rational(7)});
  for (unsigned k = 0; k <= 4; ++k) CHECK(series_map(SeriesFn::Pow, s, Rational(k)) == series_pow(s, k));
  // (s^(1/2))^2 == s
  auto root = series_map(SeriesFn::Pow, s, Rational(1, 2));
  CHECK(root * root == s);
}
