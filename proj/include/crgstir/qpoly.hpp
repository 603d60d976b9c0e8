#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace crgstir {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Coefficient i multiplies q^i. The stored sequence never has trailing
/// zeros, so the zero polynomial is the empty sequence.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(long constant);  // NOLINT(google-explicit-constructor)

  static IntPoly monomial(const BigInt& c, std::size_t degree);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const;

  BigInt eval(const BigInt& q) const;
  BigInt at_one() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& rhs);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& b) { return a *= b; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form such as "2+q+q^2" or "-1-3q^4"; zero is "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

/// [k]_q = 1 + q + ... + q^{k-1}; zero for k <= 0.
IntPoly q_bracket(long k);

/// [l]!_m = [l][l-m][l-2m]...[r] with r in 1..m the positive residue of l.
/// Empty product (value 1) for l <= 0.
IntPoly q_mstep_factorial(long l, long m);
BigInt mstep_factorial(long l, long m);

/// Complete homogeneous symmetric polynomial h_d at the given values,
/// via h_k(j) = h_k(j-1) + x_j h_{k-1}(j).
IntPoly homogeneous_eval(long d, std::span<const IntPoly> vals);
/// Elementary symmetric polynomial e_d at the given values.
IntPoly elementary_eval(long d, std::span<const IntPoly> vals);

/// q^d f(1/q) with d = deg f.
IntPoly reverse_coefficients(const IntPoly& p);
/// f(q) -> f(q^m).
IntPoly substitute_power(const IntPoly& p, long m);

/// Polynomial in t whose coefficients are polynomials in q.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<IntPoly> t_coeffs);
  BivarPoly(const IntPoly& constant);  // NOLINT(google-explicit-constructor)

  /// The polynomial t.
  static BivarPoly t();
  static BivarPoly t_power(const IntPoly& c, std::size_t degree);

  const std::vector<IntPoly>& t_coeffs() const { return t_coeffs_; }
  bool is_zero() const { return t_coeffs_.empty(); }
  long t_degree() const { return static_cast<long>(t_coeffs_.size()) - 1; }
  IntPoly t_coeff(std::size_t j) const;

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<IntPoly> t_coeffs_;
};

/// Power series in x truncated after x^order, exact rational coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order);
  RationalSeries(std::size_t order, std::vector<Rational> coeffs);

  /// c0 + c1 x (truncated to the order).
  static RationalSeries linear(std::size_t order, const Rational& c0, const Rational& c1);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  RationalSeries& operator+=(const RationalSeries& rhs);
  RationalSeries& operator-=(const RationalSeries& rhs);
  RationalSeries& operator*=(const Rational& rhs);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(RationalSeries a, const Rational& b) { return a *= b; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

enum class SeriesFn { Exp, Log, Pow };

/// Truncated composition exp(s), log(s) or s^r. Exp needs a zero constant
/// term; Log and Pow need constant term 1. Throws std::domain_error.
RationalSeries series_map(SeriesFn fn, const RationalSeries& s, const Rational& r = Rational(0));

RationalSeries series_pow(const RationalSeries& s, unsigned k);

}  // namespace crgstir
