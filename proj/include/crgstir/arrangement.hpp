#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crgstir/lattice.hpp"
#include "crgstir/qpoly.hpp"

namespace crgstir {

/// Phi_m as an integer polynomial (variable printed as q).
IntPoly cyclotomic_polynomial(int m);

/// Element of Q(zeta_m) held as a residue modulo Phi_m.
class CycloNumber {
 public:
  CycloNumber() = default;
  CycloNumber(int m, const Rational& value);
  /// zeta_m^e.
  static CycloNumber zeta_power(int m, long e);

  int m() const { return m_; }
  const std::vector<Rational>& residue() const { return c_; }
  bool is_zero() const;

  CycloNumber& operator+=(const CycloNumber& rhs);
  CycloNumber& operator-=(const CycloNumber& rhs);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  CycloNumber operator-() const;
  CycloNumber inverse() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
  friend bool operator<(const CycloNumber& a, const CycloNumber& b);

  /// Polynomial in z = zeta_m, e.g. "1/2-3z".
  std::string to_string() const;

 private:
  int m_ = 1;
  std::vector<Rational> c_{Rational(0)};
};

/// sum_i coeffs[i] X_{i+1}.
struct LinearForm {
  std::vector<CycloNumber> coeffs;
  std::string to_string() const;
};

using CycloVector = std::vector<CycloNumber>;

/// Subspace of C^n held as the reduced row-echelon basis of the linear
/// forms vanishing on it.
class Subspace {
 public:
  Subspace(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int codim() const { return static_cast<int>(rows_.size()); }
  const std::vector<CycloVector>& rows() const { return rows_; }

  Subspace intersect(const LinearForm& form) const;
  Subspace intersect(const Subspace& other) const;
  /// Reverse inclusion: true iff other is contained in *this.
  bool below(const Subspace& other) const;

  /// Basis of the subspace itself (null space of the rows).
  std::vector<CycloVector> basis() const;

  std::vector<std::vector<std::string>> row_strings() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  void add_row(CycloVector row);

  int m_ = 1;
  int n_ = 0;
  std::vector<CycloVector> rows_;
};

/// X_i (p < m only) and zeta^c X_i - X_j for i < j, 0 <= c < m.
std::vector<LinearForm> reflection_hyperplanes(int m, int p, int n);

struct IntersectionLattice {
  int m = 1;
  int n = 0;
  std::vector<Subspace> elements;  // by codim, then canonical order; [0] is C^n
  std::vector<std::vector<bool>> leq;
  std::vector<BigInt> mobius;

  WhitneyNumbers whitney() const;
};

IntersectionLattice intersection_lattice(const std::vector<LinearForm>& hyperplanes, int m, int n,
                                         std::size_t cap = element_cap());

struct IsoCertificate {
  bool ok = false;
  std::string counterexample;
  std::vector<std::pair<std::string, Subspace>> map;  // partition -> image
};

/// The subspace cut out by the hyperplanes associated with sigma's blocks.
Subspace partition_subspace(const ColoredPartition& sigma, bool barred);

/// Checks that sigma -> partition_subspace(sigma) is a rank-preserving
/// order isomorphism from the combinatorial lattice onto geom.
IsoCertificate iso_check(const IntersectionLattice& geom, int m, int p, int n);

/// The pseudoreflection attached to a hyperplane fixes it pointwise and
/// moves its normal direction.
bool pseudoreflection_fixes(const LinearForm& form, int m, int p);

}  // namespace crgstir
