#pragma once

#include <functional>
#include <vector>

#include "crgstir/colored.hpp"
#include "crgstir/qpoly.hpp"

namespace crgstir {

/// Weak composition, compared componentwise by leq.
using Composition = std::vector<int>;

bool leq(const Composition& a, const Composition& b);
std::string composition_to_string(const Composition& c);

/// (m-1, 2m-1, ..., nm-1)
Composition staircase(int m, int n);

/// Sum of q^{|alpha|} over alpha <= staircase, i.e. prod_i [im].
IntPoly artin_hilbert(int m, int n);

struct BetaPhi {
  Composition beta;
  Composition phi;
};

/// Column heights for the theta-set T (sorted subset of 1..n). Throws
/// std::domain_error when a column would get negative height (m = 1 with
/// an element of T below every element of the complement).
BetaPhi beta_phi(const std::vector<int>& T, int m, int n);

struct SuperArtinElement {
  std::vector<int> T;
  Composition alpha;

  friend bool operator==(const SuperArtinElement&, const SuperArtinElement&) = default;
  friend auto operator<=>(const SuperArtinElement&, const SuperArtinElement&) = default;
};

/// Every (T, alpha <= beta(T)), T in subset order by bitmask, alpha in
/// lexicographic order. Requires m >= 2.
void for_each_super_artin(int m, int n, const std::function<void(const SuperArtinElement&)>& visit);

/// sum over the super Artin set of q^{|alpha|} t^{#T}. Requires m >= 2.
BivarPoly super_artin_hilbert(int m, int n);
/// sum_k S~o[m,n,k] t^{n-k}
BivarPoly super_stirling_generating(int m, int n);

struct InversionData {
  Composition eta;     // per-base inversion counts
  std::vector<int> T;  // bases exceeding the minimum base of their block
};

InversionData inversion_data(const OrderedPartition& w);

/// Builds the ordered super partition for (T, alpha) one base at a time.
/// Throws std::invalid_argument naming the base where no placement yields
/// alpha_k new inversions.
OrderedPartition insert_bijection(const std::vector<int>& T, const Composition& alpha, int m, int n);
/// The partial partitions after each base (n entries).
std::vector<OrderedPartition> insert_bijection_trace(const std::vector<int>& T, const Composition& alpha, int m,
                                                     int n);

/// Recovers (T, alpha) by deleting bases n, n-1, ..., 1.
SuperArtinElement inverse_bijection(const OrderedPartition& w);

}  // namespace crgstir
