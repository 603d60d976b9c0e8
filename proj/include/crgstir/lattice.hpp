#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crgstir/colored.hpp"
#include "crgstir/qpoly.hpp"

namespace crgstir {

/// Size guard for lattice and arrangement construction. Default 100000,
/// overridden by the CRGSTIR_MAX_ELEMENTS environment variable.
std::size_t element_cap();

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap, const std::string& what);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Pi_{m,n} (plain) or Pi-bar_{m,n} (barred) ordered by refinement. For
/// m == 1 this is the classical partition lattice Pi_n regardless of the
/// barred flag.
class PartitionLattice {
 public:
  static PartitionLattice build(int m, int n, bool barred, std::size_t cap = element_cap());

  int m() const { return m_; }
  int n() const { return n_; }
  bool barred() const { return barred_; }
  bool classical() const { return m_ == 1; }
  std::size_t size() const { return elements_.size(); }

  /// Sorted by rank, then enumeration order. Index 0 is the bottom.
  const std::vector<ColoredPartition>& elements() const { return elements_; }
  const ColoredPartition& element(std::size_t i) const { return elements_[i]; }
  int rank(std::size_t i) const { return elements_[i].rank(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  std::optional<std::size_t> index_of(const ColoredPartition& p) const;

  /// Covering pairs (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  const BigInt& mobius(std::size_t i) const;

 private:
  int m_ = 1;
  int n_ = 0;
  bool barred_ = false;
  std::vector<ColoredPartition> elements_;
  std::vector<std::vector<bool>> leq_;
  mutable std::vector<std::optional<BigInt>> mobius_;
};

BigInt mobius_recursive(const PartitionLattice& lattice, const ColoredPartition& sigma);

/// (-1)^{n-k} (b-m)!_m prod (b_j - 1)! for plain sigma; for barred sigma the
/// printed variant (-1)^{n-k} (b-m-n) (b-2m)!_m prod (b_j - 1)!.
BigInt mobius_product(const ColoredPartition& sigma);

/// Barred variant with n replaced by the number z of zero-block bases:
/// (-1)^{n-k} (b-m-z) (b-2m)!_m prod (b_j - 1)!, and no zero-block factor
/// when z = 0.
BigInt mobius_product_barred_by_zero_bases(const ColoredPartition& sigma);

struct WhitneyNumbers {
  std::vector<BigInt> second;  // W, indexed by rank
  std::vector<BigInt> first;   // w, indexed by rank
};

WhitneyNumbers whitney_numbers(const PartitionLattice& lattice);

struct LatticeStirling {
  BigInt second_kind;
  BigInt first_kind;
};

/// (W(L, n-k), w(L, n-k)).
LatticeStirling stirling_from_lattice(const PartitionLattice& lattice, int k);

}  // namespace crgstir
