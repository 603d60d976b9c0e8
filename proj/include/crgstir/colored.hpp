#pragma once

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace crgstir {

/// The vector zeta_m^color e_base, or the zero vector when base == 0.
struct ColoredElement {
  int base = 0;
  int color = 0;

  static ColoredElement zero() { return {}; }
  bool is_zero() const { return base == 0; }
  std::string to_string() const;

  friend auto operator<=>(const ColoredElement&, const ColoredElement&) = default;
};

/// Elements sorted by (base, color).
using Block = std::vector<ColoredElement>;

/// zeta^shift * block, colors reduced mod m. Zero stays zero.
Block rotate_block(const Block& block, int shift, int m);
int min_base(const Block& block);
int max_base(const Block& block);
std::string block_to_string(const Block& block);

enum class PartitionCondition {
  Elements,        // out-of-range base or color
  Coverage,        // blocks are not a set partition of [n^m] + {0}
  ZeroClosure,     // condition (i)
  TupleStructure,  // condition (ii), or S_{i+1} != zeta S_i for ordered flavors
  Barred,          // condition (iii)
  ZeroOrdering,    // malformed or forbidden zero-block run
};

std::string_view condition_name(PartitionCondition c);

class PartitionError : public std::invalid_argument {
 public:
  PartitionError(PartitionCondition condition, const std::string& what);
  PartitionCondition condition() const { return condition_; }

 private:
  PartitionCondition condition_;
};

/// A type (m,n) colored set partition (barred: type (m,n)-bar), held in
/// standard form. The tuple at index t has its blocks at positions
/// p = 0..m-1, and position p holds the block containing s^{(p+1) mod m}
/// where s is the minimum base of the tuple. Tuples are sorted by s.
class ColoredPartition {
 public:
  ColoredPartition() = default;

  /// Trusted constructor: the parts must already be in standard form.
  ColoredPartition(int m, int n, bool barred, std::vector<int> zero_bases,
                   std::vector<std::vector<Block>> tuples);

  int m() const { return m_; }
  int n() const { return n_; }
  bool barred() const { return barred_; }
  /// Number of m-tuples.
  int k() const { return static_cast<int>(tuples_.size()); }
  int rank() const { return n_ - k(); }

  const std::vector<int>& zero_bases() const { return zero_bases_; }
  const std::vector<std::vector<Block>>& tuples() const { return tuples_; }

  /// S_0 including the zero element.
  Block zero_block() const;
  /// S_1, ..., S_{km} in standard order.
  std::vector<Block> nonzero_blocks() const;

  std::string to_string() const;

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
  friend auto operator<=>(const ColoredPartition& a, const ColoredPartition& b) {
    return std::tie(a.m_, a.n_, a.barred_, a.zero_bases_, a.tuples_) <=>
           std::tie(b.m_, b.n_, b.barred_, b.zero_bases_, b.tuples_);
  }

 private:
  int m_ = 1;
  int n_ = 0;
  bool barred_ = false;
  std::vector<int> zero_bases_;
  std::vector<std::vector<Block>> tuples_;
};

/// Validates raw blocks (one of which contains the zero element) and puts
/// them into standard form. Throws PartitionError naming the violated
/// condition.
ColoredPartition standardize(const std::vector<Block>& raw_blocks, int m, int n, bool barred);

/// Colored partition whose zero-block bases each carry a total order
/// base^c base^{c+1} ... base^{c+m-1} with start color c in 1..m-1.
struct SuperPartition {
  ColoredPartition partition;
  /// Parallel to partition.zero_bases().
  std::vector<int> zero_starts;

  std::string to_string() const;
  friend bool operator==(const SuperPartition&, const SuperPartition&) = default;
};

enum class Flavor { Super, CR };

std::string_view flavor_name(Flavor f);

/// Explicit block sequence (S_0 / S_1 / ... / S_km) with S_{i+1} = zeta S_i
/// whenever m does not divide i. Zero-block runs are ordered for the super
/// flavor and unordered for CR.
struct OrderedPartition {
  int m = 1;
  int n = 0;
  Flavor flavor = Flavor::Super;
  std::vector<int> zero_bases;   // sorted
  std::vector<int> zero_starts;  // parallel to zero_bases; empty for CR
  std::vector<Block> blocks;     // S_1 ... S_km

  int k() const { return m == 0 ? 0 : static_cast<int>(blocks.size()) / m; }
  /// Throws PartitionError if any invariant fails.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  friend auto operator<=>(const OrderedPartition& a, const OrderedPartition& b) {
    return std::tie(a.m, a.n, a.flavor, a.zero_bases, a.zero_starts, a.blocks) <=>
           std::tie(b.m, b.n, b.flavor, b.zero_bases, b.zero_starts, b.blocks);
  }
};

// ---------------------------------------------------------------------------
// Inversions

/// Either (base^0, S_block) or, for ordered zero runs, (base^0, base^color).
struct InversionPair {
  int base = 0;
  int block = 0;   // 1-based block position; 0 for a zero-run pair
  int color = 0;   // only meaningful for zero-run pairs

  friend auto operator<=>(const InversionPair&, const InversionPair&) = default;
};

struct InversionSet {
  std::vector<InversionPair> pairs;
  int count() const { return static_cast<int>(pairs.size()); }
};

InversionSet inversion_set(const ColoredPartition& p);
InversionSet inversion_set(const SuperPartition& p);
InversionSet inversion_set(const OrderedPartition& p);

int inv(const ColoredPartition& p);
int inv(const SuperPartition& p);
int inv(const OrderedPartition& p);

// ---------------------------------------------------------------------------
// Enumeration

using PartitionVisitor = std::function<void(const ColoredPartition&)>;

/// Every type (m,n) (barred: (m,n)-bar) partition with k m-tuples, built by
/// inserting bases 1..n: new tuple first, then the zero block, then the
/// existing blocks in standard order.
void for_each_partition(int m, int n, int k, bool barred, const PartitionVisitor& visit);
std::vector<ColoredPartition> enumerate_partitions(int m, int n, int k, bool barred);

/// Ordinary set partitions of [n] into k blocks, as m = 1 colored
/// partitions with the zero block {0}.
std::vector<ColoredPartition> enumerate_classical(int n, int k);

void for_each_super(int m, int n, int k, const std::function<void(const SuperPartition&)>& visit);
std::vector<SuperPartition> enumerate_super(int m, int n, int k);

void for_each_ordered(int m, int n, int k, Flavor flavor,
                      const std::function<void(const OrderedPartition&)>& visit);
std::vector<OrderedPartition> enumerate_ordered(int m, int n, int k, Flavor flavor);

/// True iff every block of sigma (zero block included) lies inside a block of tau.
bool refines(const ColoredPartition& sigma, const ColoredPartition& tau);

// ---------------------------------------------------------------------------
// Colored permutations

/// g in G(m,p,n) acting by g(i^c) = base_map(i)^{c + color_shift(i)}.
struct ColoredPermutation {
  int m = 1;
  int p = 1;
  int n = 0;
  std::vector<int> base_map;     // base_map[i-1] is the image of base i
  std::vector<int> color_shift;  // color_shift[i-1] is added to colors of base i

  ColoredElement apply(ColoredElement x) const;
  /// Well-formed with sum of shifts divisible by p.
  bool in_group() const;
  std::string to_string() const;
};

enum class CycleKind { Fixed, Primitive, Zero };

struct Cycle {
  std::vector<ColoredElement> elements;
  CycleKind kind = CycleKind::Primitive;
  /// For zero cycles: the cycle is (delta, xi delta, ...) with xi = zeta^xi_power.
  int xi_power = 0;
  bool full = false;
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;

  /// All zero cycles full.
  bool full() const;
  int primitive_cycle_count() const;
  std::string to_string() const;
};

CycleDecomposition cycle_decomposition(const ColoredPermutation& g);
ColoredPartition underlying_partition(const ColoredPermutation& g, bool barred = false);

/// Visits every element of G(m,p,n) in a fixed order (base permutations in
/// lexicographic order, then shift vectors lexicographically).
void for_each_group_element(int m, int p, int n, const std::function<void(const ColoredPermutation&)>& visit);

struct FullFilter {
  /// When set, only permutations with this underlying partition.
  const ColoredPartition* partition = nullptr;
  /// When >= 0, only permutations with this many m-tuples of cycles.
  int tuples = -1;
};

/// The g in G(m,p,n), p in {1, m}, whose pi_g is full and matches the filter.
std::vector<ColoredPermutation> enumerate_full(int m, int p, int n, const FullFilter& filter);

/// Number of full g in G(m,p,n) per underlying partition (keyed with the
/// barred flag set when p == m and m >= 2).
std::map<ColoredPartition, long> full_permutation_counts(int m, int p, int n);

// ---------------------------------------------------------------------------
// Text format

ColoredPartition parse_partition(std::string_view text, int m, bool barred, int n = -1);
SuperPartition parse_super(std::string_view text, int m, int n = -1);
OrderedPartition parse_ordered(std::string_view text, int m, Flavor flavor, int n = -1);

}  // namespace crgstir
