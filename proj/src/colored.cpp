#include "crgstir/colored.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace crgstir {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

// 0 for the zero element, otherwise (base-1)*m + color + 1.
int encode(ColoredElement e, int m) { return e.is_zero() ? 0 : (e.base - 1) * m + e.color + 1; }

std::string zero_block_plain(const std::vector<int>& bases, int m) {
  std::string out = "0";
  for (int b : bases)
    for (int c = 0; c < m; ++c) out += " " + ColoredElement{b, c}.to_string();
  return out;
}

std::string zero_block_runs(const std::vector<int>& bases, const std::vector<int>& starts, int m) {
  std::string out = "0";
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (int j = 0; j < m; ++j) out += " " + ColoredElement{bases[i], mod(starts[i] + j, m)}.to_string();
  return out;
}

std::string tuples_to_string(const std::vector<Block>& blocks, int m) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out += (i % static_cast<std::size_t>(m) == 0) ? " | " : "/";
    out += block_to_string(blocks[i]);
  }
  return out;
}

}  // namespace

std::string ColoredElement::to_string() const {
  if (is_zero()) return "0";
  return std::to_string(base) + "^" + std::to_string(color);
}

Block rotate_block(const Block& block, int shift, int m) {
  Block out;
  out.reserve(block.size());
  for (auto e : block) {
    if (!e.is_zero()) e.color = mod(e.color + shift, m);
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int min_base(const Block& block) {
  int best = -1;
  for (auto e : block) {
    if (e.is_zero()) return 0;
    if (best < 0 || e.base < best) best = e.base;
  }
  return best;
}

int max_base(const Block& block) {
  int best = 0;
  for (auto e : block) best = std::max(best, e.base);
  return best;
}

std::string block_to_string(const Block& block) {
  std::string out;
  for (const auto& e : block) {
    if (!out.empty()) out += ' ';
    out += e.to_string();
  }
  return out;
}

std::string_view condition_name(PartitionCondition c) {
  switch (c) {
    case PartitionCondition::Elements: return "elements";
    case PartitionCondition::Coverage: return "coverage";
    case PartitionCondition::ZeroClosure: return "zero-closure (i)";
    case PartitionCondition::TupleStructure: return "tuple-structure (ii)";
    case PartitionCondition::Barred: return "barred (iii)";
    case PartitionCondition::ZeroOrdering: return "zero-ordering";
  }
  return "unknown";
}

PartitionError::PartitionError(PartitionCondition condition, const std::string& what)
    : std::invalid_argument(std::string(condition_name(condition)) + ": " + what), condition_(condition) {}

std::string_view flavor_name(Flavor f) { return f == Flavor::Super ? "super" : "cr"; }

// ---------------------------------------------------------------------------
// ColoredPartition

ColoredPartition::ColoredPartition(int m, int n, bool barred, std::vector<int> zero_bases,
                                   std::vector<std::vector<Block>> tuples)
    : m_(m), n_(n), barred_(barred), zero_bases_(std::move(zero_bases)), tuples_(std::move(tuples)) {}

Block ColoredPartition::zero_block() const {
  Block out{ColoredElement::zero()};
  for (int b : zero_bases_)
    for (int c = 0; c < m_; ++c) out.push_back({b, c});
  return out;
}

std::vector<Block> ColoredPartition::nonzero_blocks() const {
  std::vector<Block> out;
  out.reserve(tuples_.size() * static_cast<std::size_t>(m_));
  for (const auto& t : tuples_) out.insert(out.end(), t.begin(), t.end());
  return out;
}

std::string ColoredPartition::to_string() const {
  return zero_block_plain(zero_bases_, m_) + tuples_to_string(nonzero_blocks(), m_);
}

ColoredPartition standardize(const std::vector<Block>& raw_blocks, int m, int n, bool barred) {
  if (m < 1 || n < 0) throw PartitionError(PartitionCondition::Elements, "need m >= 1 and n >= 0");
  const int universe = n * m + 1;
  std::vector<int> owner(static_cast<std::size_t>(universe), -1);
  for (std::size_t bi = 0; bi < raw_blocks.size(); ++bi) {
    if (raw_blocks[bi].empty()) throw PartitionError(PartitionCondition::Coverage, "empty block");
    for (auto e : raw_blocks[bi]) {
      bool ok = e.is_zero() ? e.color == 0 : (e.base >= 1 && e.base <= n && e.color >= 0 && e.color < m);
      if (!ok) throw PartitionError(PartitionCondition::Elements, "element " + e.to_string() + " out of range");
      int code = encode(e, m);
      if (owner[static_cast<std::size_t>(code)] >= 0)
        throw PartitionError(PartitionCondition::Coverage, "element " + e.to_string() + " appears twice");
      owner[static_cast<std::size_t>(code)] = static_cast<int>(bi);
    }
  }
  for (int code = 0; code < universe; ++code) {
    if (owner[static_cast<std::size_t>(code)] < 0) {
      ColoredElement e = code == 0 ? ColoredElement::zero() : ColoredElement{(code - 1) / m + 1, (code - 1) % m};
      throw PartitionError(PartitionCondition::Coverage, "element " + e.to_string() + " missing");
    }
  }

  const int zero_index = owner[0];
  std::vector<int> zero_bases;
  for (auto e : raw_blocks[static_cast<std::size_t>(zero_index)]) {
    if (e.is_zero() || e.color != 0) continue;
    zero_bases.push_back(e.base);
  }
  for (auto e : raw_blocks[static_cast<std::size_t>(zero_index)]) {
    if (e.is_zero()) continue;
    for (int c = 0; c < m; ++c) {
      if (owner[static_cast<std::size_t>(encode({e.base, c}, m))] != zero_index)
        throw PartitionError(PartitionCondition::ZeroClosure,
                             "zero block holds " + e.to_string() + " but not " + ColoredElement{e.base, c}.to_string());
    }
  }
  std::sort(zero_bases.begin(), zero_bases.end());

  std::map<Block, int> index;
  std::vector<Block> sorted(raw_blocks.size());
  for (std::size_t bi = 0; bi < raw_blocks.size(); ++bi) {
    if (static_cast<int>(bi) == zero_index) continue;
    sorted[bi] = raw_blocks[bi];
    std::sort(sorted[bi].begin(), sorted[bi].end());
    index[sorted[bi]] = static_cast<int>(bi);
  }

  std::vector<bool> assigned(raw_blocks.size(), false);
  std::vector<std::vector<Block>> tuples;
  for (std::size_t bi = 0; bi < raw_blocks.size(); ++bi) {
    if (static_cast<int>(bi) == zero_index || assigned[bi]) continue;
    const Block& block = sorted[bi];
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (block[i].base == block[i - 1].base)
        throw PartitionError(PartitionCondition::TupleStructure,
                             "nonzero block " + block_to_string(block) + " holds two colors of one base");
    }
    for (int j = 0; j < m; ++j) {
      auto it = index.find(rotate_block(block, j, m));
      if (it == index.end() || assigned[static_cast<std::size_t>(it->second)])
        throw PartitionError(PartitionCondition::TupleStructure,
                             "block " + block_to_string(block) + " has no complete m-tuple of multiples");
      assigned[static_cast<std::size_t>(it->second)] = true;
    }
    // Rotate so the s^0 block is known, then lay out positions p -> s^{(p+1) mod m}.
    const Block base_block = rotate_block(block, -block.front().color, m);
    std::vector<Block> tuple;
    tuple.reserve(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) tuple.push_back(rotate_block(base_block, p + 1, m));
    tuples.push_back(std::move(tuple));
  }
  std::sort(tuples.begin(), tuples.end(),
            [](const auto& a, const auto& b) { return a.front().front().base < b.front().front().base; });

  if (barred && zero_bases.size() == 1)
    throw PartitionError(PartitionCondition::Barred,
                         "zero block is {0} plus all colors of the single base " + std::to_string(zero_bases.front()));
  return ColoredPartition(m, n, barred, std::move(zero_bases), std::move(tuples));
}

// ---------------------------------------------------------------------------
// Super and ordered partitions

std::string SuperPartition::to_string() const {
  return zero_block_runs(partition.zero_bases(), zero_starts, partition.m()) +
         tuples_to_string(partition.nonzero_blocks(), partition.m());
}

std::string OrderedPartition::to_string() const {
  std::string zero = flavor == Flavor::Super ? zero_block_runs(zero_bases, zero_starts, m) : zero_block_plain(zero_bases, m);
  return "(" + zero + tuples_to_string(blocks, m) + ")";
}

void OrderedPartition::validate() const {
  if (m < 1 || n < 0) throw PartitionError(PartitionCondition::Elements, "need m >= 1 and n >= 0");
  if (blocks.size() % static_cast<std::size_t>(m) != 0)
    throw PartitionError(PartitionCondition::TupleStructure, "block count not a multiple of m");
  std::vector<Block> raw{Block{ColoredElement::zero()}};
  for (int b : zero_bases)
    for (int c = 0; c < m; ++c) raw.front().push_back({b, c});
  raw.insert(raw.end(), blocks.begin(), blocks.end());
  // Coverage and element ranges reuse the unordered validator.
  (void)standardize(raw, m, n, false);
  if (!std::is_sorted(zero_bases.begin(), zero_bases.end()))
    throw PartitionError(PartitionCondition::ZeroOrdering, "zero bases not sorted");
  if (flavor == Flavor::Super) {
    if (zero_starts.size() != zero_bases.size())
      throw PartitionError(PartitionCondition::ZeroOrdering, "every zero-block base needs a start color");
    for (std::size_t i = 0; i < zero_starts.size(); ++i) {
      if (zero_starts[i] < 1 || zero_starts[i] > m - 1)
        throw PartitionError(PartitionCondition::ZeroOrdering,
                             "base " + std::to_string(zero_bases[i]) + " has start color " +
                                 std::to_string(zero_starts[i]) + " outside 1..m-1");
    }
  } else if (!zero_starts.empty()) {
    throw PartitionError(PartitionCondition::ZeroOrdering, "CR zero block carries no ordering");
  }
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if ((i + 1) % static_cast<std::size_t>(m) == 0) continue;
    if (blocks[i + 1] != rotate_block(blocks[i], 1, m))
      throw PartitionError(PartitionCondition::TupleStructure,
                           "S_" + std::to_string(i + 2) + " = " + block_to_string(blocks[i + 1]) + " is not zeta S_" +
                               std::to_string(i + 1));
  }
}

// ---------------------------------------------------------------------------
// Inversions

namespace {

InversionSet inversions_of(int m, int n, const std::vector<int>& zero_bases, const std::vector<int>& zero_starts,
                           const std::vector<Block>& blocks) {
  // location[i] = block position (1-based) of i^0, or 0 for the zero block.
  std::vector<int> location(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> start(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (auto e : blocks[j])
      if (e.color == 0) location[static_cast<std::size_t>(e.base)] = static_cast<int>(j) + 1;
  for (std::size_t i = 0; i < zero_starts.size(); ++i) start[static_cast<std::size_t>(zero_bases[i])] = zero_starts[i];
  std::vector<int> mins(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) mins[j] = min_base(blocks[j]);

  InversionSet out;
  for (int i = 1; i <= n; ++i) {
    const int j = location[static_cast<std::size_t>(i)];
    if (j == 0 && start[static_cast<std::size_t>(i)] >= 0) {
      const int c = start[static_cast<std::size_t>(i)];
      for (int pos = mod(-c, m) + 1; pos < m; ++pos) out.pairs.push_back({i, 0, mod(c + pos, m)});
    }
    for (std::size_t l = static_cast<std::size_t>(j); l < blocks.size(); ++l)
      if (i >= mins[l]) out.pairs.push_back({i, static_cast<int>(l) + 1, 0});
  }
  return out;
}

}  // namespace

InversionSet inversion_set(const ColoredPartition& p) {
  return inversions_of(p.m(), p.n(), p.zero_bases(), {}, p.nonzero_blocks());
}

InversionSet inversion_set(const SuperPartition& p) {
  return inversions_of(p.partition.m(), p.partition.n(), p.partition.zero_bases(), p.zero_starts,
                       p.partition.nonzero_blocks());
}

InversionSet inversion_set(const OrderedPartition& p) {
  return inversions_of(p.m, p.n, p.zero_bases, p.zero_starts, p.blocks);
}

int inv(const ColoredPartition& p) { return inversion_set(p).count(); }
int inv(const SuperPartition& p) { return inversion_set(p).count(); }
int inv(const OrderedPartition& p) { return inversion_set(p).count(); }

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Builder {
  int m;
  int n;
  int k;
  bool barred;
  bool allow_zero;
  const PartitionVisitor& visit;
  std::vector<int> zero;
  std::vector<std::vector<Block>> tuples;

  void run(int b) {
    const int have = static_cast<int>(tuples.size());
    if (b > n) {
      if (have != k) return;
      if (barred && zero.size() == 1) return;
      visit(ColoredPartition(m, n, barred, zero, tuples));
      return;
    }
    const int remaining_after = n - b;
    // New m-tuple of singletons.
    if (have + 1 <= k) {
      std::vector<Block> t;
      t.reserve(static_cast<std::size_t>(m));
      for (int p = 0; p < m; ++p) t.push_back(Block{{b, mod(p + 1, m)}});
      tuples.push_back(std::move(t));
      run(b + 1);
      tuples.pop_back();
    }
    if (have + remaining_after < k) return;
    if (allow_zero) {
      zero.push_back(b);
      run(b + 1);
      zero.pop_back();
    }
    for (int t = 0; t < have; ++t) {
      for (int p = 0; p < m; ++p) {
        auto& tuple = tuples[static_cast<std::size_t>(t)];
        for (int c = 0; c < m; ++c) tuple[static_cast<std::size_t>(mod(p + c, m))].push_back({b, c});
        run(b + 1);
        for (auto& blk : tuple) blk.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_partition(int m, int n, int k, bool barred, const PartitionVisitor& visit) {
  if (m < 1 || n < 0 || k < 0 || k > n) return;
  Builder builder{m, n, k, barred, true, visit, {}, {}};
  builder.run(1);
}

std::vector<ColoredPartition> enumerate_partitions(int m, int n, int k, bool barred) {
  std::vector<ColoredPartition> out;
  for_each_partition(m, n, k, barred, [&](const ColoredPartition& p) { out.push_back(p); });
  return out;
}

std::vector<ColoredPartition> enumerate_classical(int n, int k) {
  std::vector<ColoredPartition> out;
  if (n < 0 || k < 0 || k > n) return out;
  PartitionVisitor visit = [&](const ColoredPartition& p) { out.push_back(p); };
  Builder builder{1, n, k, false, false, visit, {}, {}};
  builder.run(1);
  return out;
}

void for_each_super(int m, int n, int k, const std::function<void(const SuperPartition&)>& visit) {
  for_each_partition(m, n, k, false, [&](const ColoredPartition& p) {
    const std::size_t z = p.zero_bases().size();
    if (z > 0 && m < 2) return;
    std::vector<int> starts(z, 1);
    while (true) {
      visit(SuperPartition{p, starts});
      std::size_t i = 0;
      while (i < z && starts[i] == m - 1) starts[i++] = 1;
      if (i == z) break;
      ++starts[i];
    }
  });
}

std::vector<SuperPartition> enumerate_super(int m, int n, int k) {
  std::vector<SuperPartition> out;
  for_each_super(m, n, k, [&](const SuperPartition& p) { out.push_back(p); });
  return out;
}

namespace {

void emit_orderings(const ColoredPartition& p, Flavor flavor, const std::vector<int>& starts,
                    const std::function<void(const OrderedPartition&)>& visit) {
  const int m = p.m();
  const std::size_t k = p.tuples().size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  OrderedPartition w{m, p.n(), flavor, p.zero_bases(), starts, {}};
  do {
    std::vector<int> rot(k, 0);
    while (true) {
      w.blocks.clear();
      for (std::size_t t = 0; t < k; ++t) {
        const auto& tuple = p.tuples()[order[t]];
        for (int q = 0; q < m; ++q) w.blocks.push_back(tuple[static_cast<std::size_t>(mod(rot[t] + q, m))]);
      }
      visit(w);
      std::size_t i = 0;
      while (i < k && rot[i] == m - 1) rot[i++] = 0;
      if (i == k) break;
      ++rot[i];
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

void for_each_ordered(int m, int n, int k, Flavor flavor, const std::function<void(const OrderedPartition&)>& visit) {
  if (flavor == Flavor::Super) {
    for_each_super(m, n, k, [&](const SuperPartition& s) { emit_orderings(s.partition, flavor, s.zero_starts, visit); });
  } else {
    for_each_partition(m, n, k, false, [&](const ColoredPartition& p) { emit_orderings(p, flavor, {}, visit); });
  }
}

std::vector<OrderedPartition> enumerate_ordered(int m, int n, int k, Flavor flavor) {
  std::vector<OrderedPartition> out;
  for_each_ordered(m, n, k, flavor, [&](const OrderedPartition& w) { out.push_back(w); });
  return out;
}

bool refines(const ColoredPartition& sigma, const ColoredPartition& tau) {
  const int m = tau.m();
  std::vector<int> block_of(static_cast<std::size_t>(tau.n() * m + 1), 0);
  auto blocks = tau.nonzero_blocks();
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (auto e : blocks[j]) block_of[static_cast<std::size_t>(encode(e, m))] = static_cast<int>(j) + 1;
  auto same_block = [&](const Block& b) {
    const int first = block_of[static_cast<std::size_t>(encode(b.front(), m))];
    return std::all_of(b.begin(), b.end(),
                       [&](ColoredElement e) { return block_of[static_cast<std::size_t>(encode(e, m))] == first; });
  };
  if (!same_block(sigma.zero_block())) return false;
  for (const auto& b : sigma.nonzero_blocks())
    if (!same_block(b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Colored permutations

ColoredElement ColoredPermutation::apply(ColoredElement x) const {
  if (x.is_zero()) return x;
  const auto i = static_cast<std::size_t>(x.base - 1);
  return {base_map[i], mod(x.color + color_shift[i], m)};
}

bool ColoredPermutation::in_group() const {
  if (m < 1 || p < 1 || m % p != 0) return false;
  if (base_map.size() != static_cast<std::size_t>(n) || color_shift.size() != static_cast<std::size_t>(n)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int b : base_map) {
    if (b < 1 || b > n || seen[static_cast<std::size_t>(b)]) return false;
    seen[static_cast<std::size_t>(b)] = true;
  }
  int total = 0;
  for (int s : color_shift) {
    if (s < 0 || s >= m) return false;
    total += s;
  }
  return total % p == 0;
}

std::string ColoredPermutation::to_string() const {
  std::ostringstream out;
  out << "G(" << m << "," << p << "," << n << ")[";
  for (int i = 0; i < n; ++i) {
    if (i) out << ' ';
    out << (i + 1) << "->" << base_map[static_cast<std::size_t>(i)] << "^+" << color_shift[static_cast<std::size_t>(i)];
  }
  out << "]";
  return out.str();
}

bool CycleDecomposition::full() const {
  return std::all_of(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.kind != CycleKind::Zero || c.full; });
}

int CycleDecomposition::primitive_cycle_count() const {
  return static_cast<int>(
      std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.kind == CycleKind::Primitive; }));
}

std::string CycleDecomposition::to_string() const {
  std::string out;
  for (const auto& c : cycles) {
    out += "(";
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      if (i) out += ",";
      out += c.elements[i].to_string();
    }
    out += ")";
  }
  return out;
}

CycleDecomposition cycle_decomposition(const ColoredPermutation& g) {
  const int m = g.m;
  CycleDecomposition out;
  out.cycles.push_back(Cycle{{ColoredElement::zero()}, CycleKind::Fixed, 0, true});
  std::vector<bool> seen(static_cast<std::size_t>(g.n * m + 1), false);
  for (int b = 1; b <= g.n; ++b) {
    for (int c = 0; c < m; ++c) {
      ColoredElement x{b, c};
      if (seen[static_cast<std::size_t>(encode(x, m))]) continue;
      Cycle cyc;
      for (ColoredElement y = x; !seen[static_cast<std::size_t>(encode(y, m))]; y = g.apply(y)) {
        seen[static_cast<std::size_t>(encode(y, m))] = true;
        cyc.elements.push_back(y);
      }
      cyc.kind = CycleKind::Primitive;
      for (std::size_t i = 1; i < cyc.elements.size(); ++i) {
        if (cyc.elements[i].base == x.base) {
          cyc.kind = CycleKind::Zero;
          cyc.xi_power = mod(cyc.elements[i].color - x.color, m);
          cyc.full = cyc.xi_power == mod(1, m);
          break;
        }
      }
      out.cycles.push_back(std::move(cyc));
    }
  }
  return out;
}

ColoredPartition underlying_partition(const ColoredPermutation& g, bool barred) {
  auto dec = cycle_decomposition(g);
  std::vector<Block> raw{Block{ColoredElement::zero()}};
  for (const auto& c : dec.cycles) {
    if (c.kind == CycleKind::Fixed) continue;
    if (c.kind == CycleKind::Zero) {
      raw.front().insert(raw.front().end(), c.elements.begin(), c.elements.end());
    } else {
      raw.push_back(c.elements);
    }
  }
  return standardize(raw, g.m, g.n, barred);
}

void for_each_group_element(int m, int p, int n, const std::function<void(const ColoredPermutation&)>& visit) {
  if (m < 1 || p < 1 || m % p != 0 || n < 0) throw std::invalid_argument("G(m,p,n) needs p | m and n >= 0");
  ColoredPermutation g{m, p, n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::iota(g.base_map.begin(), g.base_map.end(), 1);
  do {
    std::fill(g.color_shift.begin(), g.color_shift.end(), 0);
    while (true) {
      int total = std::accumulate(g.color_shift.begin(), g.color_shift.end(), 0);
      if (total % p == 0) visit(g);
      std::size_t i = 0;
      while (i < g.color_shift.size() && g.color_shift[i] == m - 1) g.color_shift[i++] = 0;
      if (i == g.color_shift.size()) break;
      ++g.color_shift[i];
    }
  } while (std::next_permutation(g.base_map.begin(), g.base_map.end()));
}

std::vector<ColoredPermutation> enumerate_full(int m, int p, int n, const FullFilter& filter) {
  if (p != 1 && p != m) throw std::invalid_argument("enumerate_full supports p = 1 or p = m");
  std::vector<ColoredPermutation> out;
  for_each_group_element(m, p, n, [&](const ColoredPermutation& g) {
    auto dec = cycle_decomposition(g);
    if (!dec.full()) return;
    if (filter.tuples >= 0 && dec.primitive_cycle_count() != filter.tuples * m) return;
    if (filter.partition != nullptr) {
      auto sigma = underlying_partition(g, false);
      if (sigma.zero_bases() != filter.partition->zero_bases() || sigma.tuples() != filter.partition->tuples()) return;
    }
    out.push_back(g);
  });
  return out;
}

std::map<ColoredPartition, long> full_permutation_counts(int m, int p, int n) {
  const bool barred = p == m && m >= 2;
  std::map<ColoredPartition, long> out;
  for_each_group_element(m, p, n, [&](const ColoredPermutation& g) {
    if (!cycle_decomposition(g).full()) return;
    ++out[underlying_partition(g, barred)];
  });
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct RawText {
  std::vector<ColoredElement> zero;  // tokens after the leading 0, in order
  std::vector<Block> blocks;         // S_1, S_2, ... as written
  int max_base = 0;
};

ColoredElement parse_element(std::string_view tok) {
  if (tok == "0") return ColoredElement::zero();
  auto caret = tok.find('^');
  if (caret == std::string_view::npos || caret == 0 || caret + 1 == tok.size())
    throw PartitionError(PartitionCondition::Elements, "cannot parse element '" + std::string(tok) + "'");
  try {
    return {std::stoi(std::string(tok.substr(0, caret))), std::stoi(std::string(tok.substr(caret + 1)))};
  } catch (const std::logic_error&) {
    throw PartitionError(PartitionCondition::Elements, "cannot parse element '" + std::string(tok) + "'");
  }
}

std::vector<ColoredElement> parse_tokens(std::string_view s) {
  std::vector<ColoredElement> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(parse_element(tok));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

RawText parse_raw(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw PartitionError(PartitionCondition::Elements, "unbalanced parenthesis");
    text = trim(text.substr(1, text.size() - 2));
  }
  RawText raw;
  std::vector<std::string_view> segments;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    segments.push_back(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  auto zero = parse_tokens(segments.front());
  if (zero.empty() || !zero.front().is_zero())
    throw PartitionError(PartitionCondition::Coverage, "zero block must start with 0");
  raw.zero.assign(zero.begin() + 1, zero.end());
  for (std::size_t i = 1; i < segments.size(); ++i) {
    std::string_view seg = segments[i];
    std::size_t pos = 0;
    while (true) {
      auto slash = seg.find('/', pos);
      Block b = parse_tokens(seg.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos));
      if (b.empty()) throw PartitionError(PartitionCondition::Coverage, "empty block in '" + std::string(text) + "'");
      raw.blocks.push_back(std::move(b));
      if (slash == std::string_view::npos) break;
      pos = slash + 1;
    }
  }
  for (auto e : raw.zero) raw.max_base = std::max(raw.max_base, e.base);
  for (const auto& b : raw.blocks) raw.max_base = std::max(raw.max_base, max_base(b));
  return raw;
}

// Reads base runs b^c b^{c+1} ... from the zero-block token sequence.
void parse_runs(const std::vector<ColoredElement>& tokens, int m, std::vector<int>& bases, std::vector<int>& starts) {
  std::map<int, int> start_of;
  for (std::size_t i = 0; i < tokens.size(); i += static_cast<std::size_t>(m)) {
    const ColoredElement head = tokens[i];
    if (i + static_cast<std::size_t>(m) > tokens.size())
      throw PartitionError(PartitionCondition::ZeroOrdering, "incomplete run for base " + std::to_string(head.base));
    for (int j = 1; j < m; ++j) {
      ColoredElement e = tokens[i + static_cast<std::size_t>(j)];
      if (e.base != head.base || e.color != mod(head.color + j, m))
        throw PartitionError(PartitionCondition::ZeroOrdering,
                             "run for base " + std::to_string(head.base) + " is not consecutive colors");
    }
    if (mod(head.color, m) == 0)
      throw PartitionError(PartitionCondition::ZeroOrdering,
                           "run for base " + std::to_string(head.base) + " may not start at color 0");
    if (!start_of.emplace(head.base, head.color).second)
      throw PartitionError(PartitionCondition::ZeroOrdering, "base " + std::to_string(head.base) + " has two runs");
  }
  bases.clear();
  starts.clear();
  for (auto [b, c] : start_of) {
    bases.push_back(b);
    starts.push_back(c);
  }
}

}  // namespace

ColoredPartition parse_partition(std::string_view text, int m, bool barred, int n) {
  RawText raw = parse_raw(text);
  std::vector<Block> blocks{Block{ColoredElement::zero()}};
  blocks.front().insert(blocks.front().end(), raw.zero.begin(), raw.zero.end());
  blocks.insert(blocks.end(), raw.blocks.begin(), raw.blocks.end());
  return standardize(blocks, m, n < 0 ? raw.max_base : n, barred);
}

SuperPartition parse_super(std::string_view text, int m, int n) {
  RawText raw = parse_raw(text);
  SuperPartition out{parse_partition(text, m, false, n), {}};
  std::vector<int> bases;
  parse_runs(raw.zero, m, bases, out.zero_starts);
  if (bases != out.partition.zero_bases())
    throw PartitionError(PartitionCondition::ZeroOrdering, "zero runs do not match the zero block");
  return out;
}

OrderedPartition parse_ordered(std::string_view text, int m, Flavor flavor, int n) {
  RawText raw = parse_raw(text);
  OrderedPartition out;
  out.m = m;
  out.n = n < 0 ? raw.max_base : n;
  out.flavor = flavor;
  if (flavor == Flavor::Super) {
    parse_runs(raw.zero, m, out.zero_bases, out.zero_starts);
  } else {
    for (auto e : raw.zero)
      if (std::find(out.zero_bases.begin(), out.zero_bases.end(), e.base) == out.zero_bases.end())
        out.zero_bases.push_back(e.base);
    std::sort(out.zero_bases.begin(), out.zero_bases.end());
    if (raw.zero.size() != out.zero_bases.size() * static_cast<std::size_t>(m))
      throw PartitionError(PartitionCondition::ZeroClosure, "zero block is not closed under coloring");
  }
  for (auto& b : raw.blocks) std::sort(b.begin(), b.end());
  out.blocks = std::move(raw.blocks);
  out.validate();
  return out;
}

}  // namespace crgstir
