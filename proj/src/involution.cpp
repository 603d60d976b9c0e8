#include "crgstir/involution.hpp"

#include <algorithm>
#include <set>

namespace crgstir {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::size_t tuple_begin(int j, int m) { return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(m); }

Block without_base(const Block& b, int M) {
  Block out;
  for (auto e : b)
    if (e.base != M) out.push_back(e);
  return out;
}

Block with_element(Block b, ColoredElement e) {
  b.insert(std::upper_bound(b.begin(), b.end(), e), e);
  return b;
}

// color of M in the first block of tuple j
int first_color(const OrderedPartition& w, int j, int M) {
  for (auto e : w.blocks[tuple_begin(j, w.m)])
    if (e.base == M) return e.color;
  throw InvolutionError("base " + std::to_string(M) + " not in tuple " + std::to_string(j));
}

// new singleton tuple M^{c}, M^{c+1}, ..., inserted before block index pos
void insert_singletons(OrderedPartition& w, std::size_t pos, int M, int c) {
  std::vector<Block> run;
  for (int i = 0; i < w.m; ++i) run.push_back(Block{{M, mod(c + i, w.m)}});
  w.blocks.insert(w.blocks.begin() + static_cast<std::ptrdiff_t>(pos), run.begin(), run.end());
}

int max_zero_base(const OrderedPartition& w) { return w.zero_bases.empty() ? 0 : w.zero_bases.back(); }

int slot_maxb(const OrderedPartition& w, int j) {
  if (j == 0) return max_zero_base(w);
  return max_base(w.blocks[tuple_begin(j, w.m) + static_cast<std::size_t>(w.m) - 1]);
}

bool singleton_tuple(const OrderedPartition& w, int j) {
  return w.blocks[tuple_begin(j, w.m) + static_cast<std::size_t>(w.m) - 1].size() == 1;
}

std::string at(const OrderedPartition& w, int M) { return w.to_string() + " at " + std::to_string(M); }

}  // namespace

std::string_view action_name(StepAction a) {
  switch (a) {
    case StepAction::Split: return "split";
    case StepAction::Merge: return "merge";
    case StepAction::Fixed: return "fixed";
  }
  return "?";
}

int pivot_slot(const OrderedPartition& w, int M) {
  if (M >= 1 && max_zero_base(w) == M) return 0;
  for (int j = 1; j <= w.k(); ++j)
    if (slot_maxb(w, j) == M) return j;
  return -1;
}

bool splittable(const OrderedPartition& w, int M) {
  int j = pivot_slot(w, M);
  if (j < 0) return false;
  return j == 0 || !singleton_tuple(w, j);
}

bool mergeable(const OrderedPartition& w, int M) {
  int j = pivot_slot(w, M);
  if (j <= 0 || !singleton_tuple(w, j)) return false;
  int c = first_color(w, j, M);
  const int m = w.m;
  if (w.flavor == Flavor::Super) {
    if (mod(c, m) != mod(1, m)) return M > slot_maxb(w, j - 1);
    return j < w.k() && M > slot_maxb(w, j + 1);
  }
  if (mod(c, m) == 0) return M > slot_maxb(w, j - 1);
  return j < w.k() && M > slot_maxb(w, j + 1);
}

OrderedPartition split(const OrderedPartition& w, int M) {
  int j = pivot_slot(w, M);
  if (j < 0) throw InvolutionError("not splittable: " + std::to_string(M) + " is not the maximum base of a tuple's last block in " + w.to_string());
  if (j > 0 && singleton_tuple(w, j)) throw InvolutionError("not splittable: last block of the pivot tuple is a singleton in " + at(w, M));
  const int m = w.m;
  OrderedPartition out = w;
  if (j == 0) {
    auto it = std::find(out.zero_bases.begin(), out.zero_bases.end(), M);
    auto idx = static_cast<std::size_t>(it - out.zero_bases.begin());
    out.zero_bases.erase(it);
    int c = 0;
    if (w.flavor == Flavor::Super) {
      c = out.zero_starts[idx] + 1;
      out.zero_starts.erase(out.zero_starts.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    insert_singletons(out, 0, M, c);
    return out;
  }
  int c = first_color(w, j, M);
  std::size_t b = tuple_begin(j, m);
  for (int i = 0; i < m; ++i) out.blocks[b + i] = without_base(w.blocks[b + i], M);
  std::size_t after = b + static_cast<std::size_t>(m);
  if (w.flavor == Flavor::Super) {
    if (mod(c, m) != 0) insert_singletons(out, after, M, c + 1);
    else insert_singletons(out, b, M, 1);
  } else {
    if (mod(c, m) == mod(1, m)) insert_singletons(out, after, M, 0);
    else insert_singletons(out, b, M, c - 1);
  }
  return out;
}

OrderedPartition merge(const OrderedPartition& w, int M) {
  int j = pivot_slot(w, M);
  if (j <= 0) throw InvolutionError("not mergeable: " + std::to_string(M) + " does not end a tuple in " + w.to_string());
  if (!singleton_tuple(w, j)) throw InvolutionError("not mergeable: pivot tuple has blocks of size >= 2 in " + at(w, M));
  if (!mergeable(w, M)) throw InvolutionError("not mergeable: neighbouring tuple has a larger maximum base in " + at(w, M));
  const int m = w.m;
  int c = first_color(w, j, M);
  bool left = w.flavor == Flavor::Super ? mod(c, m) != mod(1, m) : mod(c, m) == 0;
  OrderedPartition out = w;
  std::size_t b = tuple_begin(j, m);
  out.blocks.erase(out.blocks.begin() + static_cast<std::ptrdiff_t>(b),
                   out.blocks.begin() + static_cast<std::ptrdiff_t>(b + static_cast<std::size_t>(m)));
  if (left && j == 1) {
    auto it = std::upper_bound(out.zero_bases.begin(), out.zero_bases.end(), M);
    auto idx = it - out.zero_bases.begin();
    out.zero_bases.insert(it, M);
    if (w.flavor == Flavor::Super) out.zero_starts.insert(out.zero_starts.begin() + idx, mod(c - 1, m));
    return out;
  }
  // target tuple occupies [t, t+m) in out
  std::size_t t = left ? tuple_begin(j - 1, m) : b;
  int start = w.flavor == Flavor::Super ? (left ? c - 1 : 0) : (left ? 1 : c + 1);
  for (int i = 0; i < m; ++i) out.blocks[t + i] = with_element(out.blocks[t + i], {M, mod(start + i, m)});
  return out;
}

InvolutionStep iota(const OrderedPartition& w) {
  InvolutionStep step{w, StepAction::Fixed, 0, w};
  for (int M = w.n; M >= 1; --M) {
    if (splittable(w, M)) {
      step.action = StepAction::Split;
      step.pivot = M;
      step.output = split(w, M);
      return step;
    }
    if (mergeable(w, M)) {
      step.action = StepAction::Merge;
      step.pivot = M;
      step.output = merge(w, M);
      return step;
    }
  }
  return step;
}

int flavor_statistic(const OrderedPartition& w) {
  int scale = w.flavor == Flavor::Super ? 1 : w.m - 1;
  return scale * (w.n - w.k()) + inv(w);
}

namespace {

// CR fixed points: k = n, tuple i is i^c/.../i^{c+m-1} with c != 0
bool cr_fixed_shape(const OrderedPartition& w) {
  if (w.k() != w.n || !w.zero_bases.empty()) return false;
  for (int i = 1; i <= w.n; ++i) {
    std::size_t b = tuple_begin(i, w.m);
    for (int p = 0; p < w.m; ++p)
      if (w.blocks[b + p].size() != 1 || w.blocks[b + p][0].base != i) return false;
    if (w.blocks[b][0].color == 0) return false;
  }
  return true;
}

OrderedPartition super_fixed_point(int m, int n) {
  OrderedPartition w;
  w.m = m;
  w.n = n;
  w.flavor = Flavor::Super;
  for (int i = 1; i <= n; ++i) insert_singletons(w, w.blocks.size(), i, 1);
  return w;
}

}  // namespace

CancellationResult verify_cancellation(int m, int n, Flavor flavor) {
  CancellationResult res;
  res.report.id = "involution-" + std::string(flavor_name(flavor));
  res.report.params = "m=" + std::to_string(m) + " n=" + std::to_string(n);
  res.expected = flavor == Flavor::Super ? IntPoly(1) : pow(q_bracket(m - 1), static_cast<unsigned>(n));
  auto fail = [&](const std::string& why) {
    if (res.report.status == Status::Verified) {
      res.report.status = Status::Failed;
      res.report.witness = why;
    }
  };
  for (int k = 0; k <= n; ++k) {
    for_each_ordered(m, n, k, flavor, [&](const OrderedPartition& w) {
      ++res.total;
      IntPoly term = IntPoly::monomial((n - k) % 2 ? -1 : 1, static_cast<std::size_t>(flavor_statistic(w)));
      res.signed_sum += term;
      InvolutionStep s1 = iota(w);
      if (s1.action == StepAction::Fixed) {
        res.fixed_points.push_back(w);
        res.fixed_sum += term;
        bool shape = flavor == Flavor::Super ? w == super_fixed_point(m, n) : cr_fixed_shape(w);
        if (!shape) fail("unexpected fixed point " + w.to_string());
        return;
      }
      try {
        s1.output.validate();
      } catch (const std::exception& e) {
        fail("invalid image of " + w.to_string() + ": " + e.what());
        return;
      }
      InvolutionStep s2 = iota(s1.output);
      if (!(s2.output == w)) fail("iota(iota(w)) != w for " + w.to_string());
      else if (s2.pivot != s1.pivot) fail("pivot changes on " + w.to_string());
      if (std::abs(s1.output.k() - k) != 1) fail("tuple count does not change by one at " + w.to_string());
      if (flavor_statistic(s1.output) != flavor_statistic(w)) fail("statistic not preserved at " + w.to_string());
      if (s1.action == StepAction::Split) ++res.two_cycles;
    });
  }
  long expected_fixed = 1;
  if (flavor == Flavor::CR)
    for (int i = 0; i < n; ++i) expected_fixed *= m - 1;
  if (static_cast<long>(res.fixed_points.size()) != expected_fixed)
    fail(std::to_string(res.fixed_points.size()) + " fixed points, expected " + std::to_string(expected_fixed));
  if (!(res.fixed_sum == res.expected)) fail("fixed-point sum " + res.fixed_sum.to_string() + " != " + res.expected.to_string());
  if (!(res.signed_sum == res.fixed_sum)) fail("signed sum " + res.signed_sum.to_string() + " != fixed-point sum");
  return res;
}

}  // namespace crgstir
