#include "crgstir/coinvariant.hpp"

#include <algorithm>
#include <stdexcept>

#include "crgstir/stirling.hpp"

namespace crgstir {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void check_subset(const std::vector<int>& T, int n) {
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T[i] < 1 || T[i] > n) throw std::invalid_argument("T must be a subset of 1.." + std::to_string(n));
    if (i > 0 && T[i] <= T[i - 1]) throw std::invalid_argument("T must be strictly increasing");
  }
}

struct Placement {
  enum Kind { NewTuple, Join, Zero } kind;
  int a = 0;  // slot, block (1-based) or start color
  int b = 0;  // rotation for NewTuple
};

// inversions created by the largest base given k tuples
int placement_inversions(const Placement& p, int m, int k) {
  switch (p.kind) {
    case Placement::NewTuple: return (m - 1 - p.b) + m * (k - p.a);
    case Placement::Join: return k * m - p.a;
    case Placement::Zero: return k * m + p.a - 1;
  }
  return -1;
}

void apply_placement(OrderedPartition& w, int s, const Placement& p) {
  const int m = w.m;
  switch (p.kind) {
    case Placement::NewTuple: {
      std::vector<Block> run;
      for (int q = 0; q < m; ++q) run.push_back(Block{{s, mod(q - p.b, m)}});
      auto at = w.blocks.begin() + static_cast<std::ptrdiff_t>(p.a) * m;
      w.blocks.insert(at, run.begin(), run.end());
      break;
    }
    case Placement::Join: {
      std::size_t b0 = static_cast<std::size_t>(p.a - 1);
      std::size_t first = b0 - b0 % static_cast<std::size_t>(m);
      for (int q = 0; q < m; ++q) {
        int color = mod(q - static_cast<int>(b0 - first), m);
        w.blocks[first + static_cast<std::size_t>(q)].push_back({s, color});
      }
      break;
    }
    case Placement::Zero:
      w.zero_bases.push_back(s);
      w.zero_starts.push_back(p.a);
      break;
  }
}

}  // namespace

bool leq(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string composition_to_string(const Composition& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

Composition staircase(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("staircase needs m >= 1, n >= 0");
  Composition c;
  for (int i = 1; i <= n; ++i) c.push_back(i * m - 1);
  return c;
}

IntPoly artin_hilbert(int m, int n) {
  IntPoly h(1);
  for (int part : staircase(m, n)) h *= q_bracket(part + 1);
  return h;
}

BetaPhi beta_phi(const std::vector<int>& T, int m, int n) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  check_subset(T, n);
  const int k = n - static_cast<int>(T.size());
  BetaPhi out{Composition(static_cast<std::size_t>(n)), Composition(static_cast<std::size_t>(k) + 1, 0)};
  int band = 1;  // i with u_{i-1} < column < u_i
  for (int col = 1; col <= n; ++col) {
    int& part = out.beta[static_cast<std::size_t>(col - 1)];
    if (contains(T, col)) {
      part = band * m - 2;
      if (part < 0) throw std::domain_error("column " + std::to_string(col) + " would have negative height");
      ++out.phi[static_cast<std::size_t>(band - 1)];
    } else {
      part = band * m - 1;
      ++band;
    }
  }
  return out;
}

void for_each_super_artin(int m, int n, const std::function<void(const SuperArtinElement&)>& visit) {
  if (m < 2) throw std::invalid_argument("super Artin set needs m >= 2");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    SuperArtinElement e;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) e.T.push_back(i);
    Composition beta = beta_phi(e.T, m, n).beta;
    e.alpha.assign(static_cast<std::size_t>(n), 0);
    while (true) {
      visit(e);
      int i = n - 1;
      while (i >= 0 && e.alpha[static_cast<std::size_t>(i)] == beta[static_cast<std::size_t>(i)]) {
        e.alpha[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++e.alpha[static_cast<std::size_t>(i)];
    }
  }
}

BivarPoly super_artin_hilbert(int m, int n) {
  if (m < 2) throw std::invalid_argument("super Artin set needs m >= 2");
  BivarPoly total;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> T;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) T.push_back(i);
    IntPoly w(1);
    for (int part : beta_phi(T, m, n).beta) w *= q_bracket(part + 1);
    total += BivarPoly::t_power(w, T.size());
  }
  return total;
}

BivarPoly super_stirling_generating(int m, int n) {
  BivarPoly total;
  for (int k = 0; k <= n; ++k)
    total += BivarPoly::t_power(ordered_q_stirling(m, n, k, OrderedVariant::Super), static_cast<std::size_t>(n - k));
  return total;
}

InversionData inversion_data(const OrderedPartition& w) {
  InversionData d;
  d.eta.assign(static_cast<std::size_t>(w.n), 0);
  for (const auto& pair : inversion_set(w).pairs) ++d.eta[static_cast<std::size_t>(pair.base - 1)];
  for (int t : w.zero_bases) d.T.push_back(t);
  for (const auto& block : w.blocks)
    for (auto e : block)
      if (e.color == 0 && e.base > min_base(block)) d.T.push_back(e.base);
  std::sort(d.T.begin(), d.T.end());
  return d;
}

std::vector<OrderedPartition> insert_bijection_trace(const std::vector<int>& T, const Composition& alpha, int m,
                                                     int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("need m >= 1, n >= 0");
  check_subset(T, n);
  if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("alpha must have n parts");
  OrderedPartition w;
  w.m = m;
  w.n = 0;
  w.flavor = Flavor::Super;
  std::vector<OrderedPartition> trace;
  for (int s = 1; s <= n; ++s) {
    const int k = w.k();
    const int want = alpha[static_cast<std::size_t>(s - 1)];
    std::vector<Placement> options;
    if (!contains(T, s)) {
      for (int slot = 0; slot <= k; ++slot)
        for (int p = 0; p < m; ++p) options.push_back({Placement::NewTuple, slot, p});
    } else {
      for (int j = 1; j <= k * m; ++j) options.push_back({Placement::Join, j, 0});
      for (int c = 1; c < m; ++c) options.push_back({Placement::Zero, c, 0});
    }
    std::vector<Placement> hits;
    for (const auto& p : options)
      if (placement_inversions(p, m, k) == want) hits.push_back(p);
    if (hits.empty())
      throw std::invalid_argument("no placement of base " + std::to_string(s) + " creates " + std::to_string(want) +
                                  " inversions");
    if (hits.size() > 1) throw std::logic_error("placement of base " + std::to_string(s) + " is not unique");
    apply_placement(w, s, hits.front());
    w.n = s;
    for (auto& b : w.blocks) std::sort(b.begin(), b.end());
    trace.push_back(w);
  }
  return trace;
}

OrderedPartition insert_bijection(const std::vector<int>& T, const Composition& alpha, int m, int n) {
  if (n == 0) {
    check_subset(T, n);
    if (!alpha.empty()) throw std::invalid_argument("alpha must have n parts");
    OrderedPartition w;
    w.m = m;
    w.flavor = Flavor::Super;
    return w;
  }
  return insert_bijection_trace(T, alpha, m, n).back();
}

SuperArtinElement inverse_bijection(const OrderedPartition& w) {
  const int m = w.m;
  SuperArtinElement out;
  out.alpha.assign(static_cast<std::size_t>(w.n), 0);
  OrderedPartition cur = w;
  for (int s = w.n; s >= 1; --s) {
    const int k = cur.k();
    int& a = out.alpha[static_cast<std::size_t>(s - 1)];
    auto z = std::find(cur.zero_bases.begin(), cur.zero_bases.end(), s);
    if (z != cur.zero_bases.end()) {
      auto idx = z - cur.zero_bases.begin();
      a = k * m + cur.zero_starts[static_cast<std::size_t>(idx)] - 1;
      out.T.push_back(s);
      cur.zero_bases.erase(z);
      cur.zero_starts.erase(cur.zero_starts.begin() + idx);
      continue;
    }
    std::size_t pos = 0;
    while (std::none_of(cur.blocks[pos].begin(), cur.blocks[pos].end(),
                        [&](ColoredElement e) { return e.base == s && e.color == 0; }))
      ++pos;
    std::size_t first = pos - pos % static_cast<std::size_t>(m);
    if (cur.blocks[pos].size() == 1) {
      int slot = static_cast<int>(first) / m;
      a = (m - 1 - static_cast<int>(pos - first)) + m * (k - 1 - slot);
      cur.blocks.erase(cur.blocks.begin() + static_cast<std::ptrdiff_t>(first),
                       cur.blocks.begin() + static_cast<std::ptrdiff_t>(first) + m);
    } else {
      a = k * m - static_cast<int>(pos + 1);
      out.T.push_back(s);
      for (int q = 0; q < m; ++q) {
        auto& b = cur.blocks[first + static_cast<std::size_t>(q)];
        b.erase(std::remove_if(b.begin(), b.end(), [&](ColoredElement e) { return e.base == s; }), b.end());
      }
    }
  }
  std::sort(out.T.begin(), out.T.end());
  return out;
}

}  // namespace crgstir
