#include "crgstir/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace crgstir {

std::size_t element_cap() {
  if (const char* env = std::getenv("CRGSTIR_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

CapExceeded::CapExceeded(std::size_t cap, const std::string& what) : std::runtime_error(what), cap_(cap) {}

PartitionLattice PartitionLattice::build(int m, int n, bool barred, std::size_t cap) {
  if (m < 1 || n < 0) throw std::invalid_argument("lattice needs m >= 1 and n >= 0");
  PartitionLattice L;
  L.m_ = m;
  L.n_ = n;
  L.barred_ = m >= 2 && barred;
  auto too_big = [&] {
    return CapExceeded(cap, "lattice for m=" + std::to_string(m) + " n=" + std::to_string(n) + " exceeds " +
                                std::to_string(cap) + " elements");
  };
  // rank n-k ascending
  for (int k = n; k >= 0; --k) {
    if (m == 1) {
      for (auto& p : enumerate_classical(n, k)) {
        if (L.elements_.size() >= cap) throw too_big();
        L.elements_.push_back(std::move(p));
      }
    } else {
      for_each_partition(m, n, k, L.barred_, [&](const ColoredPartition& p) {
        if (L.elements_.size() >= cap) throw too_big();
        L.elements_.push_back(p);
      });
    }
  }
  const std::size_t size = L.elements_.size();
  L.leq_.assign(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (L.rank(i) <= L.rank(j)) L.leq_[i][j] = i == j || refines(L.elements_[i], L.elements_[j]);
  L.mobius_.assign(size, std::nullopt);
  return L;
}

std::optional<std::size_t> PartitionLattice::index_of(const ColoredPartition& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].zero_bases() == p.zero_bases() && elements_[i].tuples() == p.tuples()) return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> PartitionLattice::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (rank(j) == rank(i) + 1 && leq_[i][j]) out.emplace_back(i, j);
  return out;
}

const BigInt& PartitionLattice::mobius(std::size_t i) const {
  if (!mobius_[i]) {
    // elements below i have smaller index (sorted by rank)
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (leq_[j][i]) sum += mobius(j);
    mobius_[i] = i == 0 ? BigInt(1) : BigInt(-sum);
  }
  return *mobius_[i];
}

BigInt mobius_recursive(const PartitionLattice& lattice, const ColoredPartition& sigma) {
  auto i = lattice.index_of(sigma);
  if (!i) throw std::invalid_argument("partition " + sigma.to_string() + " is not in the lattice");
  return lattice.mobius(*i);
}

namespace {

BigInt factorial(long x) {
  BigInt r = 1;
  for (long i = 2; i <= x; ++i) r *= i;
  return r;
}

}  // namespace

BigInt mobius_product(const ColoredPartition& sigma) {
  const long m = sigma.m();
  const long n = sigma.n();
  const long b = 1 + static_cast<long>(sigma.zero_bases().size()) * m;
  BigInt r = (sigma.rank() % 2 == 0) ? 1 : -1;
  if (sigma.barred())
    r *= BigInt(b - m - n) * mstep_factorial(b - 2 * m, m);
  else
    r *= mstep_factorial(b - m, m);
  for (const auto& t : sigma.tuples()) r *= factorial(static_cast<long>(t.back().size()) - 1);
  return r;
}

BigInt mobius_product_barred_by_zero_bases(const ColoredPartition& sigma) {
  const long m = sigma.m();
  const long z = static_cast<long>(sigma.zero_bases().size());
  const long b = 1 + z * m;
  BigInt r = (sigma.rank() % 2 == 0) ? 1 : -1;
  if (z > 0) r *= BigInt(b - m - z) * mstep_factorial(b - 2 * m, m);
  for (const auto& t : sigma.tuples()) r *= factorial(static_cast<long>(t.back().size()) - 1);
  return r;
}

WhitneyNumbers whitney_numbers(const PartitionLattice& lattice) {
  WhitneyNumbers w;
  const auto ranks = static_cast<std::size_t>(lattice.n()) + 1;
  w.second.assign(ranks, 0);
  w.first.assign(ranks, 0);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto r = static_cast<std::size_t>(lattice.rank(i));
    w.second[r] += 1;
    w.first[r] += lattice.mobius(i);
  }
  return w;
}

LatticeStirling stirling_from_lattice(const PartitionLattice& lattice, int k) {
  if (k < 0 || k > lattice.n()) return {0, 0};
  auto w = whitney_numbers(lattice);
  const auto r = static_cast<std::size_t>(lattice.n() - k);
  return {w.second[r], w.first[r]};
}

}  // namespace crgstir
