#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crgstir/qpoly.hpp"

namespace crgstir {

/// S[m,n,k] = h_{n-k}([1],[m+1],...,[km+1]). Barred subtracts the inv
/// generating function of the partitions whose zero block is
/// {0, i^0, ..., i^{m-1}} (lone_zero_base_q).
IntPoly q_stirling2(int m, int n, int k, bool barred = false);
IntPoly lone_zero_base_q(int m, int n, int k);
/// S[m,n,k] - [n]_{q^m} h_{n-k-1}([m],...,[km]). Correct at q=1 only.
IntPoly barred_q_stirling2_printed(int m, int n, int k);
BigInt stirling2(int m, int n, int k, bool barred = false);

/// s[m,n,k] = (-1)^{n-k} e_{n-k}([1],[m+1],...,[(n-1)m+1]).
IntPoly q_stirling1(int m, int n, int k);
BigInt stirling1(int m, int n, int k);

/// h_{n-k}([m-1],[2m-1],...,[(k+1)m-1]).
IntPoly super_q_stirling(int m, int n, int k);

/// Classical q-Stirling numbers h_{n-k}([1],...,[k]) (zero block excluded).
IntPoly classical_q_stirling2(int n, int k);

enum class OrderedVariant { Lattice, Super, CR };
std::string_view variant_name(OrderedVariant v);
/// Throws std::invalid_argument for unknown names.
OrderedVariant parse_variant(std::string_view name);

/// Lattice: [(k-1)m+2]!_m S; super: [km]!_m S~; CR: [km]!_m S.
IntPoly ordered_q_stirling(int m, int n, int k, OrderedVariant variant);

enum class Family { SecondPlain, SecondBarred, First, OrderedLattice, OrderedSuper, Super, OrderedCR };
std::string_view family_name(Family f);
Family parse_family(std::string_view name);
IntPoly family_entry(Family f, int m, int n, int k);

class StirlingTable {
 public:
  StirlingTable(Family family, int m, int max_n);

  Family family() const { return family_; }
  int m() const { return m_; }
  int max_n() const { return max_n_; }
  /// Zero outside 0 <= k <= n <= max_n.
  IntPoly at(int n, int k) const;

 private:
  Family family_;
  int m_;
  int max_n_;
  std::vector<std::vector<IntPoly>> rows_;
};

/// Memoized per (family, m); grows on demand.
const StirlingTable& cached_table(Family family, int m, int max_n);

/// Sum over k of (-q)^{n-k} (lattice, super) or (-q^{m-1})^{n-k} (CR)
/// times the ordered numbers.
IntPoly alternating_sum(OrderedVariant variant, int m, int n);
/// The value the alternating sum is expected to take: 1, 1, [m-1]^n.
IntPoly alternating_sum_target(OrderedVariant variant, int m, int n);

enum class Status { Verified, Failed, DiscrepancyExpected };
std::string_view status_name(Status s);

struct VerificationReport {
  std::string id;
  std::string params;
  Status status = Status::Verified;
  std::string witness;  // set whenever status != Verified
  std::string detail;   // optional statistics

  bool asserted_failure() const { return status == Status::Failed; }
};

VerificationReport verify_falling_factorial(int n, const std::vector<long>& x);

/// (a) with factors t-[(j-1)m+1], (a) with the printed last factor
/// t-[km-k+1] (reported, not asserted), and (b).
std::vector<VerificationReport> verify_t_identities(int m, int n);

/// (c) and (e) for a fixed k, to x^order.
std::vector<VerificationReport> egf_check(int m, int k, int order);
/// (d) and (f): corrected forms asserted, printed forms reported. The
/// t-dependence is checked at t = 0..order.
std::vector<VerificationReport> egf_bivariate_check(int m, int order);

/// s_m S_m = I on the N x N truncation.
VerificationReport matrix_inverse_check(int m, int N);

/// Binomial-sum form (m >= 2) and the degree/coexponent form (all m).
std::vector<VerificationReport> chan_rhoades_check(int m, int n, int k);

}  // namespace crgstir
