#include "crgstir/stirling.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace crgstir {

namespace {

void require_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1, got " + std::to_string(m));
}

// [a], [a+step], ..., count values
std::vector<IntPoly> bracket_run(long first, long step, long count) {
  std::vector<IntPoly> out;
  for (long j = 0; j < count; ++j) out.push_back(q_bracket(first + j * step));
  return out;
}

bool in_range(int n, int k) { return n >= 0 && k >= 0 && k <= n; }

std::string fmt_params(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string out;
  for (const auto& [key, val] : kv) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += std::to_string(val);
  }
  return out;
}

BivarPoly linear_factor(const IntPoly& root) { return BivarPoly::t() - BivarPoly(root); }

// First index where two t-polynomials differ, as "t^j: lhs ... rhs ...".
std::string bivar_witness(const BivarPoly& lhs, const BivarPoly& rhs) {
  long top = std::max(lhs.t_degree(), rhs.t_degree());
  for (long j = 0; j <= top; ++j) {
    IntPoly a = lhs.t_coeff(static_cast<std::size_t>(j));
    IntPoly b = rhs.t_coeff(static_cast<std::size_t>(j));
    if (!(a == b)) return "t^" + std::to_string(j) + ": lhs " + a.to_string() + " rhs " + b.to_string();
  }
  return {};
}

VerificationReport compare_bivar(std::string id, std::string params, const BivarPoly& lhs, const BivarPoly& rhs,
                                 Status on_mismatch) {
  VerificationReport r{std::move(id), std::move(params), Status::Verified, {}};
  if (!(lhs == rhs)) {
    r.status = on_mismatch;
    r.witness = bivar_witness(lhs, rhs);
  }
  return r;
}

BigInt ipow(long base, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

RationalSeries egf_of(const std::vector<BigInt>& values, std::size_t order) {
  RationalSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    s[n] = Rational(values[n], factorial(static_cast<long>(n)));
    s[n].canonicalize();
  }
  return s;
}

// (e^{mx}-1)/m
RationalSeries scaled_expm1(int m, std::size_t order) {
  RationalSeries e = series_map(SeriesFn::Exp, RationalSeries::linear(order, 0, m));
  e -= RationalSeries::linear(order, 1, 0);
  return e * Rational(1, m);
}

std::string series_witness(const RationalSeries& lhs, const RationalSeries& rhs, const std::string& prefix) {
  for (std::size_t n = 0; n <= lhs.order(); ++n)
    if (lhs[n] != rhs[n])
      return prefix + "n=" + std::to_string(n) + ": lhs " + lhs[n].get_str() + " rhs " + rhs[n].get_str();
  return {};
}

}  // namespace

IntPoly q_stirling2(int m, int n, int k, bool barred) {
  require_m(m);
  if (!in_range(n, k)) return {};
  IntPoly plain = homogeneous_eval(n - k, bracket_run(1, m, k + 1));
  if (!barred) return plain;
  return plain - lone_zero_base_q(m, n, k);
}

IntPoly lone_zero_base_q(int m, int n, int k) {
  require_m(m);
  if (!in_range(n, k) || n == k) return {};
  // Removing base n: it is either the zero-block base (then every nonzero
  // block is an inversion and the rest has zero block {0}), a new singleton
  // tuple, or joins one of the km nonzero blocks.
  std::vector<IntPoly> row{IntPoly()};
  for (int i = 1; i <= n; ++i) {
    std::vector<IntPoly> next(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j < i; ++j) {
      IntPoly v = IntPoly::monomial(1, static_cast<std::size_t>(j) * m) *
                  homogeneous_eval(i - 1 - j, bracket_run(m, m, j));
      if (j > 0) v += row[j - 1];
      if (j < i - 1) v += q_bracket(long(j) * m) * row[j];
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

IntPoly barred_q_stirling2_printed(int m, int n, int k) {
  require_m(m);
  if (!in_range(n, k)) return {};
  return q_stirling2(m, n, k) -
         substitute_power(q_bracket(n), m) * homogeneous_eval(n - k - 1, bracket_run(m, m, k));
}

BigInt stirling2(int m, int n, int k, bool barred) { return q_stirling2(m, n, k, barred).at_one(); }

IntPoly q_stirling1(int m, int n, int k) {
  require_m(m);
  if (!in_range(n, k)) return {};
  IntPoly e = elementary_eval(n - k, bracket_run(1, m, n));
  return (n - k) % 2 ? -e : e;
}

BigInt stirling1(int m, int n, int k) { return q_stirling1(m, n, k).at_one(); }

IntPoly super_q_stirling(int m, int n, int k) {
  require_m(m);
  if (!in_range(n, k)) return {};
  return homogeneous_eval(n - k, bracket_run(m - 1, m, k + 1));
}

IntPoly classical_q_stirling2(int n, int k) {
  if (!in_range(n, k)) return {};
  // row-by-row: S[n,k] = S[n-1,k-1] + [k] S[n-1,k]
  std::vector<IntPoly> row{IntPoly(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<IntPoly> next(static_cast<std::size_t>(i) + 1);
    for (int j = 1; j <= i; ++j) {
      next[j] = row[j - 1];
      if (j < i) next[j] += q_bracket(j) * row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

std::string_view variant_name(OrderedVariant v) {
  switch (v) {
    case OrderedVariant::Lattice: return "lattice";
    case OrderedVariant::Super: return "super";
    case OrderedVariant::CR: return "cr";
  }
  return "?";
}

OrderedVariant parse_variant(std::string_view name) {
  if (name == "lattice") return OrderedVariant::Lattice;
  if (name == "super") return OrderedVariant::Super;
  if (name == "cr") return OrderedVariant::CR;
  throw std::invalid_argument("unknown ordered variant: " + std::string(name));
}

IntPoly ordered_q_stirling(int m, int n, int k, OrderedVariant variant) {
  require_m(m);
  if (!in_range(n, k)) return {};
  switch (variant) {
    case OrderedVariant::Lattice: return q_mstep_factorial(long(k - 1) * m + 2, m) * q_stirling2(m, n, k);
    case OrderedVariant::Super: return q_mstep_factorial(long(k) * m, m) * super_q_stirling(m, n, k);
    case OrderedVariant::CR: return q_mstep_factorial(long(k) * m, m) * q_stirling2(m, n, k);
  }
  throw std::invalid_argument("unknown ordered variant");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::SecondPlain: return "second-plain";
    case Family::SecondBarred: return "second-barred";
    case Family::First: return "first";
    case Family::OrderedLattice: return "ordered-lattice";
    case Family::OrderedSuper: return "ordered-super";
    case Family::Super: return "super";
    case Family::OrderedCR: return "ordered-cr";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::SecondPlain, Family::SecondBarred, Family::First, Family::OrderedLattice,
                   Family::OrderedSuper, Family::Super, Family::OrderedCR})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

IntPoly family_entry(Family f, int m, int n, int k) {
  switch (f) {
    case Family::SecondPlain: return q_stirling2(m, n, k, false);
    case Family::SecondBarred: return q_stirling2(m, n, k, true);
    case Family::First: return q_stirling1(m, n, k);
    case Family::OrderedLattice: return ordered_q_stirling(m, n, k, OrderedVariant::Lattice);
    case Family::OrderedSuper: return ordered_q_stirling(m, n, k, OrderedVariant::Super);
    case Family::Super: return super_q_stirling(m, n, k);
    case Family::OrderedCR: return ordered_q_stirling(m, n, k, OrderedVariant::CR);
  }
  throw std::invalid_argument("unknown family");
}

StirlingTable::StirlingTable(Family family, int m, int max_n) : family_(family), m_(m), max_n_(max_n) {
  require_m(m);
  if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
  for (int n = 0; n <= max_n; ++n) {
    std::vector<IntPoly> row;
    for (int k = 0; k <= n; ++k) row.push_back(family_entry(family, m, n, k));
    rows_.push_back(std::move(row));
  }
}

IntPoly StirlingTable::at(int n, int k) const {
  if (!in_range(n, k) || n > max_n_) return {};
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const StirlingTable& cached_table(Family family, int m, int max_n) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::unique_ptr<StirlingTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{family, m}];
  if (!slot || slot->max_n() < max_n) slot = std::make_unique<StirlingTable>(family, m, max_n);
  return *slot;
}

IntPoly alternating_sum(OrderedVariant variant, int m, int n) {
  require_m(m);
  if (variant == OrderedVariant::CR && m < 2) throw std::invalid_argument("cr alternating sum needs m >= 2");
  long step = variant == OrderedVariant::CR ? m - 1 : 1;
  IntPoly total;
  for (int k = 0; k <= n; ++k) {
    IntPoly sign = IntPoly::monomial((n - k) % 2 ? -1 : 1, static_cast<std::size_t>(step * (n - k)));
    total += sign * ordered_q_stirling(m, n, k, variant);
  }
  return total;
}

IntPoly alternating_sum_target(OrderedVariant variant, int m, int n) {
  if (variant == OrderedVariant::CR) return pow(q_bracket(m - 1), static_cast<unsigned>(n));
  return IntPoly(1);
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::DiscrepancyExpected: return "paper-discrepancy";
  }
  return "?";
}

VerificationReport verify_falling_factorial(int n, const std::vector<long>& x) {
  std::string params = "n=" + std::to_string(n) + " x=(";
  for (std::size_t i = 0; i < x.size(); ++i) params += (i ? "," : "") + std::to_string(x[i]);
  params += ")";
  if (n < 0 || static_cast<long>(x.size()) < n)
    throw std::invalid_argument("falling factorial needs at least n values");
  std::vector<IntPoly> xs(x.begin(), x.end());
  BivarPoly lhs = BivarPoly::t_power(IntPoly(1), static_cast<std::size_t>(n));
  BivarPoly rhs;
  BivarPoly falling(IntPoly(1));
  for (int k = 0; k <= n; ++k) {
    if (k > 0) falling = falling * linear_factor(xs[static_cast<std::size_t>(k - 1)]);
    std::size_t vars = std::min<std::size_t>(static_cast<std::size_t>(k) + 1, xs.size());
    IntPoly h = homogeneous_eval(n - k, std::span<const IntPoly>(xs.data(), vars));
    rhs += BivarPoly(h) * falling;
  }
  return compare_bivar("falling-factorial", params, lhs, rhs, Status::Failed);
}

std::vector<VerificationReport> verify_t_identities(int m, int n) {
  require_m(m);
  std::string params = fmt_params({{"m", m}, {"n", n}});
  BivarPoly tn = BivarPoly::t_power(IntPoly(1), static_cast<std::size_t>(n));
  BivarPoly a, a_printed, b_lhs;
  BivarPoly prod(IntPoly(1));
  for (int k = 0; k <= n; ++k) {
    BivarPoly printed = prod;
    if (k > 0) {
      prod = prod * linear_factor(q_bracket(long(k - 1) * m + 1));
      printed = printed * linear_factor(q_bracket(long(k) * m - k + 1));
    } else {
      printed = prod;
    }
    BivarPoly s2(q_stirling2(m, n, k));
    a += s2 * prod;
    a_printed += s2 * printed;
    b_lhs += BivarPoly::t_power(q_stirling1(m, n, k), static_cast<std::size_t>(k));
  }
  // prod is now the full n-fold product used by (b)
  std::vector<VerificationReport> out;
  out.push_back(compare_bivar("t-identity-a", params, tn, a, Status::Failed));
  out.push_back(compare_bivar("t-identity-a-printed", params, tn, a_printed, Status::DiscrepancyExpected));
  out.push_back(compare_bivar("t-identity-b", params, b_lhs, prod, Status::Failed));
  return out;
}

std::vector<VerificationReport> egf_check(int m, int k, int order) {
  require_m(m);
  if (order < 0 || order > 12) throw std::invalid_argument("order must be in 0..12");
  auto ord = static_cast<std::size_t>(order);
  std::string params = fmt_params({{"m", m}, {"k", k}, {"order", order}});
  std::vector<BigInt> second, first;
  for (int n = 0; n <= order; ++n) {
    second.push_back(stirling2(m, n, k));
    first.push_back(stirling1(m, n, k));
  }
  Rational inv_kfact(1, factorial(k));
  inv_kfact.canonicalize();

  RationalSeries c = series_map(SeriesFn::Exp, RationalSeries::linear(ord, 0, 1)) *
                     series_pow(scaled_expm1(m, ord), static_cast<unsigned>(k)) * inv_kfact;
  RationalSeries one_mx = RationalSeries::linear(ord, 1, m);
  Rational scale(1, factorial(k) * ipow(m, static_cast<unsigned>(k)));
  RationalSeries e = series_pow(series_map(SeriesFn::Log, one_mx), static_cast<unsigned>(k)) *
                     series_map(SeriesFn::Pow, one_mx, Rational(-1, m)) * scale;

  std::vector<VerificationReport> out;
  for (auto [id, lhs, rhs] : {std::tuple{"egf-c", egf_of(second, ord), c}, std::tuple{"egf-e", egf_of(first, ord), e}}) {
    VerificationReport r{id, params, Status::Verified, {}};
    if (!(lhs == rhs)) {
      r.status = Status::Failed;
      r.witness = series_witness(lhs, rhs, "");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> egf_bivariate_check(int m, int order) {
  require_m(m);
  if (order < 0 || order > 12) throw std::invalid_argument("order must be in 0..12");
  auto ord = static_cast<std::size_t>(order);
  std::string params = fmt_params({{"m", m}, {"order", order}});
  RationalSeries expm1 = scaled_expm1(m, ord);
  RationalSeries one_mx = RationalSeries::linear(ord, 1, m);
  RationalSeries x = RationalSeries::linear(ord, 0, 1);

  VerificationReport d{"egf-d", params, Status::Verified, {}};
  VerificationReport d_printed{"egf-d-printed", params, Status::Verified, {}};
  VerificationReport f{"egf-f", params, Status::Verified, {}};
  VerificationReport f_printed{"egf-f-printed", params, Status::Verified, {}};
  auto note = [](VerificationReport& r, Status s, const std::string& w) {
    if (r.status != Status::Verified) return;
    r.status = s;
    r.witness = w;
  };

  for (long t = 0; t <= order; ++t) {
    std::vector<BigInt> second(ord + 1), first(ord + 1);
    for (int n = 0; n <= order; ++n)
      for (int k = 0; k <= n; ++k) {
        BigInt tk = ipow(t, static_cast<unsigned>(k));
        second[n] += stirling2(m, n, k) * tk;
        first[n] += stirling1(m, n, k) * tk;
      }
    RationalSeries lhs2 = egf_of(second, ord);
    RationalSeries lhs1 = egf_of(first, ord);
    std::string at_t = "t=" + std::to_string(t) + " ";

    RationalSeries rhs_d = series_map(SeriesFn::Exp, x + expm1 * Rational(t));
    if (!(lhs2 == rhs_d)) note(d, Status::Failed, series_witness(lhs2, rhs_d, at_t));
    // exp(1 + tF) = e * exp(tF): a rational series never matches it
    RationalSeries tail = series_map(SeriesFn::Exp, expm1 * Rational(t));
    for (std::size_t n = 0; n <= ord; ++n) {
      if (lhs2[n] == 0 && tail[n] == 0) continue;
      note(d_printed, Status::DiscrepancyExpected,
           at_t + "n=" + std::to_string(n) + ": lhs " + lhs2[n].get_str() + " rhs e*" + tail[n].get_str());
      break;
    }

    Rational expo(t - 1, m);
    expo.canonicalize();
    RationalSeries rhs_f = series_map(SeriesFn::Pow, one_mx, expo);
    if (!(lhs1 == rhs_f)) note(f, Status::Failed, series_witness(lhs1, rhs_f, at_t));
    Rational expo_printed(t + 1, m);
    expo_printed.canonicalize();
    RationalSeries rhs_fp = series_map(SeriesFn::Pow, one_mx, expo_printed);
    if (!(lhs1 == rhs_fp)) note(f_printed, Status::DiscrepancyExpected, series_witness(lhs1, rhs_fp, at_t));
  }
  return {d, d_printed, f, f_printed};
}

VerificationReport matrix_inverse_check(int m, int N) {
  require_m(m);
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  VerificationReport r{"matrix-inverse", fmt_params({{"m", m}, {"N", N}}), Status::Verified, {}};
  for (int n = 0; n < N; ++n)
    for (int k = 0; k < N; ++k) {
      IntPoly acc;
      for (int j = k; j <= n; ++j) acc += q_stirling1(m, n, j) * q_stirling2(m, j, k);
      if (!(acc == IntPoly(n == k ? 1 : 0))) {
        r.status = Status::Failed;
        r.witness = "entry (" + std::to_string(n) + "," + std::to_string(k) + ") = " + acc.to_string();
        return r;
      }
    }
  return r;
}

std::vector<VerificationReport> chan_rhoades_check(int m, int n, int k) {
  require_m(m);
  std::string params = fmt_params({{"m", m}, {"n", n}, {"k", k}});
  std::vector<VerificationReport> out;
  if (m >= 2) {
    IntPoly qfact = q_mstep_factorial(k, 1);
    IntPoly sum;
    for (int i = 0; i <= n - k; ++i) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
      IntPoly term = IntPoly::monomial(binom, static_cast<std::size_t>(n - k - i)) *
                     pow(q_bracket(m), static_cast<unsigned>(n - i)) *
                     substitute_power(qfact * classical_q_stirling2(n - i, k), m);
      sum += term;
    }
    IntPoly target = in_range(n, k) ? q_mstep_factorial(long(k) * m, m) *
                                          homogeneous_eval(n - k, bracket_run(1, m, k + 1))
                                    : IntPoly();
    VerificationReport r{"chan-rhoades-binomial", params, Status::Verified, {}};
    if (!(sum == target)) {
      r.status = Status::Failed;
      r.witness = "lhs " + sum.to_string() + " rhs " + target.to_string();
    }
    out.push_back(std::move(r));
  }
  // degrees d_i and coexponents e_i^* of the group
  IntPoly degrees(1);
  std::vector<IntPoly> coexp;
  for (int i = 1; i <= k; ++i) degrees *= q_bracket(m == 1 ? i : long(i) * m);
  for (int i = 1; i <= k + 1; ++i) coexp.push_back(q_bracket(m == 1 ? i - 1 : long(i - 1) * m + 1));
  IntPoly unified = in_range(n, k) ? degrees * homogeneous_eval(n - k, coexp) : IntPoly();
  IntPoly expected = m == 1 ? q_mstep_factorial(k, 1) * classical_q_stirling2(n, k)
                            : ordered_q_stirling(m, n, k, OrderedVariant::CR);
  VerificationReport r{"chan-rhoades-unified", params, Status::Verified, {}};
  if (!(unified == expected)) {
    r.status = Status::Failed;
    r.witness = "lhs " + unified.to_string() + " rhs " + expected.to_string();
  }
  out.push_back(std::move(r));
  return out;
}

}  // namespace crgstir
