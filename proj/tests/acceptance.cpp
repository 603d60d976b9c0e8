// Acceptance suite: one PASS/FAIL line per criterion.
//   crgstir_acceptance            all criteria
//   crgstir_acceptance 4          criterion 4 only
//   crgstir_acceptance 10 PATH    criterion 10, running the CLI binary at PATH
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "crgstir/arrangement.hpp"
#include "crgstir/cli.hpp"
#include "crgstir/coinvariant.hpp"
#include "crgstir/involution.hpp"
#include "crgstir/lattice.hpp"
#include "crgstir/suites.hpp"

using namespace crgstir;

namespace {

// Pinned limits: every comparison is exact; only wall-clock time has a bound.
constexpr double kC1Seconds = 60;
constexpr double kC3Seconds = 120;
constexpr double kC10Seconds = 600;

std::string cli_path;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("fails: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string secs(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

// Every report with this id must be verified.
void require_all(Verdict& v, const std::vector<VerificationReport>& reports, const std::string& id) {
  int seen = 0;
  for (const auto& r : reports)
    if (r.id == id) {
      ++seen;
      v.require(r.status == Status::Verified, id + " " + r.params + ": " + r.witness);
    }
  v.require(seen > 0, "no " + id + " reports");
}

// Printed forms: each must be reported with a witness.
void require_reported(Verdict& v, const std::vector<VerificationReport>& reports, const std::string& id) {
  int seen = 0;
  for (const auto& r : reports)
    if (r.id == id) {
      ++seen;
      v.require(r.status == Status::DiscrepancyExpected && !r.witness.empty(), id + " " + r.params + " not reported");
    }
  v.require(seen > 0, "no " + id + " reports");
}

SuiteOptions range_opts(IntRange m, IntRange n) {
  SuiteOptions o;
  o.m = m;
  o.n = n;
  return o;
}

IntPoly qsum_partitions(int m, int n, int k, bool barred) {
  IntPoly s;
  for_each_partition(m, n, k, barred, [&](const ColoredPartition& p) { s += IntPoly::monomial(1, static_cast<std::size_t>(inv(p))); });
  return s;
}

// ---------------------------------------------------------------------------

Verdict c1() {
  Verdict v;
  Stopwatch t;
  int cells = 0;
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= n; ++k)
        for (bool barred : {false, true}) {
          if (barred && m < 2) continue;
          ++cells;
          IntPoly e = qsum_partitions(m, n, k, barred), f = q_stirling2(m, n, k, barred);
          v.require(e == f, "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + (barred ? ",barred" : "") +
                                "): " + e.to_string() + " vs " + f.to_string());
        }
  double s = t.seconds();
  v.require(s < kC1Seconds, "runtime " + secs(s));
  v.note(std::to_string(cells) + " cells in " + secs(s));
  return v;
}

Verdict c2() {
  Verdict v;
  auto reports = run_suite("examples", {});
  for (const char* id : {"standard-form-example", "inv-example", "super-inv-example", "eta-example", "theta-set-example"})
    require_all(v, reports, id);
  return v;
}

Verdict c3() {
  Verdict v;
  Stopwatch t;
  const std::array<std::array<int, 3>, 13> triples{{{2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {2, 2, 3}, {3, 1, 2}, {3, 1, 3}, {3, 3, 2},
                                                    {3, 3, 3}, {4, 1, 2}, {4, 2, 2}, {4, 4, 2}, {1, 1, 3}, {1, 1, 4}}};
  for (auto [m, p, n] : triples) {
    std::string tag = "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
    auto geom = intersection_lattice(reflection_hyperplanes(m, p, n), m, n);
    auto cert = iso_check(geom, m, p, n);
    v.require(cert.ok, tag + " iso: " + cert.counterexample);
    const bool barred = p == m && m >= 2;
    auto gw = geom.whitney();
    auto cw = whitney_numbers(PartitionLattice::build(m, n, barred));
    v.require(gw.second == cw.second && gw.first == cw.first, tag + " Whitney numbers differ");
    if (m == 1) {
      // S_n acts on C^n; its lattice is the partition lattice of [n]
      for (int blocks = 1; blocks <= n; ++blocks)
        v.require(gw.second[static_cast<std::size_t>(n - blocks)] == stirling2(1, n - 1, blocks - 1), tag + " W vs classical S");
    } else {
      for (int k = 0; k <= n; ++k)
        v.require(gw.second[static_cast<std::size_t>(n - k)] == stirling2(m, n, k, barred), tag + " W(L,n-k) vs S at k=" + std::to_string(k));
    }
  }
  double s = t.seconds();
  v.require(s < kC3Seconds, "runtime " + secs(s));
  v.note("13 triples in " + secs(s));
  return v;
}

Verdict c4() {
  Verdict v;
  auto reports = run_suite("lattice", range_opts({1, 3}, {1, 4}));
  require_all(v, reports, "mobius-full-count");
  require_all(v, reports, "mobius-full-count-barred");
  require_all(v, reports, "mobius-product");
  require_all(v, reports, "classical-whitney");
  for (const auto& r : reports)
    if (r.id == "mobius-product-barred-printed" && r.status != Status::Verified)
      v.note("barred product formula reported (expected): " + r.params + ": " + r.witness);
  return v;
}

Verdict c5() {
  Verdict v;
  auto reports = run_suite("lattice", range_opts({1, 3}, {1, 4}));
  require_all(v, reports, "first-kind-coexponents");
  require_all(v, reports, "first-kind-full-count");
  require_all(v, reports, "first-kind-full-count-barred");
  // m = 1: |w| of the partition lattice against the classical first kind
  require_all(v, reports, "classical-whitney");
  return v;
}

Verdict c6() {
  Verdict v;
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 5; ++n) {
      const std::string at = " m=" + std::to_string(m) + " n=" + std::to_string(n);
      v.require(alternating_sum(OrderedVariant::Lattice, m, n) == IntPoly(1), "lattice" + at);
      v.require(alternating_sum(OrderedVariant::Super, m, n) == IntPoly(1), "super" + at);
      if (m >= 2)
        v.require(alternating_sum(OrderedVariant::CR, m, n) == pow(q_bracket(m - 1), static_cast<unsigned>(n)), "cr" + at);
    }
  return v;
}

Verdict c7() {
  Verdict v;
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n)
      for (Flavor f : {Flavor::Super, Flavor::CR}) {
        auto res = verify_cancellation(m, n, f);
        v.require(res.report.status == Status::Verified, res.report.id + " " + res.report.params + ": " + res.report.witness);
        if (f == Flavor::Super)
          v.require(res.fixed_sum == alternating_sum(OrderedVariant::Super, m, n), "super fixed sum vs alternating sum");
        else if (m >= 2)
          v.require(res.fixed_sum == alternating_sum(OrderedVariant::CR, m, n), "cr fixed sum vs alternating sum");
      }
  return v;
}

Verdict c8() {
  Verdict v;
  auto falling = run_suite("falling", {});
  require_all(v, falling, "falling-factorial");
  auto t = run_suite("t-identities", range_opts({1, 4}, {0, 5}));
  require_all(v, t, "t-identity-a");
  require_all(v, t, "t-identity-b");
  require_reported(v, t, "t-identity-a-printed");
  require_all(v, run_suite("matrix", range_opts({1, 4}, {0, 0})), "matrix-inverse");
  auto egf = run_suite("egf", range_opts({1, 4}, {0, 0}));
  for (const char* id : {"egf-c", "egf-e", "egf-d", "egf-f"}) require_all(v, egf, id);
  for (const char* id : {"egf-d-printed", "egf-f-printed"}) {
    require_reported(v, egf, id);
    for (const auto& r : egf)
      if (r.id == id)
        v.require(r.witness.find(" n=0:") != std::string::npos || r.witness.find(" n=1:") != std::string::npos,
                  std::string(id) + " witness beyond n=1: " + r.witness);
  }
  return v;
}

Verdict c9() {
  Verdict v;
  auto ex = run_suite("examples", {});
  require_all(v, ex, "beta-phi-example");
  auto co = run_suite("coinvariant", range_opts({2, 3}, {0, 4}));
  require_all(v, co, "super-artin");
  require_all(v, co, "insert-bijection");
  auto ends = run_suite("coinvariant", range_opts({2, 4}, {0, 4}));
  require_all(v, ends, "super-artin-extreme-coefficients");
  auto cr = run_suite("chan-rhoades", range_opts({1, 3}, {0, 5}));
  require_all(v, cr, "chan-rhoades-binomial");
  require_all(v, cr, "chan-rhoades-unified");
  return v;
}

std::string capture_cli(const std::vector<std::string>& args) {
  if (cli_path.empty()) {
    std::ostringstream out, err;
    run(args, out, err);
    return out.str();
  }
  std::string cmd = "'" + cli_path + "'";
  for (const auto& a : args) cmd += " " + a;
  std::string text;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
    pclose(pipe);
  }
  return text;
}

Verdict c10() {
  Verdict v;
  Stopwatch t;
  std::string a = capture_cli({"verify", "--suite", "all"});
  double first = t.seconds();
  std::string b = capture_cli({"verify", "--suite", "all"});
  v.require(!a.empty(), "empty report");
  v.require(a == b, "reports differ between runs");
  std::string ja = capture_cli({"verify", "--suite", "all", "--format", "json"});
  std::string jb = capture_cli({"verify", "--suite", "all", "--format", "json"});
  v.require(ja == jb, "json reports differ between runs");
  v.require(first < kC10Seconds, "single run " + secs(first));
  v.note("one full run " + secs(first) + ", " + std::to_string(a.size()) + " bytes" + (cli_path.empty() ? " (in process)" : ""));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::array<std::pair<const char*, Verdict (*)()>, 10> criteria{{
      {"enumeration matches the second-kind closed form", c1},
      {"worked values from the examples", c2},
      {"geometric and combinatorial lattices agree", c3},
      {"Mobius function three ways", c4},
      {"first kind and full-permutation counts", c5},
      {"alternating sums", c6},
      {"sign-reversing involutions", c7},
      {"falling factorials, t-identities, matrices, EGFs", c8},
      {"coinvariant combinatorics", c9},
      {"deterministic verify output", c10},
  }};
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2) cli_path = argv[2];
  if (only < 0 || only > 10) {
    std::cerr << "usage: crgstir_acceptance [criterion 1-10] [cli path]\n";
    return 2;
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << '\n';
    std::size_t shown = 0;
    for (const auto& n : v.notes)
      if (++shown <= 8) std::cout << "    " << n << '\n';
    if (v.notes.size() > 8) std::cout << "    ... " << v.notes.size() - 8 << " more\n";
    all_pass = all_pass && v.pass;
  }
  return all_pass ? 0 : 1;
}
