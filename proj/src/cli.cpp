#include "crgstir/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crgstir/arrangement.hpp"
#include "crgstir/coinvariant.hpp"
#include "crgstir/json_io.hpp"
#include "crgstir/lattice.hpp"
#include "crgstir/suites.hpp"

namespace crgstir {

namespace {

struct Options {
  std::string m = "2";
  std::string n = "0..4";
  std::string k;
  std::string family = "second";
  std::string variant = "lattice";
  std::string kind = "partition";
  std::string flavor = "super";
  std::string format = "text";
  std::string suite = "all";
  std::string output;
  int p = -1;
  bool barred = false;
  bool geometric = false;
  bool super = false;
  bool show_bijection = false;
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

IntRange range(const std::string& text, int min, const char* what) {
  IntRange r;
  try {
    r = parse_range(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + what + ": " + e.what());
  }
  if (r.lo < min) throw UsageError(std::string("--") + what + " must be >= " + std::to_string(min));
  return r;
}

void require_cap(std::size_t count, const std::string& what) {
  if (count > element_cap()) throw CapExceeded(element_cap(), what);
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

Family resolve_family(const Options& o) {
  if (o.family == "second") return o.barred ? Family::SecondBarred : Family::SecondPlain;
  if (o.family == "ordered") {
    switch (parse_variant(o.variant)) {
      case OrderedVariant::Lattice: return Family::OrderedLattice;
      case OrderedVariant::Super: return Family::OrderedSuper;
      case OrderedVariant::CR: return Family::OrderedCR;
    }
  }
  return parse_family(o.family);
}

// -------------------------------------------------------------------------

int cmd_table(const Options& o, bool polys, std::ostream& out) {
  const Family fam = resolve_family(o);
  const IntRange mr = range(o.m, 1, "m"), nr = range(o.n, 0, "n");
  if (o.format == "csv" && polys) throw UsageError("csv output is only available for integer tables (use table)");
  const std::size_t cells = static_cast<std::size_t>(mr.hi - mr.lo + 1) * static_cast<std::size_t>(nr.hi + 1) *
                            static_cast<std::size_t>(nr.hi + 2) / 2;
  require_cap(cells, "table entries");
  auto value = [&](const IntPoly& p) { return polys ? p.to_string() : p.at_one().get_str(); };

  Json tables = Json::array();
  if (o.format == "csv") out << "family,m,n,k,value\n";
  for (int m = mr.lo; m <= mr.hi; ++m) {
    const StirlingTable& t = cached_table(fam, m, nr.hi);
    if (o.format == "json") {
      Json entries = Json::array();
      for (int n = nr.lo; n <= nr.hi; ++n)
        for (int k = 0; k <= n; ++k) {
          IntPoly v = t.at(n, k);
          entries.push_back({{"n", n}, {"k", k}, {"value", polys ? to_json(v) : Json(v.at_one().get_str())}});
        }
      tables.push_back({{"family", family_name(fam)}, {"m", m}, {"entries", std::move(entries)}});
    } else if (o.format == "csv") {
      for (int n = nr.lo; n <= nr.hi; ++n)
        for (int k = 0; k <= n; ++k)
          out << family_name(fam) << ',' << m << ',' << n << ',' << k << ',' << value(t.at(n, k)) << '\n';
    } else {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::size_t> width(static_cast<std::size_t>(nr.hi) + 2, 0);
      std::vector<std::string> head{"n\\k"};
      for (int k = 0; k <= nr.hi; ++k) head.push_back(std::to_string(k));
      rows.push_back(head);
      for (int n = nr.lo; n <= nr.hi; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (int k = 0; k <= n; ++k) row.push_back(value(t.at(n, k)));
        rows.push_back(row);
      }
      for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      out << family_name(fam) << " m=" << m << '\n';
      for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "  " : "") + pad(row[i], width[i]);
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
      }
    }
  }
  if (o.format == "json") out << Json{{"tables", std::move(tables)}}.dump(2) << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------------

int cmd_enumerate(const Options& o, std::ostream& out) {
  const IntRange mr = range(o.m, 1, "m"), nr = range(o.n, 0, "n");
  std::vector<std::pair<int, std::pair<std::string, Json>>> items;  // k, (text, json)
  auto push = [&](int k, int invs, std::string text, Json j) {
    require_cap(items.size() + 1, "enumerated objects");
    Json e{{"k", k}};
    if (invs >= 0) e["inv"] = invs;
    e["object"] = std::move(j);
    items.emplace_back(k, std::make_pair((invs >= 0 ? "inv=" + std::to_string(invs) + "  " : std::string()) + text, e));
  };
  Json all = Json::array();
  for (int m = mr.lo; m <= mr.hi; ++m)
    for (int n = nr.lo; n <= nr.hi; ++n) {
      IntRange kr = o.k.empty() ? IntRange{0, n} : range(o.k, 0, "k");
      items.clear();
      for (int k = kr.lo; k <= std::min(kr.hi, n); ++k) {
        if (o.kind == "partition") {
          if (o.barred && m < 2) throw UsageError("barred partitions need m >= 2");
          for_each_partition(m, n, k, o.barred, [&](const ColoredPartition& p) { push(k, inv(p), p.to_string(), to_json(p)); });
        } else if (o.kind == "super") {
          for_each_super(m, n, k, [&](const SuperPartition& p) { push(k, inv(p), p.to_string(), to_json(p)); });
        } else if (o.kind == "ordered") {
          Flavor f = o.flavor == "cr" ? Flavor::CR : o.flavor == "super" ? Flavor::Super : throw UsageError("--flavor must be super or cr");
          for_each_ordered(m, n, k, f, [&](const OrderedPartition& w) { push(k, inv(w), w.to_string(), to_json(w)); });
        } else if (o.kind == "full") {
          const int p = o.p < 0 ? 1 : o.p;
          if (p != 1 && p != m) throw UsageError("--p must be 1 or m for full permutations");
          FullFilter filter;
          filter.tuples = k;
          double order = 1;
          for (int i = 1; i <= n; ++i) order *= double(i) * m;
          if (order > double(element_cap())) throw CapExceeded(element_cap(), "group elements");
          for (const auto& g : enumerate_full(m, p, n, filter)) {
            auto pi = underlying_partition(g, p == m && m >= 2);
            auto cyc = cycle_decomposition(g).to_string();
            push(k, -1, cyc + "  -> " + pi.to_string(), Json{{"cycles", cyc}, {"partition", to_json(pi)}});
          }
        } else {
          throw UsageError("--kind must be partition, super, ordered or full");
        }
      }
      if (o.format == "json") {
        Json list = Json::array();
        for (auto& it : items) list.push_back(std::move(it.second.second));
        all.push_back({{"m", m}, {"n", n}, {"kind", o.kind}, {"count", list.size()}, {"items", std::move(list)}});
      } else {
        out << "# m=" << m << " n=" << n << " kind=" << o.kind << (o.barred ? " barred" : "") << " count=" << items.size() << '\n';
        for (const auto& it : items) out << "k=" << it.first << "  " << it.second.first << '\n';
      }
    }
  if (o.format == "json") out << Json{{"enumerations", std::move(all)}}.dump(2) << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------------

Json whitney_json(const WhitneyNumbers& w) {
  Json j = Json::array();
  for (std::size_t r = 0; r < w.second.size(); ++r) j.push_back({{"rank", r}, {"W", w.second[r].get_str()}, {"w", w.first[r].get_str()}});
  return j;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const IntRange mr = range(o.m, 1, "m"), nr = range(o.n, 0, "n");
  Json all = Json::array();
  for (int m = mr.lo; m <= mr.hi; ++m)
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const int p = o.p < 0 ? (o.barred ? m : 1) : o.p;
      if (p < 1 || m % p != 0) throw UsageError("--p must divide m");
      const bool barred = p == m && m >= 2;
      auto L = PartitionLattice::build(m, n, barred);
      auto W = whitney_numbers(L);
      Json j{{"m", m}, {"p", p}, {"n", n}, {"barred", barred}, {"size", L.size()}};
      Json elems = Json::array();
      for (std::size_t i = 0; i < L.size(); ++i)
        elems.push_back({{"index", i}, {"rank", L.rank(i)}, {"mobius", L.mobius(i).get_str()}, {"partition", L.element(i).to_string()}});
      Json edges = Json::array();
      for (auto [a, b] : L.hasse_edges()) edges.push_back({a, b});
      j["elements"] = std::move(elems);
      j["hasse"] = std::move(edges);
      j["whitney"] = whitney_json(W);

      if (o.geometric) {
        auto geom = intersection_lattice(reflection_hyperplanes(m, p, n), m, n);
        auto cert = iso_check(geom, m, p, n);
        Json g{{"size", geom.elements.size()}, {"iso", cert.ok}, {"whitney", whitney_json(geom.whitney())}};
        if (!cert.ok) g["counterexample"] = cert.counterexample;
        Json map = Json::object();
        for (const auto& [label, sub] : cert.map) map[label] = sub.row_strings();
        g["certificate"] = std::move(map);
        j["geometric"] = std::move(g);
      }

      if (o.format == "json") {
        all.push_back(std::move(j));
        continue;
      }
      out << "lattice m=" << m << " p=" << p << " n=" << n << (barred ? " barred" : "") << " elements=" << L.size() << '\n';
      for (const auto& e : j["elements"])
        out << "  [" << e["index"].get<std::size_t>() << "] rank " << e["rank"].get<int>() << "  mu "
            << e["mobius"].get<std::string>() << "  " << e["partition"].get<std::string>() << '\n';
      out << "hasse:";
      for (auto [a, b] : L.hasse_edges()) out << ' ' << a << '<' << b;
      out << "\nwhitney (rank: W w):\n";
      for (std::size_t r = 0; r < W.second.size(); ++r) out << "  " << r << ": " << W.second[r] << ' ' << W.first[r] << '\n';
      if (o.geometric) {
        const Json& g = j["geometric"];
        out << "geometric: elements=" << g["size"].get<std::size_t>() << " iso=" << (g["iso"].get<bool>() ? "ok" : "FAILED") << '\n';
        if (g.contains("counterexample")) out << "  counterexample: " << g["counterexample"].get<std::string>() << '\n';
        for (const auto& [label, rows] : g["certificate"].items()) {
          out << "  " << label << " ->";
          if (rows.empty()) out << " (whole space)";
          for (const auto& row : rows) {
            out << " [";
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i].get<std::string>();
            out << ']';
          }
          out << '\n';
        }
      }
    }
  if (o.format == "json") out << Json{{"lattices", std::move(all)}}.dump(2) << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------------

int cmd_artin(const Options& o, std::ostream& out) {
  const IntRange mr = range(o.m, 1, "m"), nr = range(o.n, 0, "n");
  Json all = Json::array();
  for (int m = mr.lo; m <= mr.hi; ++m)
    for (int n = nr.lo; n <= nr.hi; ++n) {
      Json j{{"m", m}, {"n", n}, {"staircase", staircase(m, n)}, {"hilbert", to_json(artin_hilbert(m, n))}};
      if (o.super || o.show_bijection) {
        if (m < 2) throw UsageError("--super needs m >= 2");
        Json bp = Json::array();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::vector<int> T;
          for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) T.push_back(i);
          auto r = beta_phi(T, m, n);
          bp.push_back({{"T", T}, {"beta", r.beta}, {"phi", r.phi}});
        }
        j["beta_phi"] = std::move(bp);
        j["super_hilbert"] = to_json(super_artin_hilbert(m, n));
        j["super_stirling"] = to_json(super_stirling_generating(m, n));
      }
      if (o.show_bijection) {
        Json traces = Json::array();
        std::size_t count = 0;
        for_each_super_artin(m, n, [&](const SuperArtinElement& e) {
          require_cap(++count, "bijection traces");
          Json steps = Json::array();
          for (const auto& w : insert_bijection_trace(e.T, e.alpha, m, n)) steps.push_back(w.to_string());
          auto back = inverse_bijection(insert_bijection(e.T, e.alpha, m, n));
          traces.push_back({{"T", e.T}, {"alpha", e.alpha}, {"steps", std::move(steps)}, {"round_trip", back == e}});
        });
        j["bijection"] = std::move(traces);
      }
      if (o.format == "json") {
        all.push_back(std::move(j));
        continue;
      }
      out << "artin m=" << m << " n=" << n << '\n';
      out << "  staircase " << composition_to_string(staircase(m, n)) << '\n';
      out << "  hilbert " << artin_hilbert(m, n).to_string() << '\n';
      if (j.contains("beta_phi")) {
        for (const auto& row : j["beta_phi"]) {
          std::string t;
          for (int x : row["T"]) t += (t.empty() ? "" : ",") + std::to_string(x);
          out << "  T={" << t << "}  beta " << composition_to_string(row["beta"].get<Composition>()) << "  phi "
              << composition_to_string(row["phi"].get<Composition>()) << '\n';
        }
        out << "  super hilbert " << super_artin_hilbert(m, n).to_string() << '\n';
        out << "  super stirling " << super_stirling_generating(m, n).to_string() << '\n';
      }
      if (j.contains("bijection"))
        for (const auto& tr : j["bijection"]) {
          std::string t;
          for (int x : tr["T"]) t += (t.empty() ? "" : ",") + std::to_string(x);
          out << "  T={" << t << "} alpha " << composition_to_string(tr["alpha"].get<Composition>()) << ":";
          for (const auto& s : tr["steps"]) out << "  " << s.get<std::string>();
          out << (tr["round_trip"].get<bool>() ? "  [round trip ok]" : "  [round trip FAILED]") << '\n';
        }
    }
  if (o.format == "json") out << Json{{"artin", std::move(all)}}.dump(2) << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------------

int cmd_verify(const Options& o, bool m_set, bool n_set, std::ostream& out) {
  SuiteOptions so;
  if (m_set) so.m = range(o.m, 1, "m");
  if (n_set) so.n = range(o.n, 0, "n");
  auto names = suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UsageError("unknown suite '" + o.suite + "'");
  auto reports = run_suite(o.suite, so);
  auto t = tally(reports);
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out << Json{{"suite", o.suite},
                {"reports", std::move(list)},
                {"summary", {{"verified", t.verified}, {"failed", t.failed}, {"paper-discrepancy", t.discrepancies}}}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& r : reports) {
      out << pad("[" + std::string(status_name(r.status)) + "]", 20) << r.id << (r.params.empty() ? "" : "  " + r.params) << '\n';
      if (!r.witness.empty()) out << "    witness: " << r.witness << '\n';
      if (!r.detail.empty()) out << "    " << r.detail << '\n';
    }
    out << "summary: " << t.verified << " verified, " << t.failed << " failed, " << t.discrepancies << " paper-discrepancy\n";
  }
  return t.failed ? kExitFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"G(m,p,n) Stirling tables, lattices and checks", "crgstir"};
  app.require_subcommand(1);
  Options o;
  auto formats = CLI::IsMember({"text", "json", "csv"});

  auto common = [&](CLI::App* sub, const char* n_default) {
    sub->add_option("--m", o.m, "m or range lo..hi");
    sub->add_option("--n", o.n, std::string("n or range lo..hi (default ") + n_default + ")");
    sub->add_option("--format", o.format, "text, json or csv")->check(formats);
    sub->add_option("--output,-o", o.output, "write to this file instead of stdout");
  };
  auto* table = app.add_subcommand("table", "integer Stirling tables");
  auto* qtable = app.add_subcommand("qtable", "q-analogue tables");
  for (auto* sub : {table, qtable}) {
    common(sub, "0..4");
    sub->add_option("--family", o.family, "second, first, super, ordered, or a full family name");
    sub->add_flag("--barred", o.barred, "barred second kind");
    sub->add_option("--variant", o.variant, "ordered variant: lattice, super, cr");
  }
  auto* enumerate = app.add_subcommand("enumerate", "stream partitions or full permutations");
  common(enumerate, "0..4");
  enumerate->add_option("--k", o.k, "k or range (default 0..n)");
  enumerate->add_option("--kind", o.kind, "partition, super, ordered, full");
  enumerate->add_flag("--barred", o.barred);
  enumerate->add_option("--flavor", o.flavor, "ordered flavor: super or cr");
  enumerate->add_option("--p", o.p, "group parameter for full permutations");
  auto* lattice = app.add_subcommand("lattice", "Mobius and Whitney data");
  common(lattice, "0..4");
  lattice->add_flag("--barred", o.barred);
  lattice->add_flag("--geometric", o.geometric, "also build the intersection lattice and certificate");
  lattice->add_option("--p", o.p, "group parameter (divides m)");
  auto* artin = app.add_subcommand("artin", "staircases and Hilbert series");
  common(artin, "0..4");
  artin->add_flag("--super", o.super);
  artin->add_flag("--show-bijection", o.show_bijection);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify, "suite specific");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_choices));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  if (o.format == "csv" && !table->parsed() && !qtable->parsed()) {
    err << "error: csv output is only available for tables\n";
    return kExitUsage;
  }
  if (enumerate->parsed() && enumerate->count("--n") == 0) o.n = "0..3";

  std::ostringstream buf;
  int code = kExitOk;
  try {
    if (table->parsed()) code = cmd_table(o, false, buf);
    else if (qtable->parsed()) code = cmd_table(o, true, buf);
    else if (enumerate->parsed()) code = cmd_enumerate(o, buf);
    else if (lattice->parsed()) code = cmd_lattice(o, buf);
    else if (artin->parsed()) code = cmd_artin(o, buf);
    else code = cmd_verify(o, verify->count("--m") > 0, verify->count("--n") > 0, buf);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (set CRGSTIR_MAX_ELEMENTS to raise the cap)\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (o.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!(f << buf.str())) {
      err << "error: cannot write " << o.output << '\n';
      return kExitUsage;
    }
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace crgstir
