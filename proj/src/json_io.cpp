#include "crgstir/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace crgstir {

namespace {

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + sep.size();
  }
}

Json elements(const std::string& s) {
  Json arr = Json::array();
  std::istringstream in(s);
  for (std::string tok; in >> tok;) arr.push_back(tok);
  return arr;
}

// The text form is canonical, so the JSON layout is read off it.
Json from_text(std::string text, std::string_view flavor, int m, int n) {
  if (!text.empty() && text.front() == '(') text = text.substr(1, text.size() - 2);
  auto parts = split(text, " | ");
  Json j;
  j["flavor"] = flavor;
  j["m"] = m;
  j["n"] = n;
  j["zero"] = elements(parts[0]);
  Json tuples = Json::array();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Json t = Json::array();
    for (const auto& b : split(parts[i], "/")) t.push_back(elements(b));
    tuples.push_back(std::move(t));
  }
  j["tuples"] = std::move(tuples);
  return j;
}

std::string to_text(const Json& j, bool parens) {
  auto join = [](const Json& arr) {
    std::string s;
    for (const auto& e : arr) s += (s.empty() ? "" : " ") + e.get<std::string>();
    return s;
  };
  std::string s = join(j.at("zero"));
  for (const auto& t : j.at("tuples")) {
    s += " | ";
    bool first = true;
    for (const auto& b : t) {
      if (!first) s += "/";
      first = false;
      s += join(b);
    }
  }
  return parens ? "(" + s + ")" : s;
}

void expect_flavor(const Json& j, std::initializer_list<std::string_view> ok) {
  auto f = j.at("flavor").get<std::string>();
  for (auto o : ok)
    if (f == o) return;
  throw std::invalid_argument("unexpected partition flavor: " + f);
}

}  // namespace

Json to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json to_json(const BivarPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.t_coeffs()) arr.push_back(to_json(c));
  return arr;
}

IntPoly poly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) {
    BigInt v;
    if (v.set_str(x.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient: " + x.dump());
    c.push_back(v);
  }
  return IntPoly(std::move(c));
}

BivarPoly bivar_from_json(const Json& j) {
  std::vector<IntPoly> c;
  for (const auto& x : j) c.push_back(poly_from_json(x));
  return BivarPoly(std::move(c));
}

Json to_json(const ColoredPartition& p) {
  return from_text(p.to_string(), p.barred() ? "barred" : "plain", p.m(), p.n());
}

Json to_json(const SuperPartition& p) {
  return from_text(p.to_string(), "super", p.partition.m(), p.partition.n());
}

Json to_json(const OrderedPartition& p) {
  return from_text(p.to_string(), p.flavor == Flavor::Super ? "ordered-super" : "ordered-cr", p.m, p.n);
}

ColoredPartition partition_from_json(const Json& j) {
  expect_flavor(j, {"plain", "barred"});
  return parse_partition(to_text(j, false), j.at("m").get<int>(), j.at("flavor") == "barred", j.at("n").get<int>());
}

SuperPartition super_from_json(const Json& j) {
  expect_flavor(j, {"super"});
  return parse_super(to_text(j, false), j.at("m").get<int>(), j.at("n").get<int>());
}

OrderedPartition ordered_from_json(const Json& j) {
  expect_flavor(j, {"ordered-super", "ordered-cr"});
  Flavor f = j.at("flavor") == "ordered-cr" ? Flavor::CR : Flavor::Super;
  return parse_ordered(to_text(j, true), j.at("m").get<int>(), f, j.at("n").get<int>());
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["id"] = r.id;
  j["params"] = r.params;
  j["status"] = status_name(r.status);
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace crgstir
