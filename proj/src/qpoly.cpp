#include "crgstir/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crgstir {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

BigInt IntPoly::at_one() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (c < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << 'q';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result(1);
  IntPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

IntPoly q_bracket(long k) {
  if (k <= 0) return {};
  return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

IntPoly q_mstep_factorial(long l, long m) {
  if (m < 1) throw std::invalid_argument("q_mstep_factorial: m must be positive");
  IntPoly result(1);
  for (long f = l; f > 0; f -= m) result *= q_bracket(f);
  return result;
}

BigInt mstep_factorial(long l, long m) {
  if (m < 1) throw std::invalid_argument("mstep_factorial: m must be positive");
  BigInt result = 1;
  for (long f = l; f > 0; f -= m) result *= f;
  return result;
}

IntPoly homogeneous_eval(long d, std::span<const IntPoly> vals) {
  if (d < 0) return {};
  std::vector<IntPoly> h(static_cast<std::size_t>(d) + 1);
  h[0] = IntPoly(1);
  for (const auto& x : vals) {
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += x * h[k - 1];
  }
  return h.back();
}

IntPoly elementary_eval(long d, std::span<const IntPoly> vals) {
  if (d < 0 || d > static_cast<long>(vals.size())) return {};
  std::vector<IntPoly> e(static_cast<std::size_t>(d) + 1);
  e[0] = IntPoly(1);
  for (const auto& x : vals) {
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e.back();
}

IntPoly reverse_coefficients(const IntPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

IntPoly substitute_power(const IntPoly& p, long m) {
  if (m < 1) throw std::invalid_argument("substitute_power: m must be positive");
  if (p.is_zero()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(p.degree() * m) + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i * static_cast<std::size_t>(m)] = p.coeffs()[i];
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// BivarPoly

BivarPoly::BivarPoly(std::vector<IntPoly> t_coeffs) : t_coeffs_(std::move(t_coeffs)) { trim(); }

BivarPoly::BivarPoly(const IntPoly& constant) {
  if (!constant.is_zero()) t_coeffs_.push_back(constant);
}

BivarPoly BivarPoly::t() { return t_power(IntPoly(1), 1); }

BivarPoly BivarPoly::t_power(const IntPoly& c, std::size_t degree) {
  std::vector<IntPoly> v(degree + 1);
  v[degree] = c;
  return BivarPoly(std::move(v));
}

void BivarPoly::trim() {
  while (!t_coeffs_.empty() && t_coeffs_.back().is_zero()) t_coeffs_.pop_back();
}

IntPoly BivarPoly::t_coeff(std::size_t j) const { return j < t_coeffs_.size() ? t_coeffs_[j] : IntPoly(); }

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  if (t_coeffs_.size() < rhs.t_coeffs_.size()) t_coeffs_.resize(rhs.t_coeffs_.size());
  for (std::size_t i = 0; i < rhs.t_coeffs_.size(); ++i) t_coeffs_[i] += rhs.t_coeffs_[i];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  if (t_coeffs_.size() < rhs.t_coeffs_.size()) t_coeffs_.resize(rhs.t_coeffs_.size());
  for (std::size_t i = 0; i < rhs.t_coeffs_.size(); ++i) t_coeffs_[i] -= rhs.t_coeffs_[i];
  trim();
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPoly> out(a.t_coeffs_.size() + b.t_coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.t_coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.t_coeffs_.size(); ++j) out[i + j] += a.t_coeffs_[i] * b.t_coeffs_[j];
  return BivarPoly(std::move(out));
}

std::string BivarPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < t_coeffs_.size(); ++j) {
    if (t_coeffs_[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + t_coeffs_[j].to_string() + ")";
    if (j >= 1) out += "t";
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalSeries

RationalSeries::RationalSeries(std::size_t order) : coeffs_(order + 1) {}

RationalSeries::RationalSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

RationalSeries RationalSeries::linear(std::size_t order, const Rational& c0, const Rational& c1) {
  RationalSeries s(order);
  s[0] = c0;
  if (order >= 1) s[1] = c1;
  return s;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  RationalSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string RationalSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].get_str() + ")";
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out + " + O(x^" + std::to_string(order() + 1) + ")";
}

RationalSeries series_pow(const RationalSeries& s, unsigned k) {
  RationalSeries result(s.order());
  result[0] = 1;
  for (unsigned i = 0; i < k; ++i) result = result * s;
  return result;
}

namespace {

// f = exp(g): n f_n = sum_{k=1..n} k g_k f_{n-k}
RationalSeries series_exp(const RationalSeries& g) {
  RationalSeries f(g.order());
  f[0] = 1;
  for (std::size_t n = 1; n <= g.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<long>(k)) * g[k] * f[n - k];
    f[n] = acc / static_cast<long>(n);
  }
  return f;
}

// l = log(s), s_0 = 1: s l' = s', so n l_n = n s_n - sum_{k=1..n-1} k l_k s_{n-k}
RationalSeries series_log(const RationalSeries& s) {
  RationalSeries l(s.order());
  for (std::size_t n = 1; n <= s.order(); ++n) {
    Rational acc = Rational(static_cast<long>(n)) * s[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Rational(static_cast<long>(k)) * l[k] * s[n - k];
    l[n] = acc / static_cast<long>(n);
  }
  return l;
}

// f = s^r, s_0 = 1: s f' = r s' f, so n f_n = sum_{k=1..n} (r k - (n-k)) s_k f_{n-k}
RationalSeries series_rpow(const RationalSeries& s, const Rational& r) {
  RationalSeries f(s.order());
  f[0] = 1;
  for (std::size_t n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      Rational factor = r * static_cast<long>(k) - static_cast<long>(n - k);
      acc += factor * s[k] * f[n - k];
    }
    f[n] = acc / static_cast<long>(n);
  }
  return f;
}

}  // namespace

RationalSeries series_map(SeriesFn fn, const RationalSeries& s, const Rational& r) {
  switch (fn) {
    case SeriesFn::Exp:
      if (s[0] != 0)
        throw std::domain_error("exp requires constant term 0, got " + s[0].get_str());
      return series_exp(s);
    case SeriesFn::Log:
      if (s[0] != 1)
        throw std::domain_error("log requires constant term 1, got " + s[0].get_str());
      return series_log(s);
    case SeriesFn::Pow:
      if (s[0] != 1)
        throw std::domain_error("pow requires constant term 1, got " + s[0].get_str());
      return series_rpow(s, r);
  }
  throw std::invalid_argument("unknown series function");
}

}  // namespace crgstir
