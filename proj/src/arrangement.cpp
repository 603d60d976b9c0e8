#include "crgstir/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace crgstir {

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly exact_quotient(const IntPoly& num, const IntPoly& den) {
  // den is monic
  std::vector<BigInt> r = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  if (r.size() < d.size()) return IntPoly();
  std::vector<BigInt> q(r.size() - dd, 0);
  for (std::size_t t = r.size(); t-- > dd;) {
    const BigInt c = r[t];
    if (c == 0) continue;
    q[t - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) r[t - dd + i] -= c * d[i];
  }
  return IntPoly(std::move(q));
}

const RPoly& modulus(int m) {
  static std::mutex mu;
  static std::map<int, RPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    RPoly p;
    const IntPoly phi = cyclotomic_polynomial(m);
    for (const auto& c : phi.coeffs()) p.emplace_back(c);
    it = cache.emplace(m, std::move(p)).first;
  }
  return it->second;
}

// Reduce a polynomial of any degree modulo monic mod, padding to deg mod.
RPoly reduce(RPoly a, const RPoly& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t t = a.size(); t-- > d;) {
    const Rational c = a[t];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) a[t - d + i] -= c * mod[i];
  }
  a.resize(d, Rational(0));
  return a;
}

RPoly mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RPoly sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r
void divmod(RPoly a, RPoly b, RPoly& q, RPoly& r) {
  trim(a);
  trim(b);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
  trim(q);
}

std::string rational_string(const Rational& r) { return r.get_str(); }

}  // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic polynomial needs m >= 1");
  IntPoly num = IntPoly::monomial(1, static_cast<std::size_t>(m)) - IntPoly(1);
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = exact_quotient(num, cyclotomic_polynomial(d));
  return num;
}

// ---------------------------------------------------------------------------
// CycloNumber

CycloNumber::CycloNumber(int m, const Rational& value) : m_(m) {
  c_ = reduce(RPoly{value}, modulus(m));
}

CycloNumber CycloNumber::zeta_power(int m, long e) {
  e %= m;
  if (e < 0) e += m;
  CycloNumber z;
  z.m_ = m;
  RPoly x(static_cast<std::size_t>(e) + 1, Rational(0));
  x.back() = 1;
  z.c_ = reduce(std::move(x), modulus(m));
  return z;
}

bool CycloNumber::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  CycloNumber r;
  r.m_ = a.m_;
  r.c_ = reduce(mul(a.c_, b.c_), modulus(a.m_));
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta)");
  // extended Euclid: track s with s*a = r mod Phi
  RPoly r0 = modulus(m_), r1 = c_;
  RPoly s0, s1{Rational(1)};
  trim(r1);
  while (r1.size() > 1) {
    RPoly q, r;
    divmod(r0, r1, q, r);
    RPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant
  const Rational c = r1.front();
  for (auto& x : s1) x /= c;
  CycloNumber out;
  out.m_ = m_;
  out.c_ = reduce(std::move(s1), modulus(m_));
  return out;
}

bool operator<(const CycloNumber& a, const CycloNumber& b) {
  if (a.m_ != b.m_) return a.m_ < b.m_;
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string CycloNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    std::string mag = rational_string(abs(c));
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (i == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag;
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string LinearForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[i].to_string() + ")X" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(int m, int n) : m_(m), n_(n) {}

void Subspace::add_row(CycloVector row) {
  // reduce against existing pivots
  for (const auto& r : rows_) {
    std::size_t piv = 0;
    while (r[piv].is_zero()) ++piv;
    if (!row[piv].is_zero()) {
      const CycloNumber f = row[piv];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * r[j];
    }
  }
  std::size_t piv = 0;
  while (piv < row.size() && row[piv].is_zero()) ++piv;
  if (piv == row.size()) return;
  const CycloNumber inv = row[piv].inverse();
  for (auto& x : row) x = x * inv;
  for (auto& r : rows_) {
    if (r[piv].is_zero()) continue;
    const CycloNumber f = r[piv];
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * row[j];
  }
  auto pivot_of = [](const CycloVector& r) {
    std::size_t p = 0;
    while (r[p].is_zero()) ++p;
    return p;
  };
  auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const CycloVector& r) { return pivot_of(r) > piv; });
  rows_.insert(pos, std::move(row));
}

Subspace Subspace::intersect(const LinearForm& form) const {
  if (form.coeffs.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("form has wrong dimension");
  Subspace out = *this;
  out.add_row(form.coeffs);
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  Subspace out = *this;
  for (const auto& r : other.rows_) out.add_row(r);
  return out;
}

bool Subspace::below(const Subspace& other) const { return other.intersect(*this) == other; }

std::vector<CycloVector> Subspace::basis() const {
  std::vector<std::size_t> pivots;
  for (const auto& r : rows_) {
    std::size_t p = 0;
    while (r[p].is_zero()) ++p;
    pivots.push_back(p);
  }
  std::vector<CycloVector> out;
  for (std::size_t free = 0; free < static_cast<std::size_t>(n_); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    CycloVector v(static_cast<std::size_t>(n_), CycloNumber(m_, 0));
    v[free] = CycloNumber(m_, 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots[i]] = -rows_[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<std::string>> Subspace::row_strings() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows_) {
    std::vector<std::string> s;
    for (const auto& x : r) s.push_back(x.to_string());
    out.push_back(std::move(s));
  }
  return out;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.codim() != b.codim()) return a.codim() < b.codim();
  return a.rows_ < b.rows_;
}

// ---------------------------------------------------------------------------
// Arrangement

std::vector<LinearForm> reflection_hyperplanes(int m, int p, int n) {
  if (m < 1 || p < 1 || m % p != 0) throw std::invalid_argument("reflection hyperplanes need p | m");
  if (n < 1) throw std::invalid_argument("reflection hyperplanes need n >= 1");
  const CycloNumber zero(m, 0);
  std::vector<LinearForm> out;
  if (p < m) {
    for (int i = 0; i < n; ++i) {
      LinearForm f{CycloVector(static_cast<std::size_t>(n), zero)};
      f.coeffs[static_cast<std::size_t>(i)] = CycloNumber(m, 1);
      out.push_back(std::move(f));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int c = 0; c < m; ++c) {
        LinearForm f{CycloVector(static_cast<std::size_t>(n), zero)};
        f.coeffs[static_cast<std::size_t>(i)] = CycloNumber::zeta_power(m, c);
        f.coeffs[static_cast<std::size_t>(j)] = CycloNumber(m, -1);
        out.push_back(std::move(f));
      }
  return out;
}

WhitneyNumbers IntersectionLattice::whitney() const {
  WhitneyNumbers w;
  w.second.assign(static_cast<std::size_t>(n) + 1, 0);
  w.first.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto r = static_cast<std::size_t>(elements[i].codim());
    w.second[r] += 1;
    w.first[r] += mobius[i];
  }
  return w;
}

IntersectionLattice intersection_lattice(const std::vector<LinearForm>& hyperplanes, int m, int n, std::size_t cap) {
  std::set<Subspace> seen;
  std::vector<Subspace> work{Subspace(m, n)};
  seen.insert(work.front());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& h : hyperplanes) {
      Subspace next = work[i].intersect(h);
      if (next == work[i] || seen.count(next)) continue;
      if (seen.size() >= cap)
        throw CapExceeded(cap, "intersection lattice exceeds " + std::to_string(cap) + " elements");
      seen.insert(next);
      work.push_back(std::move(next));
    }
  }
  IntersectionLattice L;
  L.m = m;
  L.n = n;
  L.elements.assign(seen.begin(), seen.end());
  const std::size_t size = L.elements.size();
  L.leq.assign(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      L.leq[i][j] = i == j || (L.elements[i].codim() < L.elements[j].codim() && L.elements[i].below(L.elements[j]));
  L.mobius.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (i == 0) {
      L.mobius[i] = 1;
      continue;
    }
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (L.leq[j][i]) sum += L.mobius[j];
    L.mobius[i] = -sum;
  }
  return L;
}

Subspace partition_subspace(const ColoredPartition& sigma, bool barred) {
  const int m = sigma.m();
  const int n = sigma.n();
  const CycloNumber zero(m, 0);
  Subspace s(m, n);
  auto pair_form = [&](ColoredElement a, ColoredElement b) {
    // zeta^d X_i - zeta^c X_j for a = i^c, b = j^d
    LinearForm f{CycloVector(static_cast<std::size_t>(n), zero)};
    f.coeffs[static_cast<std::size_t>(a.base - 1)] = CycloNumber::zeta_power(m, b.color);
    f.coeffs[static_cast<std::size_t>(b.base - 1)] = -CycloNumber::zeta_power(m, a.color);
    return f;
  };
  if (!barred) {
    for (int b : sigma.zero_bases()) {
      LinearForm f{CycloVector(static_cast<std::size_t>(n), zero)};
      f.coeffs[static_cast<std::size_t>(b - 1)] = CycloNumber(m, 1);
      s = s.intersect(f);
    }
  } else {
    const auto& zb = sigma.zero_bases();
    for (std::size_t x = 0; x < zb.size(); ++x)
      for (std::size_t y = x + 1; y < zb.size(); ++y)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d) s = s.intersect(pair_form({zb[x], c}, {zb[y], d}));
  }
  for (const auto& block : sigma.nonzero_blocks())
    for (std::size_t x = 0; x + 1 < block.size(); ++x) s = s.intersect(pair_form(block[x], block[x + 1]));
  return s;
}

IsoCertificate iso_check(const IntersectionLattice& geom, int m, int p, int n) {
  IsoCertificate cert;
  const bool barred = p == m;
  auto comb = PartitionLattice::build(m, n, barred);
  if (comb.size() != geom.elements.size()) {
    cert.counterexample = "combinatorial lattice has " + std::to_string(comb.size()) +
                          " elements, geometric lattice has " + std::to_string(geom.elements.size());
    return cert;
  }
  std::vector<std::size_t> image(comb.size());
  std::vector<bool> hit(geom.elements.size(), false);
  for (std::size_t i = 0; i < comb.size(); ++i) {
    const auto& sigma = comb.element(i);
    Subspace s = partition_subspace(sigma, barred && m >= 2);
    cert.map.emplace_back(sigma.to_string(), s);
    auto it = std::lower_bound(geom.elements.begin(), geom.elements.end(), s);
    if (it == geom.elements.end() || !(*it == s)) {
      cert.counterexample = sigma.to_string() + " maps outside the intersection lattice";
      return cert;
    }
    const auto j = static_cast<std::size_t>(it - geom.elements.begin());
    if (hit[j]) {
      cert.counterexample = sigma.to_string() + " shares its image with another partition";
      return cert;
    }
    hit[j] = true;
    image[i] = j;
    if (s.codim() != sigma.rank()) {
      cert.counterexample = sigma.to_string() + " has rank " + std::to_string(sigma.rank()) + " but image codim " +
                            std::to_string(s.codim());
      return cert;
    }
  }
  for (std::size_t i = 0; i < comb.size(); ++i)
    for (std::size_t j = 0; j < comb.size(); ++j)
      if (comb.leq(i, j) != geom.leq[image[i]][image[j]]) {
        cert.counterexample = "order differs on " + comb.element(i).to_string() + " vs " + comb.element(j).to_string();
        return cert;
      }
  cert.ok = true;
  return cert;
}

bool pseudoreflection_fixes(const LinearForm& form, int m, int p) {
  const std::size_t n = form.coeffs.size();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (!form.coeffs[i].is_zero()) support.push_back(i);
  // rho as a function on vectors
  std::function<CycloVector(const CycloVector&)> rho;
  if (support.size() == 1) {
    if (p >= m) return false;
    const std::size_t i = support[0];
    const CycloNumber z = CycloNumber::zeta_power(m, p);
    rho = [=](CycloVector v) {
      v[i] = z * v[i];
      return v;
    };
  } else if (support.size() == 2) {
    // normalize to zeta^c X_i - X_j
    const std::size_t i = support[0], j = support[1];
    const CycloNumber ratio = -(form.coeffs[i] * form.coeffs[j].inverse());  // zeta^c
    const CycloNumber back = ratio.inverse();
    rho = [=](CycloVector v) {
      CycloVector w = v;
      w[j] = ratio * v[i];
      w[i] = back * v[j];
      return w;
    };
  } else {
    return false;
  }
  Subspace h = Subspace(m, static_cast<int>(n)).intersect(form);
  for (const auto& v : h.basis())
    if (rho(v) != v) return false;
  // not the identity: some coordinate vector moves
  for (std::size_t i = 0; i < n; ++i) {
    CycloVector e(n, CycloNumber(m, 0));
    e[i] = CycloNumber(m, 1);
    if (rho(e) != e) return true;
  }
  return false;
}

}  // namespace crgstir
