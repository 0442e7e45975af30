#include "qn/scalars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qn {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& a) {
  if (a.empty()) return;
  mpz_class g = zcontent(a);
  if (a.back() < 0) g = -g;
  if (g != 1)
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// pseudo remainder of a by b, both nonzero
ZPoly prem(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    size_t shift = a.size() - 1 - db;
    mpz_class la = a.back();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    mpz_class fa = lb / g, fb = la / g;
    for (auto& x : a) x *= fa;
    for (size_t k = 0; k <= db; ++k) a[k + shift] -= fb * b[k];
    ztrim(a);
    make_primitive(a);
  }
  return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    if (b.size() == 1) return ZPoly{1};
    ZPoly r = prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

// a = q*b + r over Q
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  qtrim(a);
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    mpq_class f = a.back() / b.back();
    q[shift] = f;
    for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    a.pop_back();
    qtrim(a);
  }
  qtrim(q);
  r = std::move(a);
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return uint64_t((unsigned __int128)a * b % p);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.push_back(mpz_class(c));
}
LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int e) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = e;
    p.c_.push_back(c);
  }
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k) {
    c_.erase(c_.begin(), c_.begin() + k);
    lo_ += int(k);
  }
  if (c_.empty()) lo_ = 0;
}

mpz_class LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < lo_ || e > high()) return 0;
  return c_[e - lo_];
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::terms() const {
  std::vector<std::pair<int, mpz_class>> t;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) t.emplace_back(lo_ + int(k), c_[k]);
  return t;
}

bool LaurentPoly::is_unit() const { return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1); }

size_t LaurentPoly::hash() const {
  size_t h = std::hash<int>()(lo_) + 0x9e3779b97f4a7c15ULL;
  for (auto& x : c_) h = h * 31 + mpz_get_si(x.get_mpz_t()) + mpz_size(x.get_mpz_t());
  return h;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int nlo = std::min(lo_, o.lo_), nhi = std::max(high(), o.high());
  if (nlo < lo_) c_.insert(c_.begin(), size_t(lo_ - nlo), mpz_class(0));
  lo_ = nlo;
  c_.resize(size_t(nhi - nlo + 1));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[size_t(o.lo_ - lo_) + k] += o.c_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (lo_ != o.lo_) return lo_ < o.lo_;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return c_[k] < o.c_[k];
  return false;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -high();
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

mpz_class LaurentPoly::content() const { return zcontent(c_); }

mpq_class LaurentPoly::eval(const mpq_class& x) const {
  if (c_.empty()) return 0;
  if (x == 0 && lo_ < 0) throw PoleAtEpsilon("evaluation of v^-k at 0");
  mpq_class acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + mpq_class(c_[k]);
  mpq_class xp = 1;
  mpq_class base = lo_ >= 0 ? x : 1 / x;
  for (int k = 0; k < std::abs(lo_); ++k) xp *= base;
  acc *= xp;
  acc.canonicalize();
  return acc;
}

uint64_t LaurentPoly::eval_mod(uint64_t x, uint64_t p) const {
  if (c_.empty()) return 0;
  uint64_t acc = 0;
  for (size_t k = c_.size(); k-- > 0;) {
    uint64_t ck = mpz_fdiv_ui(c_[k].get_mpz_t(), p);
    acc = (mulmod(acc, x, p) + ck) % p;
  }
  uint64_t xl = lo_ >= 0 ? powmod(x, uint64_t(lo_), p) : powmod(powmod(x, p - 2, p), uint64_t(-lo_), p);
  return mulmod(acc, xl, p);
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.c_.empty()) throw NonExactDivision("division by zero polynomial");
  if (a.c_.empty()) return {};
  ZPoly r = a.c_;
  const ZPoly& d = b.c_;
  if (r.size() < d.size()) throw NonExactDivision("degree of divisor exceeds dividend");
  ZPoly q(r.size() - d.size() + 1);
  for (size_t s = q.size(); s-- > 0;) {
    mpz_class& top = r[s + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
      throw NonExactDivision("non-integral quotient coefficient");
    mpz_class f = top / d.back();
    q[s] = f;
    for (size_t k = 0; k < d.size(); ++k) r[s + k] -= f * d[k];
  }
  for (auto& x : r)
    if (x != 0) throw NonExactDivision("nonzero remainder");
  LaurentPoly res;
  res.lo_ = a.lo_ - b.lo_;
  res.c_ = std::move(q);
  res.trim();
  return res;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly g;
  if (a.c_.empty() && b.c_.empty()) return g;
  if (a.c_.empty()) g.c_ = b.c_;
  else if (b.c_.empty()) g.c_ = a.c_;
  else if (a.c_.size() == 1 || b.c_.size() == 1) g.c_ = {1};
  else g.c_ = zgcd(a.c_, b.c_);
  make_primitive(g.c_);
  return g;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    int e = lo_ + int(k);
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
  if (d.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  normalize();
}

RatFunc RatFunc::rational(const mpq_class& q) {
  return RatFunc(LaurentPoly(q.get_num()), LaurentPoly(q.get_den()));
}

void RatFunc::normalize_shift() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  int s = den_.lo_;
  if (s) {
    den_.lo_ = 0;
    num_.lo_ -= s;
  }
  if (den_.c_.size() == 1) {
    // constant denominator
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.c_[0].get_mpz_t());
    if (den_.c_[0] < 0) g = -g;
    if (g != 1) {
      for (auto& x : num_.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.c_[0].get_mpz_t(), den_.c_[0].get_mpz_t(), g.get_mpz_t());
    }
    return;
  }
  mpz_class g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.content().get_mpz_t());
  if (den_.c_.back() < 0) g = -g;
  if (g != 1) {
    for (auto& x : num_.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (auto& x : den_.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  int s = den_.lo_;
  den_.lo_ = 0;
  num_.lo_ -= s;
  if (den_.c_.size() > 1) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (g.c_.size() > 1) {
      num_ = LaurentPoly::divexact(num_, g);
      den_ = LaurentPoly::divexact(den_, g);
    }
  }
  normalize_shift();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one()) return *this;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (d.dense().size() > 1) {
    LaurentPoly g = LaurentPoly::gcd(a, d);
    if (g.dense().size() > 1) {
      a = LaurentPoly::divexact(a, g);
      d = LaurentPoly::divexact(d, g);
    }
  }
  if (b.dense().size() > 1) {
    LaurentPoly g = LaurentPoly::gcd(c, b);
    if (g.dense().size() > 1) {
      c = LaurentPoly::divexact(c, g);
      b = LaurentPoly::divexact(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize_shift();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFunc(num_.pow(unsigned(k)), den_.pow(unsigned(k)));
}

mpq_class RatFunc::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (d == 0) throw PoleAtEpsilon("denominator vanishes at " + x.get_str());
  mpq_class r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

uint64_t RatFunc::eval_mod(uint64_t x, uint64_t p) const {
  uint64_t d = den_.eval_mod(x, p);
  if (d == 0) throw PoleAtEpsilon("denominator vanishes mod p");
  return mulmod(num_.eval_mod(x, p), powmod(d, p - 2, p), p);
}

LaurentPoly RatFunc::as_laurent() const {
  if (!den_.is_one()) throw NonExactDivision("coefficient " + str() + " is not a Laurent polynomial");
  return num_;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  auto wrap = [](const LaurentPoly& p) {
    std::string s = p.str();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------- quantum numbers

LaurentPoly quantum_int(long m) {
  if (m < 0) return -quantum_int(-m);
  LaurentPoly r;
  for (long k = 0; k < m; ++k) r += LaurentPoly::v(int(m - 1 - 2 * k));
  return r;
}

LaurentPoly quantum_factorial(long m) {
  if (m < 0) throw std::invalid_argument("quantum_factorial of negative integer");
  LaurentPoly r(1);
  for (long k = 2; k <= m; ++k) r *= quantum_int(k);
  return r;
}

LaurentPoly gauss_binom(long c, long m) {
  if (m < 0) throw std::invalid_argument("gauss_binom with negative lower index");
  LaurentPoly num(1);
  for (long s = 1; s <= m; ++s) num *= quantum_int(c - s + 1);
  return LaurentPoly::divexact(num, quantum_factorial(m));
}

// ---------------------------------------------------------------- cyclotomic

int euler_phi(int l) {
  int r = l, m = l;
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  if (m > 1) r -= r / m;
  return r;
}

namespace {
LaurentPoly compute_cyclotomic(int l) {
  LaurentPoly p = LaurentPoly::v(l) - LaurentPoly(1);
  for (int d = 1; d < l; ++d)
    if (l % d == 0) p = LaurentPoly::divexact(p, compute_cyclotomic(d));
  return p;
}
}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(int l) {
  static std::mutex mu;
  static std::map<int, ZPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  LaurentPoly p = compute_cyclotomic(l);
  ZPoly z(size_t(p.high() + 1));
  for (auto& [e, c] : p.terms()) z[size_t(e)] = c;
  return cache[l] = z;
}

CycloNum::CycloNum(int l) : l_(l), c_(size_t(euler_phi(l)), 0) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("root of unity order must be odd and >= 3");
}

CycloNum::CycloNum(int l, const mpq_class& c) : CycloNum(l) { c_[0] = c; }

CycloNum CycloNum::from_coeffs(int l, std::vector<mpq_class> full) {
  CycloNum r(l);
  if (full.size() < r.c_.size()) full.resize(r.c_.size(), 0);
  r.reduce_from(std::move(full));
  return r;
}

CycloNum CycloNum::eps_pow(int l, long k) {
  CycloNum r(l);
  std::vector<mpq_class> full(size_t(l), 0);
  full[size_t(((k % l) + l) % l)] = 1;
  r.reduce_from(std::move(full));
  return r;
}

void CycloNum::reduce_from(std::vector<mpq_class> full) {
  const ZPoly& phi = cyclotomic_poly(l_);
  const size_t d = phi.size() - 1;
  for (size_t k = full.size(); k-- > d;) {
    if (full[k] == 0) continue;
    mpq_class f = full[k];  // phi is monic
    for (size_t j = 0; j <= d; ++j) full[k - d + j] -= f * mpq_class(phi[j]);
  }
  full.resize(d, 0);
  c_ = std::move(full);
}

bool CycloNum::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloNum::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (l_ == 0) return *this = o;
  if (o.l_ == 0) return *this;
  if (o.l_ != l_) throw std::invalid_argument("CycloNum order mismatch");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (o.l_ != l_) throw std::invalid_argument("CycloNum order mismatch");
  std::vector<mpq_class> full(c_.size() * 2, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0)
      for (size_t j = 0; j < o.c_.size(); ++j) full[i + j] += c_[i] * o.c_[j];
  reduce_from(std::move(full));
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw PoleAtEpsilon("inverse of zero in Q(eps)");
  // extended Euclid: s*a + t*phi = g, g constant
  const ZPoly& phiz = cyclotomic_poly(l_);
  QPoly r0(phiz.begin(), phiz.end()), r1 = c_;
  qtrim(r1);
  QPoly s0{}, s1{1};
  while (r1.size() > 1) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly qs = qmul(q, s1), ns = s0;
    ns.resize(std::max(ns.size(), qs.size()), 0);
    for (size_t k = 0; k < qs.size(); ++k) ns[k] -= qs[k];
    qtrim(ns);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  CycloNum res(l_);
  mpq_class g = r1[0];
  std::vector<mpq_class> full(std::max<size_t>(s1.size(), 1), 0);
  for (size_t k = 0; k < s1.size(); ++k) full[k] = s1[k] / g;
  if (full.size() < res.c_.size()) full.resize(res.c_.size(), 0);
  res.reduce_from(std::move(full));
  return res;
}

std::string CycloNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    mpq_class a = abs(c_[k]);
    if (first) {
      if (c_[k] < 0) os << "-";
    } else {
      os << (c_[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "e";
      if (k != 1) os << "^" << k;
    }
  }
  return first ? "0" : os.str();
}

CycloNum specialize(const LaurentPoly& p, int l) {
  std::vector<mpq_class> full(size_t(l), 0);
  for (auto& [e, c] : p.terms()) full[size_t(((e % l) + l) % l)] += mpq_class(c);
  return CycloNum::from_coeffs(l, std::move(full));
}

CycloNum specialize(const RatFunc& f, int l) {
  CycloNum d = specialize(f.den(), l);
  if (d.is_zero()) throw PoleAtEpsilon("denominator " + f.den().str() + " vanishes at a primitive " +
                                       std::to_string(l) + "-th root of unity");
  return specialize(f.num(), l) * d.inverse();
}

}  // namespace qn
