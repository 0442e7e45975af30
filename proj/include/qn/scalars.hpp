#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qn {

struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleAtEpsilon : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Z[v, v^-1]. Stored densely from the lowest exponent; both ends
// of the coefficient vector are nonzero, the zero polynomial is empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const mpz_class& c);
  static LaurentPoly monomial(const mpz_class& c, int e);
  static LaurentPoly v(int e = 1) { return monomial(1, e); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return lo_; }
  int high() const { return lo_ + int(c_.size()) - 1; }
  mpz_class coeff(int e) const;
  const std::vector<mpz_class>& dense() const { return c_; }
  std::vector<std::pair<int, mpz_class>> terms() const;  // ascending exponent

  bool is_unit() const;  // +-v^k
  bool is_one() const { return lo_ == 0 && c_.size() == 1 && c_[0] == 1; }
  size_t hash() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  bool operator<(const LaurentPoly& o) const;

  LaurentPoly shifted(int k) const;  // times v^k
  LaurentPoly bar() const;           // v -> v^-1
  LaurentPoly pow(unsigned k) const;
  mpz_class content() const;
  mpq_class eval(const mpq_class& x) const;
  uint64_t eval_mod(uint64_t x, uint64_t p) const;  // x must be invertible mod p

  // exact quotient a/b in Z[v,v^-1]; NonExactDivision otherwise
  static LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);
  // gcd of the polynomial parts over Q, primitive, positive leading coefficient, low()==0
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  std::string str() const;

 private:
  friend class RatFunc;
  int lo_ = 0;
  std::vector<mpz_class> c_;
  void trim();
};

// Element of Q(v): num/den, gcd removed, den has low()==0 and positive leading
// coefficient, and the integer content of num and den together is 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) { normalize_shift(); }  // NOLINT
  RatFunc(const LaurentPoly& n, const LaurentPoly& d);
  static RatFunc rational(const mpq_class& q);
  static RatFunc v(int e = 1) { return RatFunc(LaurentPoly::v(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integral() const { return den_.is_one(); }
  size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc bar() const;
  RatFunc inverse() const;
  RatFunc pow(int k) const;
  mpq_class eval(const mpq_class& x) const;  // throws PoleAtEpsilon on a pole
  uint64_t eval_mod(uint64_t x, uint64_t p) const;  // throws PoleAtEpsilon on a pole
  // exact Laurent polynomial, throws NonExactDivision if not integral
  LaurentPoly as_laurent() const;

  std::string str() const;

 private:
  LaurentPoly num_, den_;
  void normalize();
  void normalize_shift();
};

LaurentPoly quantum_int(long m);
LaurentPoly quantum_factorial(long m);
LaurentPoly gauss_binom(long c, long m);

// Q[x]/Phi_l(x), x standing for a primitive l-th root of unity, l odd >= 3.
class CycloNum {
 public:
  CycloNum() = default;
  explicit CycloNum(int l);
  CycloNum(int l, const mpq_class& c);
  static CycloNum eps_pow(int l, long k);
  // reduce an arbitrary coefficient vector (powers of x) modulo Phi_l
  static CycloNum from_coeffs(int l, std::vector<mpq_class> full);

  int l() const { return l_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.l_ == b.l_ && a.c_ == b.c_; }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }
  CycloNum inverse() const;  // throws PoleAtEpsilon on zero

  std::string str() const;  // polynomial in "e"

 private:
  int l_ = 0;
  std::vector<mpq_class> c_;
  void reduce_from(std::vector<mpq_class> full);
};

const std::vector<mpz_class>& cyclotomic_poly(int l);  // ascending coefficients
int euler_phi(int l);

CycloNum specialize(const LaurentPoly& p, int l);
CycloNum specialize(const RatFunc& f, int l);

}  // namespace qn
