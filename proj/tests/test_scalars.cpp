#include <complex>
#include <map>

#include "doctest.h"
#include "qn/scalars.hpp"

using namespace qn;

namespace {

// naive sparse Laurent polynomials, the oracle for the dense implementation
using Sparse = std::map<int, long long>;

Sparse smul(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b) r[i + j] += x * y;
  for (auto it = r.begin(); it != r.end();) it = it->second ? std::next(it) : r.erase(it);
  return r;
}
Sparse sqint(int m) {  // v^(m-1) + v^(m-3) + ... + v^(1-m)
  Sparse r;
  for (int k = 0; k < m; ++k) r[m - 1 - 2 * k] += 1;
  return r;
}
Sparse as_sparse(const LaurentPoly& p) {
  Sparse r;
  for (auto& [e, c] : p.terms()) r[e] = c.get_si();
  return r;
}
std::complex<double> zeta(int l) { return std::polar(1.0, 2 * M_PI / l); }
std::complex<double> at(const Sparse& p, std::complex<double> z) {
  std::complex<double> s = 0;
  for (auto& [e, c] : p) s += double(c) * std::pow(z, e);
  return s;
}
std::complex<double> at(const CycloNum& c, std::complex<double> z) {
  std::complex<double> s = 0;
  for (size_t k = 0; k < c.coeffs().size(); ++k) s += c.coeffs()[k].get_d() * std::pow(z, int(k));
  return s;
}

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("quantum integers") {
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1) == LaurentPoly(1));
    CHECK(quantum_int(2) == LaurentPoly::v(1) + LaurentPoly::v(-1));
    for (int m = 1; m <= 9; ++m) {
      CHECK(as_sparse(quantum_int(m)) == sqint(m));
      CHECK(quantum_int(-m) == -quantum_int(m));
      CHECK(quantum_int(m).bar() == quantum_int(m));
    }
  }

  TEST_CASE("quantum factorials") {
    CHECK(quantum_factorial(0) == LaurentPoly(1));
    CHECK(quantum_factorial(2) == quantum_int(2));
    CHECK(as_sparse(quantum_factorial(3)) == smul(sqint(3), sqint(2)));
    Sparse f{{0, 1}};
    for (int m = 1; m <= 7; ++m) {
      f = smul(f, sqint(m));
      CHECK(as_sparse(quantum_factorial(m)) == f);
    }
  }

  TEST_CASE("gaussian binomials") {
    CHECK(gauss_binom(5, 0) == LaurentPoly(1));
    CHECK(gauss_binom(-3, 0) == LaurentPoly(1));
    CHECK(gauss_binom(2, 1) == quantum_int(2));
    // [4][3] = [4 over 2] [2][1] pins the quotient; the other frequently
    // quoted expansion v^4 + 2v^2 + 3 + 2v^-2 + v^-4 sums to 9 != C(4,2)
    Sparse g42{{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}};
    CHECK(smul(g42, smul(sqint(2), sqint(1))) == smul(sqint(4), sqint(3)));
    CHECK(as_sparse(gauss_binom(4, 2)) == g42);
    Sparse wrong{{4, 1}, {2, 2}, {0, 3}, {-2, 2}, {-4, 1}};
    CHECK(smul(wrong, smul(sqint(2), sqint(1))) != smul(sqint(4), sqint(3)));
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n)
        CHECK(gauss_binom(m + n, n) * quantum_factorial(m) * quantum_factorial(n) == quantum_factorial(m + n));
    // negative upper argument: [-1 over 2] = [-1][-2]/[2]! = [1][2]/[2] = 1
    CHECK(gauss_binom(-1, 2) == LaurentPoly(1));
  }

  TEST_CASE("exact division is enforced") {
    CHECK_THROWS_AS(LaurentPoly::divexact(quantum_int(3), quantum_int(2)), NonExactDivision);
    CHECK(LaurentPoly::divexact(quantum_int(4), quantum_int(2)) == LaurentPoly::v(2) + LaurentPoly::v(-2));
  }

  TEST_CASE("rational functions are canonical") {
    LaurentPoly v = LaurentPoly::v(1), one(1);
    RatFunc a(v * v - one, v - one);
    CHECK(a == RatFunc(v + one));
    CHECK(a.is_integral());
    RatFunc b(LaurentPoly(2) * v, LaurentPoly(4) * v * v);  // 1/(2v)
    CHECK(b == RatFunc::rational(mpq_class(1, 2)) * RatFunc::v(-1));
    CHECK_FALSE(RatFunc(one, v + one).is_integral());
    RatFunc c(v + one, v * v + one);
    CHECK(c.bar().bar() == c);
    CHECK((c * c.inverse()).is_one());
    CHECK(c - c == RatFunc());
    // a/b == c/d iff ad == bc: (v^2-1)/(v^3-v) == 1/v
    CHECK(RatFunc(v * v - one, v * v * v - v) == RatFunc::v(-1));
  }

  TEST_CASE("specialization at roots of unity") {
    CHECK(specialize(quantum_int(3), 3).is_zero());
    CHECK(specialize(quantum_int(2), 3) == CycloNum(3, mpq_class(-1)));
    CHECK(specialize(gauss_binom(4, 2), 3).is_zero());
    CHECK_THROWS(specialize(quantum_int(2), 4));
    // complex evaluation as the oracle, including a homomorphism spot check
    for (int l : {3, 5, 7}) {
      auto z = zeta(l);
      for (int m = -4; m <= 9; ++m) {
        Sparse p = m >= 0 ? sqint(m) : Sparse{};
        if (m < 0)
          for (auto& [e, c] : sqint(-m)) p[e] = -c;
        CHECK(std::abs(at(specialize(quantum_int(m), l), z) - at(p, z)) < 1e-9);
      }
      CycloNum x = specialize(quantum_int(4), l), y = specialize(quantum_int(5) + LaurentPoly::v(-3), l);
      CHECK(x * y == specialize(quantum_int(4) * (quantum_int(5) + LaurentPoly::v(-3)), l));
      CHECK(specialize(LaurentPoly::v(l), l).is_one());
    }
  }

  TEST_CASE("vanishing binomials at eps") {
    for (int l : {3, 5, 7})
      for (int m = 0; m < l; ++m)
        for (int n = 0; n < l; ++n) {
          bool vanishes = specialize(gauss_binom(m + n, n), l).is_zero();
          CHECK(vanishes == (m + n >= l));
        }
  }

  TEST_CASE("poles at eps are reported") {
    RatFunc f(LaurentPoly(1), quantum_int(3));
    CHECK_THROWS_AS(specialize(f, 3), PoleAtEpsilon);
    CHECK_NOTHROW(specialize(f, 5));
  }
}
