#include <random>

#include "doctest.h"
#include "qn/integral.hpp"
#include "support.hpp"

using namespace qn;

namespace {

// [K_i; c over t] from the product formula, as text for the evaluator
std::string kbracket_text(int i, int c, int t) {
  if (t == 0) return "1";
  std::string s;
  for (int k = 1; k <= t; ++k) {
    std::string e = std::to_string(c - k + 1), me = std::to_string(-(c - k + 1)), ks = std::to_string(k);
    s += "(K[" + std::to_string(i) + "]*v^" + e + " - K[" + std::to_string(i) + "]^-1*v^" + me + ")/(v^" + ks +
         " - v^-" + ks + ")";
    if (k < t) s += "*";
  }
  return s;
}

}  // namespace

TEST_SUITE("integral") {
  TEST_CASE("divided powers") {
    auto& S = session(3);
    const Alphabet& A = S.eng.alpha();
    CHECK(divided_power(S.eng, E(A, 1, 2), 0) == Element(RatFunc(1)));
    CHECK(S.eng.multiply(divided_power(S.eng, E(A, 1, 2), 2), divided_power(S.eng, E(A, 1, 2), 3)) ==
          divided_power(S.eng, E(A, 1, 2), 5) * RatFunc(gauss_binom(5, 2)));
    CHECK(divided_power(S.eng, E(A, 1, 3), 2) ==
          S("E[1,3]*E[1,3]") * RatFunc(LaurentPoly(1), quantum_factorial(2)));
    CHECK(S.same("T(1,E[2]^(2))", "E[1,3]^(2)"));
    CHECK(S.same("E[1]^(2)*E[1]^(3)", "qbinom(5,2)*E[1]^(5)"));
  }

  TEST_CASE("K brackets against the product formula") {
    auto& S = session(2);
    CHECK(kbracket_expand(S.eng, 1, 3, 0) == Element(RatFunc(1)));
    CHECK(kbracket_expand(S.eng, 1, 0, 1) == S("(K[1] - K[1]^-1)/(v - v^-1)"));
    for (int c = -2; c <= 2; ++c)
      for (int t = 0; t <= 3; ++t) {
        CAPTURE(c);
        CAPTURE(t);
        Element k = kbracket_expand(S.eng, 2, c, t);
        CHECK(k == S(kbracket_text(2, c, t)));
        CHECK(integrality_check(S.eng, k).integral);
      }
    // [K_1 K_2^-1; 0 over 1] = (K1 K2^-1 - K1^-1 K2)/(v - v^-1)
    CHECK(kbracket_expand(S.eng, 1, 2, 0, 1) == S("(K[1]*K[2]^-1 - K[1]^-1*K[2])/(v - v^-1)"));
  }

  TEST_CASE("integrality certificates") {
    auto& S = session(2);
    CHECK(integrality_check(S.eng, S("E[1]^(2)*F[1]^(2)")).integral);
    auto bad = integrality_check(S.eng, S("E[1]/(v + v^-1)"));
    CHECK_FALSE(bad.integral);
    CHECK_FALSE(bad.offending.empty());
    auto kb = integrality_check(S.eng, S("Kb[1]^2"));
    REQUIRE(kb.integral);
    CHECK(S.same("Kb[1]^2", "v^-1*K[1]*KB[1;0,1] - (1 - v^-2)*KB[1;0,2]"));
    // the certificate is exactly that two-term expansion
    CHECK(kb.expansion.size() == 2);
    DMono a{{}, {}, {{1, 1, 0}, {0, 0, 0}}}, b{{}, {}, {{0, 2, 0}, {0, 0, 0}}};
    REQUIRE(kb.expansion.count(a));
    REQUIRE(kb.expansion.count(b));
    CHECK(kb.expansion.at(a) == RatFunc::v(-1));
    CHECK(kb.expansion.at(b) == RatFunc(LaurentPoly::v(-2) - LaurentPoly(1)));
  }

  TEST_CASE("divided basis round trip") {
    auto& S = session(2);
    auto basis = enumerate_divided_basis(2, 2);
    std::mt19937 rng(21);
    for (int k = 0; k < 30; ++k) {
      Element x;
      for (int t = 0; t < 3; ++t)
        x += from_divided(S.eng, basis[rng() % basis.size()]) * RatFunc(LaurentPoly::v(int(rng() % 5) - 2));
      Element back;
      for (auto& [m, c] : to_divided(S.eng, x)) back += from_divided(S.eng, m) * c;
      CHECK(back == x);
      CHECK(integrality_check(S.eng, x).integral);
    }
  }

  TEST_CASE("products of integral generators stay integral") {
    auto& S = session(3);
    for (const char* x : {"E[1]^(2)*F[1]^(3)", "F[2]^(2)*E[1,3]^(2)", "Eb[2]*E[1]^(2)*Fb[1]", "Kb[2]*KB[1;1,2]*E[2]",
                          "KB[1,2;0,2]*F[1,3]^(2)", "T(1,E[2]^(3))", "Tinv(2,F[1]^(2))"}) {
      CAPTURE(x);
      CHECK(integrality_check(S.eng, S(x)).integral);
    }
  }

  TEST_CASE("relation displays") {
    auto& S = session(3);
    CHECK(S.same("Eb[2]*E[1]^(2)", "v^2*E[1]^(2)*Eb[2] + v^2*Eb[1,3]*E[1]"));
    // E^(1) F^(1) is the plain commutator
    CHECK(S.same("E[1]^(1)*F[1]^(1) - F[1]^(1)*E[1]^(1)", "KB[1,2;0,1]"));
    auto r = qz_suite(session(2).eng, 2);
    CHECK(r.ok());
  }
}
