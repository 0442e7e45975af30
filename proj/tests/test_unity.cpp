#include "doctest.h"
#include "qn/integral.hpp"
#include "qn/unity.hpp"
#include "support.hpp"

using namespace qn;

namespace {

ElementCyclo spec(Session& S, const std::string& x, int l) { return specialize_element(S.eng, S(x), l); }

}  // namespace

TEST_SUITE("unity") {
  TEST_CASE("specialization examples") {
    auto& S = session(2);
    ElementCyclo kb2 = spec(S, "Kb[1]^2", 3);
    CHECK_FALSE(kb2.is_zero());
    // (eps^2 - eps^-2) Kb_1^2 = K_1^2 - K_1^-2 inside U_eps
    CHECK(multiply(S.eng, spec(S, "v^2 - v^-2", 3), kb2) == spec(S, "K[1]^2 - K[1]^-2", 3));
    CHECK(spec(S, "qint(3)*E[1]", 3).is_zero());
    CHECK_FALSE(spec(S, "qint(3)*E[1]", 5).is_zero());
    ElementCyclo comm = spec(S, "E[1]*F[1] - F[1]*E[1]", 3);
    CHECK(comm == spec(S, "KB[1,2;0,1]", 3));
    CHECK(multiply(S.eng, spec(S, "v - v^-1", 3), comm) == spec(S, "K[1]*K[2]^-1 - K[1]^-1*K[2]", 3));
    CHECK_THROWS_AS(spec(S, "E[1]/qint(3)", 3), PoleAtEpsilon);
    CHECK_NOTHROW(spec(S, "E[1]/qint(3)", 5));
  }

  TEST_CASE("specialization is multiplicative") {
    auto& S = session(2);
    const char* xs[] = {"E[1]^(2)", "F[1]^(2)*Kb[2]", "Eb[1]*KB[1;0,2]", "K[2]^-1*F[1]", "E[1]*Fb[1] + v*Kb[1]"};
    for (int l : {3, 5})
      for (const char* a : xs)
        for (const char* b : xs) {
          CAPTURE(a);
          CAPTURE(b);
          CHECK(multiply(S.eng, spec(S, a, l), spec(S, b, l)) == specialize_element(S.eng, S.eng.multiply(S(a), S(b)), l));
        }
  }

  TEST_CASE("nilpotency and centrality at l = 3") {
    auto& S = session(2);
    CHECK(spec(S, "E[1]^3", 3).is_zero());
    CHECK(spec(S, "F[1]^3", 3).is_zero());
    CHECK(spec(S, "Eb[1]^2*E[1]", 3).is_zero());
    CHECK(spec(S, "-((v - v^-1)/(v + v^-1))*E[1]^3", 3).is_zero());
    CHECK_FALSE(spec(S, "E[1]^2", 3).is_zero());
    CHECK(spec(S, "K[1]^3*E[1] - E[1]*K[1]^3", 3).is_zero());
    CHECK(spec(S, "K[1]^3*Kb[2] - Kb[2]*K[1]^3", 3).is_zero());
    CHECK(spec(S, "K[1]^6", 3) == spec(S, "1", 3));
    CHECK_FALSE(spec(S, "K[1]^3", 3) == spec(S, "1", 3));
    // generically K_1^3 and E_1 do not commute
    CHECK_FALSE(S.same("K[1]^3*E[1]", "E[1]*K[1]^3"));
  }

  TEST_CASE("suites at n = 2") {
    auto& S = session(2);
    for (int l : {3, 5}) {
      CHECK(binomial_vanishing_suite(l).ok());
      CHECK(nilpotency_suite(S.eng, l).ok());
      CHECK(centrality_suite(S.eng, l).ok());
      CHECK(qu_presentation_suite(S.eng, l).ok());
      CHECK(specialization_hom_suite(S.eng, l, 20).ok());
    }
  }

  TEST_CASE("restricted rank census") {
    Census c = restricted_rank_census(2, 3);
    auto part = [&](const std::string& name) -> const CensusPart& {
      for (auto& p : c.parts)
        if (p.name == name) return p;
      FAIL("missing part " << name);
      return c.parts.front();
    };
    // plus part: exponent 0..2 on E_{1,2}, odd flag 0/1
    CHECK(part("plus").even + part("plus").odd == 6);
    CHECK(part("zero (restricted)").even + part("zero (restricted)").odd == 144);
    CHECK(part("zero (restricted)").agrees);
    CHECK_FALSE(c.flags.empty());
    Census one = restricted_rank_census(2, 1 + 2);
    CHECK(render(one) == render(c));
  }
}
