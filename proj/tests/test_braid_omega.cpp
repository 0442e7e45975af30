#include <random>

#include "doctest.h"
#include "qn/oracle.hpp"
#include "support.hpp"

using namespace qn;

TEST_SUITE("braid") {
  TEST_CASE("generator images") {
    auto& S = session(3);
    CHECK(S.same("T(1,E[1])", "-F[1]*K[1]*K[2]^-1"));
    CHECK(S.same("T(1,E[2])", "-E[1]*E[2] + v^-1*E[2]*E[1]"));
    CHECK(S.same("T(1,Kb[2])", "(v - v^-1)*Kb[2]*F[1]*E[1] - (v - v^-1)*F[1]*E[1]*Kb[2] + Kb[1]"));
    // E_{1,3} through the braid operator matches its bracket definition
    CHECK(S.same("T(1,E[2])", "E[1,3]"));
  }

  TEST_CASE("inverse pairs") {
    auto& S = session(3);
    for (const char* g : {"E[1]", "E[2]", "F[1]", "F[2]", "Eb[1]", "Eb[2]", "Fb[1]", "Fb[2]", "K[1]", "K[3]^-1",
                          "Kb[1]", "Kb[2]", "Kb[3]"})
      for (int i : {1, 2}) {
        std::string x(g), si = std::to_string(i);
        CAPTURE(x);
        CHECK(S.same("Tinv(" + si + ",T(" + si + "," + x + "))", x));
        CHECK(S.same("T(" + si + ",Tinv(" + si + "," + x + "))", x));
      }
  }

  TEST_CASE("braid relation on generators") {
    auto& S = session(3);
    for (const char* g : {"E[1]", "E[2]", "F[1]", "F[2]", "Eb[1]", "Eb[2]", "Fb[1]", "Fb[2]", "K[2]", "Kb[1]",
                          "Kb[3]"}) {
      std::string x(g);
      CAPTURE(x);
      CHECK(S.same("T(1,T(2,T(1," + x + ")))", "T(2,T(1,T(2," + x + ")))"));
    }
  }

  TEST_CASE("root vectors via the braid group") {
    auto& S = session(4);
    const Alphabet& A = S.eng.alpha();
    CHECK(S.br.root_vector_via_braid(1, 2, false) == S("E[1]"));
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        for (bool odd : {false, true}) {
          CAPTURE(i);
          CAPTURE(j);
          CHECK(S.br.root_vector_via_braid(i, j, odd) == Element::mono(Mono{{{A.root_slot(i, j, odd), 1}}}));
          CHECK(S.br.root_vector_via_braid(j, i, odd) == Element::mono(Mono{{{A.root_slot(j, i, odd), 1}}}));
        }
  }

  TEST_CASE("T_i is multiplicative") {
    auto& S = session(3);
    std::mt19937 rng(4);
    std::vector<std::string> g{"E[1]", "F[2]", "Eb[2]", "Fb[1]", "K[1]", "Kb[2]", "E[1,3]", "Eb[3,1]"};
    for (int k = 0; k < 20; ++k) {
      Element a = S(g[rng() % g.size()]), b = S(g[rng() % g.size()]);
      for (int i : {1, 2})
        CHECK(S.br.apply(i, false, S.eng.multiply(a, b)) ==
              S.eng.multiply(S.br.apply(i, false, a), S.br.apply(i, false, b)));
    }
  }
}

TEST_SUITE("omega") {
  TEST_CASE("examples") {
    auto& S = session(3);
    CHECK(S.same("Omega(E[1])", "F[1]"));
    CHECK(S.same("Omega(v*E[1]*E[2])", "v^-1*F[2]*F[1]"));
    CHECK(S.same("Omega(Eb[2])", "Fb[2]"));
    CHECK(S.same("Omega(K[1])", "K[1]^-1"));
    CHECK(S.same("Omega(Kb[2])", "Kb[2]"));
  }

  TEST_CASE("involution and anti-homomorphism on random elements") {
    auto& S = session(3);
    std::mt19937 rng(8);
    std::vector<std::string> g{"E[1]", "E[2]", "F[1]", "F[2]", "Eb[1]", "Fb[2]", "K[2]", "Kb[1]", "Kb[3]", "v", "2"};
    for (int k = 0; k < 40; ++k) {
      std::string a = g[rng() % g.size()] + "*" + g[rng() % g.size()];
      std::string b = g[rng() % g.size()] + " + " + g[rng() % g.size()] + "*" + g[rng() % g.size()];
      Element x = S(a), y = S(b);
      CHECK(S.br.omega(S.br.omega(x)) == x);
      CHECK(S.br.omega(x) == S.br.omega_via_generators(x));
      // Omega(xy) = Omega(y) Omega(x), odd elements pick up no sign
      CHECK(S.br.omega(S.eng.multiply(x, y)) == S.eng.multiply(S.br.omega(y), S.br.omega(x)));
    }
  }
}
