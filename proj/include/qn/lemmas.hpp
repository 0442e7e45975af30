#pragma once

#include <vector>

#include "qn/identities.hpp"

namespace qn {

// Every instance, for rank n, of the printed root-vector commutation formulas:
// the K-bar lemma, the even/odd positive and negative-vs-positive families with
// their interchanged versions, the generator-vs-root displays from the proofs,
// and the recursive root-vector formulas. With omega set, each instance is
// also pushed through Omega.
std::vector<Display> lemma_displays(int n, bool omega = true);

SuiteReport lemma_suite(Engine& eng);
// A seeded random fraction of the displays (in the form the lemma suite
// accepts) rechecked by oracle_equal at three specializations of v.
SuiteReport lemma_oracle_sample(Engine& eng, double fraction = 0.1, unsigned seed = 11);

}  // namespace qn
