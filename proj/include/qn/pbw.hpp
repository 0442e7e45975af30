#pragma once

#include <vector>

#include "qn/algebra.hpp"
#include "qn/relations.hpp"

namespace qn {

// Canonical monomials with every exponent <= cap (odd roots and Kb at most 1)
// and |exponent of K_i| <= kcap. Deterministic order:
// negative part, then Cartan part, then positive part, each odometer-style.
std::vector<Mono> enumerate_pbw(int n, int cap, int kcap = 0);

// words of length <= 4 over the generators normalize into canonical
// monomials with unchanged weight and parity; canonical monomials are fixed
// points; normalize is idempotent on seeded random words
SuiteReport pbw_suite(Engine& eng, int max_len = 4, int random_words = 1000, unsigned seed = 5);

}  // namespace qn
