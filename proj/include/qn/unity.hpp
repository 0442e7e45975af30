#pragma once

#include <map>
#include <string>

#include "qn/integral.hpp"

namespace qn {

// Element of U_eps = U_Z (x) Q(eps), eps a primitive l-th root of unity, in the
// divided-power basis. Coefficients live in Q[x]/Phi_l.
struct ElementCyclo {
  int l = 0;
  std::map<DMono, CycloNum> terms;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const ElementCyclo& a, const ElementCyclo& b) { return a.l == b.l && a.terms == b.terms; }
};

// image of x under v -> eps; throws PoleAtEpsilon if a divided-basis
// coefficient has a pole at eps
ElementCyclo specialize_element(const Engine& eng, const Element& x, int l);
// product in U_eps, computed on the canonical lifts (coefficients of degree < phi(l))
ElementCyclo multiply(Engine& eng, const ElementCyclo& a, const ElementCyclo& b);
Element lift(Engine& eng, const ElementCyclo& a);
std::string render(const Alphabet& A, const ElementCyclo& x);

// [m+n over n] vanishes at eps for 0 <= m,n < l, m+n >= l
SuiteReport binomial_vanishing_suite(int l);
// E_alpha^l = F_alpha^l = 0, E_alpha Eb_alpha^(l-1) = 0 (both readings)
SuiteReport nilpotency_suite(Engine& eng, int l);
// K_i^l central, K_i^(2l) = 1
SuiteReport centrality_suite(Engine& eng, int l);
// QU1..QU5
SuiteReport qu_presentation_suite(Engine& eng, int l);
// specialize(a b) = specialize(a) specialize(b) on seeded random integral pairs
SuiteReport specialization_hom_suite(Engine& eng, int l, int pairs = 100, unsigned seed = 3);

struct CensusPart {
  std::string name;
  long even = 0, odd = 0;              // enumerated, by parity
  long gen_count = 0, flag_count = 0;  // (non-odd choices | odd flag choices)
  std::string printed;                 // printed closed form, evaluated
  long printed_gen = 0, printed_flag = 0;
  bool agrees = true;
};
struct Census {
  int n = 0, l = 0;
  std::vector<CensusPart> parts;
  std::vector<std::string> flags;  // discrepancies between count and printed rank
};
// enumerates the restricted basis monomials of the plus, minus and zero parts
// and the U_eps basis, and compares with the printed ranks; never throws on a
// mismatch
Census restricted_rank_census(int n, int l);
std::string render(const Census& c);

}  // namespace qn
