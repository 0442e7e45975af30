#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qn/algebra.hpp"
#include "qn/relations.hpp"

namespace qn {

class Braid;

// (1/[m]!) x^m for an even root letter
Element divided_power(Engine& eng, const Letter& even_root, int m);
// [K_i; c over t]
Element kbracket_expand(Engine& eng, int i, int c, int t);
// [K_i K_j^-1; c over t], the bracket the E_i^(m) F_i^(n) formula needs
Element kbracket_expand(Engine& eng, int i, int j, int c, int t);

// Monomial of the divided-power PBW basis: root parts carry exponents (the
// even ones read as divided powers), the Cartan part is
// prod_i K_i^tau_i [K_i;0 over t_i] Kb_i^xi_i.
struct DMono {
  Mono neg, pos;
  std::vector<std::array<int, 3>> cartan;  // (tau, t, xi) per i
  friend bool operator<(const DMono& a, const DMono& b) {
    if (a.neg != b.neg) return a.neg < b.neg;
    if (a.cartan != b.cartan) return a.cartan < b.cartan;
    return a.pos < b.pos;
  }
  friend bool operator==(const DMono& a, const DMono& b) {
    return a.neg == b.neg && a.cartan == b.cartan && a.pos == b.pos;
  }
};
using DExpansion = std::map<DMono, RatFunc>;

// coordinates of x in the divided-power basis (always exists over Q(v))
DExpansion to_divided(const Engine& eng, const Element& x);
// the basis element itself as an ordinary element
Element from_divided(Engine& eng, const DMono& m);
std::string render(const Alphabet& A, const DMono& m);

struct IntegralityCertificate {
  bool integral = true;
  DExpansion expansion;
  std::string offending;  // first non-integral monomial and coefficient
};
IntegralityCertificate integrality_check(const Engine& eng, const Element& x);

// divided-power basis monomials with every root exponent, every t_i <= cap
std::vector<DMono> enumerate_divided_basis(int n, int cap);

// QZ1..QZ5, divided powers against odd generators, E^(m) F^(n) and Kb^2
SuiteReport qz_suite(Engine& eng, int cap = 3);
// Z-closure of products of basis elements: all pairs of single-part basis
// elements with entries <= factor_cap (-1: cap), then seeded random pairs of
// full basis elements with entries <= cap
SuiteReport closure_suite(Engine& eng, int cap = 3, int random_pairs = 1500, unsigned seed = 7, int factor_cap = -1);
// T_i and T_i^-1 of the integral generators
SuiteReport t_stability_suite(Engine& eng, int cap = 3);
// V -> U on generators: braid-built divided powers equal the root-letter ones,
// the QZ suite holds for them and Omega carries QZ4 to identities
SuiteReport presentation_iso_suite(Engine& eng, int cap = 3);

}  // namespace qn
