#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qn/algebra.hpp"
#include "qn/expr.hpp"
#include "qn/relations.hpp"

namespace qn {

struct InconclusiveBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression as an unnormalized combination of generator words: root letters
// are expanded by their bracket definitions, products are concatenations and
// Omega acts on generator letters directly. T_i is not supported.
LinWord raw_eval(const Engine& eng, const ExprPtr& e);
LinWord raw_eval(const Engine& eng, const std::string& text);

struct OracleStats {
  size_t rows = 0, columns = 0, rank = 0;
  int degree = 0;
  int letters = 0;
};

// Independent check of a = b: is a - b in the span of u*r*w (r a defining
// relation, u, w words, total degree <= degree_bound) after specializing v at
// `samples` random rationals? K letters are moved to the right by the weight
// rule, so the K relations are built in. Linear algebra is done modulo the
// prime 2^61-1. Alphabets grow from the letters of a - b and the degree from
// that of a - b up to degree_bound (<= 0: two more than the degree of a - b).
// Throws InconclusiveBudget if the bound is below the degree of a - b or the
// slice exceeds row_budget rows.
bool oracle_equal(const Engine& eng, const LinWord& a, const LinWord& b, int degree_bound = 0, int samples = 3,
                  uint64_t seed = 1, size_t row_budget = 400000, OracleStats* stats = nullptr);
bool oracle_equal(const Engine& eng, const std::string& lhs, const std::string& rhs, int degree_bound = 0,
                  int samples = 3, uint64_t seed = 1, size_t row_budget = 400000, OracleStats* stats = nullptr);

}  // namespace qn
