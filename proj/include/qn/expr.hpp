#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qn/algebra.hpp"

namespace qn {

class Braid;

struct SyntaxError : std::runtime_error {
  size_t offset;
  std::vector<std::string> expected;
  SyntaxError(const std::string& msg, size_t off, std::vector<std::string> exp)
      : std::runtime_error(msg), offset(off), expected(std::move(exp)) {}
};

enum class GenKind { E, F, Eb, Fb, K, Kb };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Surface syntax tree. Parentheses are not nodes; render() puts back the ones
// the precedence rules need, so parse(render(e)) == e.
struct Expr {
  enum class Op {
    Int,       // value >= 0
    V,         // the indeterminate
    Gen,       // kind + 1 or 2 indices
    KBracket,  // KB[i;c,t], or KB[i,j;c,t] for the bracket of K_i K_j^-1
    Sum,       // children with sign flags
    Product,   // children with divide flags
    Pow,       // base ^ value (value may be negative)
    DivPow,    // base ^(value)
    Braid,     // T(i, x) / Tinv(i, x): idx[0] = i, flag = inverse
    Omega,
    Func,      // qint(a) qfact(a) qbinom(a,b)
  };
  Op op;
  long value = 0;
  GenKind kind = GenKind::E;
  std::vector<int> idx;
  std::string name;                 // Func name
  std::vector<ExprPtr> kids;
  std::vector<bool> flags;          // Sum: negated; Product: divided
  bool flag = false;

  friend bool operator==(const Expr& a, const Expr& b);
};

// n > 0 additionally range-checks generator indices
ExprPtr parse(const std::string& text, int n = 0);
std::string render(const ExprPtr& e);

// Evaluation context: owns nothing, borrows the engine and braid operators.
class Evaluator {
 public:
  Evaluator(Engine& eng, Braid& br) : eng_(eng), br_(br) {}
  Element eval(const ExprPtr& e);
  Element eval(const std::string& text) { return eval(parse(text, eng_.n())); }

 private:
  Engine& eng_;
  Braid& br_;
  RatFunc scalar_of(const Element& x, const char* what) const;
};

// Fill in "{...}" holes with integer arithmetic over named variables, e.g.
// fill("E[{i},{j+1}]", {{"i",1},{"j",2}}) == "E[1,3]".
std::string fill(const std::string& tmpl, const std::vector<std::pair<std::string, long>>& vars);

}  // namespace qn
