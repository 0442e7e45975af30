#pragma once

#include <memory>
#include <random>

#include "qn/expr.hpp"

namespace qntest {

// random trees restricted to shapes the parser can produce (no one-kid sums
// unless negated, no one-kid products, nonnegative literals)
struct AstGen {
  std::mt19937 rng;
  int n;
  explicit AstGen(unsigned seed, int n_) : rng(seed), n(n_) {}
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  qn::ExprPtr leaf() {
    auto e = std::make_shared<qn::Expr>();
    switch (pick(0, 5)) {
      case 0: e->op = qn::Expr::Op::Int; e->value = pick(0, 20); break;
      case 1: e->op = qn::Expr::Op::V; break;
      case 2: {
        e->op = qn::Expr::Op::Gen;
        e->kind = qn::GenKind(pick(0, 5));
        if (e->kind == qn::GenKind::K || e->kind == qn::GenKind::Kb) {
          e->idx = {pick(1, n)};
        } else if (pick(0, 1)) {
          e->idx = {pick(1, n - 1)};
        } else {
          int i = pick(1, n), j = pick(1, n - 1);
          if (j >= i) ++j;
          if ((e->kind == qn::GenKind::F || e->kind == qn::GenKind::Fb) && i > j) std::swap(i, j);
          e->idx = {i, j};
        }
        break;
      }
      case 3: {
        e->op = qn::Expr::Op::KBracket;
        int i = pick(1, n), c = pick(-3, 3), t = pick(0, 3);
        if (pick(0, 1)) {
          int j = pick(1, n - 1);
          if (j >= i) ++j;
          e->idx = {i, j, c, t};
        } else {
          e->idx = {i, c, t};
        }
        break;
      }
      default: {
        e->op = qn::Expr::Op::Func;
        int w = pick(0, 2);
        e->name = w == 0 ? "qint" : w == 1 ? "qfact" : "qbinom";
        if (w == 0) e->idx = {pick(-5, 5)};
        if (w == 1) e->idx = {pick(0, 5)};
        if (w == 2) e->idx = {pick(-5, 5), pick(0, 4)};
      }
    }
    return e;
  }

  qn::ExprPtr tree(int depth) {
    if (depth == 0 || pick(0, 3) == 0) return leaf();
    auto e = std::make_shared<qn::Expr>();
    switch (pick(0, 5)) {
      case 0: {
        e->op = qn::Expr::Op::Sum;
        int k = pick(1, 3);
        for (int a = 0; a < k; ++a) {
          e->kids.push_back(tree(depth - 1));
          e->flags.push_back(pick(0, 1));
        }
        if (k == 1) e->flags[0] = true;
        break;
      }
      case 1: {
        e->op = qn::Expr::Op::Product;
        int k = pick(2, 3);
        for (int a = 0; a < k; ++a) {
          e->kids.push_back(tree(depth - 1));
          e->flags.push_back(a > 0 && pick(0, 3) == 0);
        }
        break;
      }
      case 2:
        e->op = qn::Expr::Op::Pow;
        e->value = pick(-3, 4);
        e->kids.push_back(tree(depth - 1));
        break;
      case 3:
        e->op = qn::Expr::Op::DivPow;
        e->value = pick(0, 4);
        e->kids.push_back(tree(depth - 1));
        break;
      case 4:
        e->op = qn::Expr::Op::Braid;
        e->flag = pick(0, 1);
        e->idx = {pick(1, n - 1)};
        e->kids.push_back(tree(depth - 1));
        break;
      default:
        e->op = qn::Expr::Op::Omega;
        e->kids.push_back(tree(depth - 1));
    }
    return e;
  }
};

}  // namespace qntest
