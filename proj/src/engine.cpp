#include <cstdlib>

#include "qn/algebra.hpp"

namespace qn {

namespace {

struct DerivationCycle : UnknownCase {
  using UnknownCase::UnknownCase;
};

long default_budget() {
  if (const char* s = std::getenv("QNKIT_MAX_STEPS")) {
    long b = std::atol(s);
    if (b > 0) return b;
  }
  return 1000000;
}

constexpr size_t kMemoLimit = 4000000;

Term term(const RatFunc& c, Word w) { return Term{c, std::move(w)}; }

// (v - v^-1)/(v + v^-1)
RatFunc odd_square_coeff() {
  return RatFunc(LaurentPoly::v(2) - LaurentPoly(1), LaurentPoly::v(2) + LaurentPoly(1));
}

}  // namespace

struct TopLevel {
  long& steps;
  int& depth;
  TopLevel(long& s, int& d) : steps(s), depth(d) {
    if (depth++ == 0) steps = 0;
  }
  ~TopLevel() { --depth; }
};

Engine::Engine(int n) : A_(n), budget_(default_budget()) {}

RatFunc Engine::k_scalar(int kslot, int e, int s) const {
  int k = A_.info(kslot).i;
  return RatFunc::v(e * A_.weight_pair(k, s));
}

// ---------------------------------------------------------------- insertion

Element Engine::lm(int slot, int exp, const Mono& m) {
  if (m.empty()) {
    Mono r;
    if (exp != 0) r.f.push_back({slot, exp});
    return Element::mono(r);
  }
  if (slot < m.f[0].first) {
    Mono r;
    r.f.reserve(m.f.size() + 1);
    r.f.push_back({slot, exp});
    r.f.insert(r.f.end(), m.f.begin(), m.f.end());
    return Element::mono(r);
  }
  Key key{slot, exp, m};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (active_.count(key)) throw DerivationCycle("rewrite cycle at " + A_.name(slot));
  if (++steps_ > budget_) throw StepBudgetExceeded("step budget of " + std::to_string(budget_) + " exceeded");
  active_.insert(key);
  Element r;
  try {
    r = lm_uncached(slot, exp, m);
  } catch (...) {
    active_.erase(key);
    throw;
  }
  active_.erase(key);
  memo_.emplace(std::move(key), r);
  return r;
}

Element Engine::lm_uncached(int slot, int exp, const Mono& m) {
  const SlotInfo& X = A_.info(slot);
  auto [t, a] = m.f[0];
  const SlotInfo& Y = A_.info(t);
  Mono rest;
  rest.f.assign(m.f.begin() + 1, m.f.end());

  if (slot == t) {
    if (X.kind == Kind::Even || X.kind == Kind::K) {
      Mono r = m;
      r.f[0].second += exp;
      if (r.f[0].second == 0) r.f.erase(r.f.begin());
      return Element::mono(r);
    }
    // odd or Kbar squared
    Element out;
    for (auto& tm : rule(slot, slot).rhs) out += onto(tm.w, rest) * tm.c;
    return out;
  }

  if (X.kind == Kind::Even && exp > 1) {
    Element first = lm(slot, 1, m), out;
    for (auto& [mm, c] : first.terms) out += lm(slot, exp - 1, mm) * c;
    return out;
  }

  if (Y.kind == Kind::K) {
    // x K^a = v^{-a (eps, wt x)} K^a x
    RatFunc sc = RatFunc::v(-a * exp * A_.weight_pair(Y.i, slot));
    Element r = lm(slot, exp, rest), out;
    for (auto& [mm, c] : r.terms) out += lm(t, a, mm) * c;
    return out * sc;
  }
  if (X.kind == Kind::K) {
    RatFunc sc = RatFunc::v(exp * a * A_.weight_pair(X.i, t));
    Element r = lm(slot, exp, rest), out;
    for (auto& [mm, c] : r.terms) out += lm(t, a, mm) * c;
    return out * sc;
  }

  const Rule& R = rule(slot, t);
  Mono tail = m;
  if (tail.f[0].second > 1) tail.f[0].second -= 1;
  else tail.f.erase(tail.f.begin());
  Element out;
  for (auto& tm : R.rhs) out += onto(tm.w, tail) * tm.c;
  return out;
}

Element Engine::onto(const Word& w, const Mono& tail) {
  Element cur = Element::mono(tail);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const SlotInfo& x = A_.info(it->slot);
    int reps = 1, e = it->exp;
    if (x.kind != Kind::K) {
      if (e < 0) throw IndexError("negative exponent on " + A_.name(it->slot));
      reps = e;
      e = 1;
    }
    if (x.kind == Kind::K && e == 0) continue;
    for (int r = 0; r < reps; ++r) {
      Element nxt;
      for (auto& [m, c] : cur.terms) nxt += lm(it->slot, e, m) * c;
      cur = std::move(nxt);
    }
  }
  return cur;
}

// ---------------------------------------------------------------- public

Element Engine::normalize(const Word& w) {
  TopLevel g(steps_, depth_);
  if (depth_ == 1 && memo_.size() > kMemoLimit) memo_.clear();
  return onto(w, Mono{});
}

Element Engine::normalize(const LinWord& lw) {
  TopLevel g(steps_, depth_);
  if (depth_ == 1 && memo_.size() > kMemoLimit) memo_.clear();
  Element out;
  for (auto& t : lw) out += onto(t.w, Mono{}) * t.c;
  return out;
}

Element Engine::multiply(const Element& a, const Element& b) {
  TopLevel g(steps_, depth_);
  Element out;
  for (auto& [ma, ca] : a.terms) {
    Word w = ma.word();
    for (auto& [mb, cb] : b.terms) out += onto(w, mb) * (ca * cb);
  }
  return out;
}

Element Engine::left_mult(const Letter& x, const Element& e) {
  TopLevel g(steps_, depth_);
  Element out;
  Word w{x};
  for (auto& [m, c] : e.terms) out += onto(w, m) * c;
  return out;
}

Element Engine::right_mult(const Element& e, const Letter& x) {
  TopLevel g(steps_, depth_);
  Element out;
  Mono xm;
  xm.f.push_back({x.slot, 1});
  const SlotInfo& X = A_.info(x.slot);
  int reps = X.kind == Kind::K ? 1 : x.exp;
  if (X.kind == Kind::K) xm.f[0].second = x.exp;
  if (X.kind == Kind::K && x.exp == 0) return e;
  Element cur = e;
  for (int r = 0; r < reps; ++r) {
    out = Element();
    for (auto& [m, c] : cur.terms) out += onto(m.word(), xm) * c;
    cur = out;
  }
  return cur;
}

Element Engine::pow(const Element& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power of an element");
  Element r(RatFunc(1));
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

LinWord Engine::rule_lookup(const Letter& x, const Letter& y) {
  TopLevel g(steps_, depth_);
  Mono m;
  m.f.push_back({x.slot, x.exp});
  if (x.slot < y.slot) {
    m.f.push_back({y.slot, y.exp});
    if (is_canonical(A_, m)) throw NoRuleApplies("pair already canonical: " + render(A_, Word{x, y}));
  } else if (x.slot == y.slot) {
    const SlotInfo& X = A_.info(x.slot);
    if (X.kind == Kind::Even || X.kind == Kind::K) throw NoRuleApplies("pair merges into one power");
  }
  if (x.exp == 1 && y.exp == 1 && x.slot >= y.slot && A_.info(x.slot).kind != Kind::K &&
      A_.info(y.slot).kind != Kind::K)
    return rule(x.slot, y.slot).rhs;
  return onto(Word{x, y}, Mono{}).words();
}

std::string Engine::rule_source(int sx, int sy) {
  TopLevel g(steps_, depth_);
  return rule(sx, sy).source;
}

// ---------------------------------------------------------------- brackets

LinWord Engine::bracket(int slot, int k) const {
  const SlotInfo& X = A_.info(slot);
  if (X.kind == Kind::K || X.kind == Kind::KB || X.height == 1) return {};
  bool odd = X.kind == Kind::Odd;
  int i = X.i, j = X.j;
  if (i < j) {
    int kk = k ? k : j - 1;
    if (kk <= i || kk >= j) throw IndexError("split point outside the root");
    Letter a = E(A_, i, kk), b = E(A_, kk, j, odd);
    return {term(RatFunc(-1), {a, b}), term(RatFunc::v(-1), {b, a})};
  }
  // negative root E_{i,j}, i > j
  int kk = k ? k : i - 1;
  if (kk <= j || kk >= i) throw IndexError("split point outside the root");
  Letter a = E(A_, i, kk, odd), b = E(A_, kk, j);
  return {term(RatFunc(-1), {a, b}), term(RatFunc::v(1), {b, a})};
}

LinWord Engine::expand_to_generators(int slot) const {
  LinWord br = bracket(slot);
  if (br.empty()) return {term(RatFunc(1), {Letter{slot, 1}})};
  LinWord out;
  for (auto& t : br) {
    LinWord acc{term(t.c, {})};
    for (auto& l : t.w) {
      LinWord sub = expand_to_generators(l.slot), nxt;
      for (auto& p : acc)
        for (auto& q : sub) {
          Word w = p.w;
          w.insert(w.end(), q.w.begin(), q.w.end());
          nxt.push_back(term(p.c * q.c, std::move(w)));
        }
      acc = std::move(nxt);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

LinWord Engine::expand_to_generators(const Word& w) const {
  LinWord acc{term(RatFunc(1), {})};
  for (auto& l : w) {
    const SlotInfo& x = A_.info(l.slot);
    int reps = x.kind == Kind::K ? 1 : l.exp;
    for (int r = 0; r < reps; ++r) {
      LinWord sub = x.kind == Kind::K ? LinWord{term(RatFunc(1), {l})} : expand_to_generators(l.slot), nxt;
      for (auto& p : acc)
        for (auto& q : sub) {
          Word ww = p.w;
          ww.insert(ww.end(), q.w.begin(), q.w.end());
          nxt.push_back(term(p.c * q.c, std::move(ww)));
        }
      acc = std::move(nxt);
    }
  }
  return acc;
}

// ---------------------------------------------------------------- rules

const Engine::Rule& Engine::rule(int sx, int sy) {
  auto key = std::make_pair(sx, sy);
  if (auto it = rules_.find(key); it != rules_.end()) return it->second;
  if (deriving_.count(key)) throw DerivationCycle("circular derivation for " + A_.name(sx) + "*" + A_.name(sy));
  deriving_.insert(key);
  Rule r;
  try {
    r = derive(sx, sy);
  } catch (...) {
    deriving_.erase(key);
    throw;
  }
  deriving_.erase(key);
  // weight and parity are preserved by every relation
  Word lhs{{sx, 1}, {sy, 1}};
  auto wt = weight_of(A_, lhs);
  int par = parity_of(A_, lhs);
  for (auto& t : r.rhs)
    if (weight_of(A_, t.w) != wt || parity_of(A_, t.w) != par)
      throw std::logic_error("inhomogeneous rule for " + render(A_, lhs) + ": " + render(A_, t.w));
  return rules_.emplace(key, std::move(r)).first->second;
}

Engine::Rule Engine::derive(int sx, int sy) {
  LinWord lw;
  auto finish = [&](const LinWord& src, const char* tag) {
    Element e;
    for (auto& t : src) e += onto(t.w, Mono{}) * t.c;
    return Rule{e.words(), tag};
  };
  if (base_rule(sx, sy, lw)) return finish(lw, "relation");
  if (definition_rule(sx, sy, lw)) return finish(lw, "definition");

  const SlotInfo& X = A_.info(sx);
  const SlotInfo& Y = A_.info(sy);
  bool xr = X.kind == Kind::Even || X.kind == Kind::Odd;
  bool yr = Y.kind == Kind::Even || Y.kind == Kind::Odd;
  bool xs = xr && X.height > 1, ys = yr && Y.height > 1;

  auto splits = [&](const SlotInfo& Z) {
    std::vector<int> ks;
    int lo = std::min(Z.i, Z.j), hi = std::max(Z.i, Z.j);
    int def = Z.i < Z.j ? Z.j - 1 : Z.i - 1;
    ks.push_back(def);
    for (int k = lo + 1; k < hi; ++k)
      if (k != def) ks.push_back(k);
    return ks;
  };

  std::vector<std::pair<char, int>> plan;
  if (ys) plan.push_back({'R', splits(Y)[0]});
  if (xs) plan.push_back({'L', splits(X)[0]});
  if (ys)
    for (size_t q = 1; q < splits(Y).size(); ++q) plan.push_back({'R', splits(Y)[q]});
  if (xs)
    for (size_t q = 1; q < splits(X).size(); ++q) plan.push_back({'L', splits(X)[q]});

  std::string why;
  for (auto& [side, k] : plan) {
    try {
      Element e = side == 'R' ? straighten_expand_right(sx, sy, k) : straighten_expand_left(sx, sy, k);
      return Rule{e.words(), side == 'R' ? "expand-right" : "expand-left"};
    } catch (const UnknownCase& ex) {
      why = ex.what();
    }
  }
  if (supplement_rule(sx, sy, lw)) return finish(lw, "supplement");
  throw UnknownCase("no rule for " + A_.name(sx) + "*" + A_.name(sy) + (why.empty() ? "" : " (" + why + ")"));
}

Element Engine::straighten_expand_right(int sx, int sy, int k) {
  Element out;
  for (auto& t : bracket(sy, k)) {
    const Letter& a = t.w[0];
    const Letter& b = t.w[1];
    Mono am;
    am.f.push_back({a.slot, 1});
    Element xa = lm(sx, 1, am);
    Mono bm;
    bm.f.push_back({b.slot, 1});
    for (auto& [m, c] : xa.terms) out += onto(m.word(), bm) * (c * t.c);
  }
  return out;
}

Element Engine::straighten_expand_left(int sx, int sy, int k) {
  Element out;
  for (auto& t : bracket(sx, k)) {
    const Letter& a = t.w[0];
    const Letter& b = t.w[1];
    Mono ym;
    ym.f.push_back({sy, 1});
    Element by = lm(b.slot, 1, ym);
    for (auto& [m, c] : by.terms) out += lm(a.slot, 1, m) * (c * t.c);
  }
  return out;
}

// Defining relations, solved for the out-of-order product. E_a = E[a,a+1],
// F_a = E[a+1,a].
bool Engine::base_rule(int sx, int sy, LinWord& out) const {
  const SlotInfo& X = A_.info(sx);
  const SlotInfo& Y = A_.info(sy);
  const Letter x{sx, 1}, y{sy, 1};
  const RatFunc v = RatFunc::v(1), vi = RatFunc::v(-1), one(1), mone(-1);
  auto K = [&](int i, int e) { return Kl(A_, i, e); };
  auto KB = [&](int i) { return KBl(A_, i); };

  if (X.kind == Kind::KB && Y.kind == Kind::KB) {
    if (sx == sy) {
      RatFunc c = RatFunc(LaurentPoly(1), LaurentPoly::v(2) - LaurentPoly::v(-2));
      out = {term(c, {K(X.i, 2)}), term(-c, {K(X.i, -2)})};
    } else {
      out = {term(mone, {y, x})};
    }
    return true;
  }
  bool xsimple = (X.kind == Kind::Even || X.kind == Kind::Odd) && X.height == 1;
  bool ysimple = (Y.kind == Kind::Even || Y.kind == Kind::Odd) && Y.height == 1;
  int sign = (X.parity && Y.parity) ? -1 : 1;

  // positive simple * positive simple
  if (xsimple && ysimple && X.region > 0 && Y.region > 0) {
    int a = X.i, b = Y.i;
    bool xo = X.kind == Kind::Odd, yo = Y.kind == Kind::Odd;
    if (a == b) {
      if (xo && yo) out = {term(-odd_square_coeff(), {E(A_, a, a + 1), E(A_, a, a + 1)})};
      else out = {term(one, {y, x})};
      return true;
    }
    if (b == a + 1) {
      if (!xo) return false;  // bracket definitions
      Letter Ea = E(A_, a, a + 1), Eb = E(A_, b, b + 1), Oa = E(A_, a, a + 1, true), Ob = E(A_, b, b + 1, true);
      if (!yo) out = {term(one, {Ea, Ob}), term(-v, {Ob, Ea}), term(v, {Eb, Oa})};
      else out = {term(one, {Ea, Eb}), term(-v, {Eb, Ea}), term(-v, {Ob, Oa})};
      return true;
    }
    out = {term(RatFunc(sign), {y, x})};
    return true;
  }
  // negative simple * negative simple
  if (xsimple && ysimple && X.region < 0 && Y.region < 0) {
    int a = Y.j, b = X.j;
    bool xo = X.kind == Kind::Odd, yo = Y.kind == Kind::Odd;
    if (a == b) {
      if (xo && yo) out = {term(odd_square_coeff(), {E(A_, a + 1, a), E(A_, a + 1, a)})};
      else out = {term(one, {y, x})};
      return true;
    }
    if (b == a + 1) {
      if (!yo) return false;  // bracket definitions
      Letter Fa = E(A_, a + 1, a), Fb = E(A_, b + 1, b), Ga = E(A_, a + 1, a, true), Gb = E(A_, b + 1, b, true);
      if (!xo) out = {term(vi, {Ga, Fb}), term(-vi, {Fa, Gb}), term(one, {Gb, Fa})};
      else out = {term(-vi, {Fa, Fb}), term(one, {Fb, Fa}), term(-vi, {Ga, Gb})};
      return true;
    }
    out = {term(RatFunc(sign), {y, x})};
    return true;
  }
  // positive simple * negative simple
  if (xsimple && ysimple && X.region > 0 && Y.region < 0) {
    int a = X.i, b = Y.j;
    bool xo = X.kind == Kind::Odd, yo = Y.kind == Kind::Odd;
    out = {term(RatFunc(sign), {y, x})};
    if (a != b) return true;
    RatFunc q = RatFunc(one) / (v - vi);
    if (!xo && !yo) {
      out.push_back(term(q, {K(a, 1), K(a + 1, -1)}));
      out.push_back(term(-q, {K(a, -1), K(a + 1, 1)}));
    } else if (xo && yo) {
      out.push_back(term(q, {K(a, 1), K(a + 1, 1)}));
      out.push_back(term(-q, {K(a, -1), K(a + 1, -1)}));
      out.push_back(term(v - vi, {KB(a), KB(a + 1)}));
    } else if (!xo && yo) {
      out.push_back(term(one, {K(a + 1, -1), KB(a)}));
      out.push_back(term(mone, {KB(a + 1), K(a, -1)}));
    } else {
      out.push_back(term(one, {K(a + 1, 1), KB(a)}));
      out.push_back(term(mone, {KB(a + 1), K(a, 1)}));
    }
    return true;
  }
  // positive simple * Kbar_c
  if (xsimple && X.region > 0 && Y.kind == Kind::KB) {
    int b = X.i, c = Y.i;
    bool xo = X.kind == Kind::Odd;
    Letter Eb = E(A_, b, b + 1), Ob = E(A_, b, b + 1, true);
    if (b == c) {
      if (!xo) out = {term(vi, {y, x}), term(-vi, {Ob, K(c, -1)})};
      else out = {term(-vi, {y, x}), term(vi, {Eb, K(c, -1)})};
    } else if (b == c - 1) {
      if (!xo) out = {term(v, {y, x}), term(one, {K(c, -1), Ob})};
      else out = {term(-v, {y, x}), term(one, {K(c, -1), Eb})};
    } else {
      out = {term(RatFunc(sign), {y, x})};
    }
    return true;
  }
  // Kbar_c * negative simple
  if (ysimple && Y.region < 0 && X.kind == Kind::KB) {
    int b = Y.j, c = X.i;
    bool yo = Y.kind == Kind::Odd;
    Letter Fb = E(A_, b + 1, b), Gb = E(A_, b + 1, b, true);
    if (b == c) {
      if (!yo) out = {term(v, {y, x}), term(mone, {Gb, K(c, 1)})};
      else out = {term(-v, {y, x}), term(one, {Fb, K(c, 1)})};
    } else if (b == c - 1) {
      if (!yo) out = {term(vi, {y, x}), term(vi, {K(c, 1), Gb})};
      else out = {term(-vi, {y, x}), term(vi, {K(c, 1), Fb})};
    } else {
      out = {term(RatFunc(sign), {y, x})};
    }
    return true;
  }
  return false;
}

// x*y where the bracket definition of a longer root is exactly [x,y].
bool Engine::definition_rule(int sx, int sy, LinWord& out) const {
  const SlotInfo& X = A_.info(sx);
  const SlotInfo& Y = A_.info(sy);
  const Letter x{sx, 1}, y{sy, 1};
  auto isroot = [](const SlotInfo& s) { return s.kind == Kind::Even || s.kind == Kind::Odd; };
  if (!isroot(X) || !isroot(Y)) return false;
  // E[i,m] * E[m,m+1]  (E[i,m] even)
  if (X.region > 0 && Y.region > 0 && X.kind == Kind::Even && Y.height == 1 && X.j == Y.i) {
    Letter z = E(A_, X.i, Y.j, Y.kind == Kind::Odd);
    out = {term(RatFunc::v(-1), {y, x}), term(RatFunc(-1), {z})};
    return true;
  }
  // E[m+1,m] * E[m,i]  (E[m,i] even)
  if (X.region < 0 && Y.region < 0 && Y.kind == Kind::Even && X.height == 1 && X.j == Y.i) {
    Letter z = E(A_, X.i, Y.j, X.kind == Kind::Odd);
    out = {term(RatFunc::v(1), {y, x}), term(RatFunc(-1), {z})};
    return true;
  }
  return false;
}

// Pairs of positive roots sharing a row or a column. Expansion alone runs in
// circles here (the Serre relations are needed), so the rule is given directly.
// Negative pairs are obtained by transporting with the anti-involution.
bool Engine::supplement_rule(int sx, int sy, LinWord& out) const {
  const SlotInfo& X = A_.info(sx);
  const SlotInfo& Y = A_.info(sy);
  auto isroot = [](const SlotInfo& s) { return s.kind == Kind::Even || s.kind == Kind::Odd; };
  if (!isroot(X) || !isroot(Y) || X.region != Y.region) return false;
  const RatFunc v = RatFunc::v(1), vi = RatFunc::v(-1);

  if (X.region > 0) {
    const Letter x{sx, 1}, y{sy, 1};
    bool xo = X.kind == Kind::Odd, yo = Y.kind == Kind::Odd;
    if (X.i == Y.i && X.j == Y.j) {
      if (!xo) return false;
      if (!yo) out = {term(RatFunc(1), {y, x})};
      else out = {term(-odd_square_coeff(), {E(A_, X.i, X.j), E(A_, X.i, X.j)})};
      return true;
    }
    if (X.i == Y.i && X.j > Y.j) {
      out = {term(xo && yo ? -vi : vi, {y, x})};
      return true;
    }
    if (X.j == Y.j && X.i < Y.i) {
      int i = X.i, k = Y.i, j = X.j;
      if (!xo) out = {term(v, {y, x})};
      else if (!yo) out = {term(vi, {y, x}), term(v - vi, {E(A_, k, j, true), E(A_, i, j)})};
      else out = {term(-vi, {y, x}), term(vi - v, {E(A_, k, j), E(A_, i, j)})};
      return true;
    }
    int i = X.i, j = X.j, k = Y.i, l = Y.j;
    if (i < k && l < j) {
      out = {term(RatFunc(xo && yo ? -1 : 1), {y, x})};
      return true;
    }
    if (i < k && k < j && j < l) {
      out = {term(RatFunc(xo && yo ? -1 : 1), {y, x})};
      if (!xo && !yo) out.push_back(term(v - vi, {E(A_, i, l), E(A_, k, j)}));
      else if (!xo) out.push_back(term(v - vi, {E(A_, k, j), E(A_, i, l, true)}));
      else if (!yo) {
        out.push_back(term(-vi, {E(A_, k, j, true), E(A_, i, l)}));
        out.push_back(term(v, {E(A_, i, l), E(A_, k, j, true)}));
      } else {
        out.push_back(term(vi - v, {E(A_, i, l, true), E(A_, k, j, true)}));
      }
      return true;
    }
    return false;
  }

  // negative: x*y = Omega(p*q) with p = Omega(y), q = Omega(x)
  auto om = [&](const SlotInfo& s) { return A_.root_slot(s.j, s.i, s.kind == Kind::Odd); };
  auto om_word = [&](const Word& w) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const SlotInfo& s = A_.info(it->slot);
      if (s.kind == Kind::K) r.push_back({it->slot, -it->exp});
      else if (s.kind == Kind::KB) r.push_back(*it);
      else r.push_back({om(s), it->exp});
    }
    return r;
  };
  int p = om(Y), q = om(X);
  LinWord pos;
  if (p > q || (p == q && A_.info(p).kind == Kind::Odd)) {
    if (!supplement_rule(p, q, pos)) return false;
    for (auto& t : pos) out.push_back(term(t.c.bar(), om_word(t.w)));
    return true;
  }
  // q*p = sum c w, so y*x = sum bar(c) Omega(w); solve for x*y
  if (!supplement_rule(q, p, pos)) return false;
  RatFunc c0;
  LinWord rest;
  for (auto& t : pos) {
    Word w = om_word(t.w);
    if (w.size() == 2 && w[0].slot == sx && w[1].slot == sy && w[0].exp == 1 && w[1].exp == 1)
      c0 += t.c.bar();
    else
      rest.push_back(term(t.c.bar(), w));
  }
  if (c0.is_zero()) return false;
  RatFunc inv = c0.inverse();
  out = {term(inv, {Letter{sy, 1}, Letter{sx, 1}})};
  for (auto& t : rest) out.push_back(term(-t.c * inv, t.w));
  return true;
}

}  // namespace qn
