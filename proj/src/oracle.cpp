#include "qn/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace qn {

namespace {

using Op = Expr::Op;

LinWord lw_mul(const LinWord& a, const LinWord& b) {
  LinWord r;
  r.reserve(a.size() * b.size());
  for (auto& x : a)
    for (auto& y : b) {
      Word w = x.w;
      w.insert(w.end(), y.w.begin(), y.w.end());
      r.push_back({x.c * y.c, std::move(w)});
    }
  return r;
}

LinWord scalar_lw(const RatFunc& c) { return c.is_zero() ? LinWord{} : LinWord{{c, {}}}; }

bool scalar_of(const LinWord& x, RatFunc& out) {
  out = RatFunc(0);
  for (auto& t : x) {
    if (!t.w.empty()) return false;
    out += t.c;
  }
  return true;
}

LinWord lw_pow(const LinWord& b, long k) {
  LinWord r = scalar_lw(RatFunc(1));
  for (long i = 0; i < k; ++i) r = lw_mul(r, b);
  return r;
}

// product of (K v^(c-s+1) - K^-1 v^(-c+s-1)) / (v^s - v^-s), K a word of K letters
LinWord bracket_lw(const Word& k, int c, int t) {
  Word kinv;
  for (auto it = k.rbegin(); it != k.rend(); ++it) kinv.push_back({it->slot, -it->exp});
  LinWord r = scalar_lw(RatFunc(1));
  for (int s = 1; s <= t; ++s) {
    RatFunc den = RatFunc::v(s) - RatFunc::v(-s);
    LinWord f{{RatFunc::v(c - s + 1) / den, k}, {-RatFunc::v(-c + s - 1) / den, kinv}};
    r = lw_mul(r, f);
  }
  return r;
}

LinWord raw(const Engine& eng, const Expr& e) {
  const Alphabet& A = eng.alpha();
  switch (e.op) {
    case Op::Int: return scalar_lw(RatFunc(e.value));
    case Op::V: return scalar_lw(RatFunc::v(1));
    case Op::Gen: {
      bool odd = e.kind == GenKind::Eb || e.kind == GenKind::Fb;
      switch (e.kind) {
        case GenKind::K: return {{RatFunc(1), {Kl(A, e.idx[0])}}};
        case GenKind::Kb: return {{RatFunc(1), {KBl(A, e.idx[0])}}};
        case GenKind::E:
        case GenKind::Eb: {
          Letter l = e.idx.size() == 1 ? E(A, e.idx[0], e.idx[0] + 1, odd) : E(A, e.idx[0], e.idx[1], odd);
          return eng.expand_to_generators(l.slot);
        }
        default: {
          Letter l = e.idx.size() == 1 ? E(A, e.idx[0] + 1, e.idx[0], odd) : E(A, e.idx[1], e.idx[0], odd);
          return eng.expand_to_generators(l.slot);
        }
      }
    }
    case Op::KBracket:
      if (e.idx.size() == 4)
        return bracket_lw({Kl(A, e.idx[0]), Kl(A, e.idx[1], -1)}, e.idx[2], e.idx[3]);
      return bracket_lw({Kl(A, e.idx[0])}, e.idx[1], e.idx[2]);
    case Op::Sum: {
      LinWord r;
      for (size_t k = 0; k < e.kids.size(); ++k)
        for (auto& t : raw(eng, *e.kids[k])) r.push_back({e.flags[k] ? -t.c : t.c, t.w});
      return r;
    }
    case Op::Product: {
      LinWord r = raw(eng, *e.kids[0]);
      for (size_t k = 1; k < e.kids.size(); ++k) {
        LinWord x = raw(eng, *e.kids[k]);
        if (e.flags[k]) {
          RatFunc d;
          if (!scalar_of(x, d)) throw std::domain_error("division by a non-scalar");
          if (d.is_zero()) throw std::domain_error("division by zero");
          for (auto& t : r) t.c /= d;
        } else {
          r = lw_mul(r, x);
        }
      }
      return r;
    }
    case Op::Pow: {
      LinWord b = raw(eng, *e.kids[0]);
      if (e.value >= 0) return lw_pow(b, e.value);
      if (b.size() == 1) {
        bool cartan = true;
        for (auto& l : b[0].w) cartan = cartan && A.info(l.slot).kind == Kind::K;
        if (cartan) {
          Word inv;
          for (auto it = b[0].w.rbegin(); it != b[0].w.rend(); ++it) inv.push_back({it->slot, -it->exp});
          return lw_pow({{b[0].c.inverse(), inv}}, -e.value);
        }
      }
      throw std::domain_error("negative power of a non-invertible element");
    }
    case Op::DivPow: {
      if (e.value < 0) return {};
      LinWord r = lw_pow(raw(eng, *e.kids[0]), e.value);
      RatFunc f = RatFunc(quantum_factorial(e.value)).inverse();
      for (auto& t : r) t.c *= f;
      return r;
    }
    case Op::Braid: throw std::domain_error("raw evaluation does not support T_i");
    case Op::Omega: {
      // anti-automorphism on generators: E_a <-> F_a, Eb_a <-> Fb_a, K -> K^-1, Kb fixed, v -> v^-1
      LinWord r;
      for (auto& t : raw(eng, *e.kids[0])) {
        Word w;
        for (auto it = t.w.rbegin(); it != t.w.rend(); ++it) {
          const SlotInfo& s = A.info(it->slot);
          if (s.kind == Kind::K) w.push_back({it->slot, -it->exp});
          else if (s.kind == Kind::KB) w.push_back(*it);
          else w.push_back({A.root_slot(s.j, s.i, s.kind == Kind::Odd), it->exp});
        }
        r.push_back({t.c.bar(), std::move(w)});
      }
      return r;
    }
    case Op::Func:
      if (e.name == "qint") return scalar_lw(RatFunc(quantum_int(e.idx[0])));
      if (e.name == "qfact") return scalar_lw(RatFunc(quantum_factorial(e.idx[0])));
      return scalar_lw(RatFunc(gauss_binom(e.idx[0], e.idx[1])));
  }
  return {};
}

// ---------------------------------------------------------------- word space

// A spanning element of the smash product: a word in the non-K letters
// followed by a K monomial. Encoded as bytes: letters, 0xff, then K exponents.
using Key = std::string;

constexpr uint64_t P = (uint64_t(1) << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
  unsigned __int128 x = (unsigned __int128)a * b;
  uint64_t lo = uint64_t(x & P), hi = uint64_t(x >> 61);
  uint64_t r = lo + hi;
  return r >= P ? r - P : r;
}
uint64_t addmod(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  return r >= P ? r - P : r;
}
uint64_t powmod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}
uint64_t invmod(uint64_t a) { return powmod(a, P - 2); }

struct STerm {
  RatFunc c;
  std::string x;       // non-K letters
  std::vector<int> k;  // K exponents
};

struct Smash {
  const Alphabet& A;
  int n;

  // push every K letter to the right end; K_i^e y = v^(e*(eps_i, wt y)) y K_i^e
  STerm convert(const Term& t) const {
    STerm r{t.c, "", std::vector<int>(size_t(n), 0)};
    std::vector<int> wt(size_t(n), 0);
    int vexp = 0;
    for (auto it = t.w.rbegin(); it != t.w.rend(); ++it) {
      const SlotInfo& s = A.info(it->slot);
      if (s.kind == Kind::K) {
        vexp += it->exp * wt[size_t(s.i - 1)];
        r.k[size_t(s.i - 1)] += it->exp;
        continue;
      }
      for (int e = 0; e < it->exp; ++e) r.x.push_back(char(it->slot));
      if (s.kind != Kind::KB) {
        wt[size_t(s.i - 1)] += it->exp;
        wt[size_t(s.j - 1)] -= it->exp;
      }
    }
    std::reverse(r.x.begin(), r.x.end());
    r.c *= RatFunc::v(vexp);
    return r;
  }

  static Key key(const std::string& x, const std::vector<int>& k) {
    Key s = x;
    s.push_back(char(0xff));
    for (int e : k) s.push_back(char(e));
    return s;
  }

  std::map<Key, std::pair<STerm, RatFunc>> collect(const LinWord& lw, int sign = 1) const {
    std::map<Key, std::pair<STerm, RatFunc>> out;
    for (auto& t : lw) add(out, t, sign);
    return out;
  }
  void add(std::map<Key, std::pair<STerm, RatFunc>>& out, const Term& t, int sign) const {
    STerm s = convert(t);
    Key k = key(s.x, s.k);
    auto it = out.find(k);
    RatFunc c = sign > 0 ? s.c : -s.c;
    if (it == out.end()) out.emplace(k, std::make_pair(s, c));
    else it->second.second += c;
  }

  std::vector<int> weight(const std::string& x) const {
    std::vector<int> wt(size_t(n), 0);
    for (char ch : x) {
      const SlotInfo& s = A.info(int(uint8_t(ch)));
      if (s.kind == Kind::KB) continue;
      wt[size_t(s.i - 1)]++;
      wt[size_t(s.j - 1)]--;
    }
    return wt;
  }
  int parity(const std::string& x) const {
    int p = 0;
    for (char ch : x) p ^= A.info(int(uint8_t(ch))).parity;
    return p;
  }
};

struct RelData {
  std::vector<STerm> terms;
  int deg = 0;
};

using SparseRow = std::vector<std::pair<int, uint64_t>>;

// incremental row echelon form mod P, leading entry = smallest column
struct Echelon {
  std::unordered_map<int, SparseRow> piv;

  void reduce(SparseRow& r) const {
    while (!r.empty()) {
      auto it = piv.find(r.front().first);
      if (it == piv.end()) return;
      const SparseRow& p = it->second;
      uint64_t f = P - r.front().second;  // r += f * p, p has leading 1
      SparseRow out;
      out.reserve(r.size() + p.size());
      size_t a = 0, b = 0;
      while (a < r.size() || b < p.size()) {
        if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
          out.push_back(r[a++]);
        } else if (a == r.size() || p[b].first < r[a].first) {
          out.push_back({p[b].first, mulmod(f, p[b].second)});
          ++b;
        } else {
          uint64_t x = addmod(r[a].second, mulmod(f, p[b].second));
          if (x) out.push_back({r[a].first, x});
          ++a, ++b;
        }
      }
      r.swap(out);
    }
  }
  bool insert(SparseRow r) {
    reduce(r);
    if (r.empty()) return false;
    uint64_t inv = invmod(r.front().second);
    for (auto& e : r) e.second = mulmod(e.second, inv);
    piv.emplace(r.front().first, std::move(r));
    return true;
  }
};

// Membership of the target in the ideal slice spanned by u*r*w*K^m with all
// letters in `letters` and degree |u| + deg r + |w| <= D. Only the connected
// component of the row/column incidence graph that contains the target's
// columns can matter, so rows are generated by search from those columns:
// every placement of a relation term inside a column word gives a row.
bool slice_member(const Smash& S, const std::vector<RelData>& all, const std::vector<STerm>& target,
                  const std::string& letters, int D, int samples, uint64_t seed, size_t row_budget,
                  OracleStats* stats) {
  const int n = S.n;
  // K exponents stay within the target's box widened by 2
  std::vector<int> klo(static_cast<size_t>(n), 1 << 20), khi(static_cast<size_t>(n), -(1 << 20));
  for (auto& t : target)
    for (int i = 0; i < n; ++i) {
      klo[size_t(i)] = std::min(klo[size_t(i)], t.k[size_t(i)] - 2);
      khi[size_t(i)] = std::max(khi[size_t(i)], t.k[size_t(i)] + 2);
    }
  auto inside = [&](const std::string& x) {
    for (char ch : x)
      if (letters.find(ch) == std::string::npos) return false;
    return true;
  };
  std::vector<const RelData*> rels;
  for (auto& r : all) {
    bool ok = r.deg <= D;
    for (auto& t : r.terms) ok = ok && inside(t.x);
    if (ok) rels.push_back(&r);
  }
  // relation terms indexed by first letter; empty words separately
  std::unordered_map<char, std::vector<std::pair<const RelData*, const STerm*>>> by_first;
  std::vector<std::pair<const RelData*, const STerm*>> empty_terms;
  for (auto* r : rels)
    for (auto& t : r->terms) {
      if (t.x.empty()) empty_terms.push_back({r, &t});
      else by_first[t.x[0]].push_back({r, &t});
    }

  std::unordered_map<Key, int> col;
  std::vector<std::pair<std::string, std::vector<int>>> cols;
  auto colid = [&](const std::string& x, const std::vector<int>& k) {
    Key key = Smash::key(x, k);
    auto it = col.find(key);
    if (it != col.end()) return it->second;
    int id = int(cols.size());
    col.emplace(std::move(key), id);
    cols.push_back({x, k});
    return id;
  };
  struct Entry {
    int col;
    const RatFunc* c;
    int vexp;
  };
  std::vector<std::vector<Entry>> rows;
  std::unordered_set<std::string> seen;  // (relation, u, w, m)

  std::vector<std::pair<int, const RatFunc*>> tvec;
  for (auto& t : target) tvec.push_back({colid(t.x, t.k), &t.c});

  auto place = [&](const RelData* r, const STerm* t, const std::string& z, const std::vector<int>& kz, size_t p) {
    std::string u = z.substr(0, p), w = z.substr(p + t->x.size());
    if (int(u.size() + w.size()) + r->deg > D) return;
    std::vector<int> m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) m[size_t(i)] = kz[size_t(i)] - t->k[size_t(i)];
    for (auto& tt : r->terms)
      for (int i = 0; i < n; ++i) {
        int e = tt.k[size_t(i)] + m[size_t(i)];
        if (e < klo[size_t(i)] || e > khi[size_t(i)]) return;
      }
    std::string tag = std::to_string(size_t(r - all.data())) + "|" + u + "|" + w + "|";
    for (int e : m) tag.push_back(char(e));
    if (!seen.insert(tag).second) return;
    std::vector<int> ww = S.weight(w);
    std::vector<Entry> row;
    for (auto& tt : r->terms) {
      int vexp = 0;
      std::vector<int> k(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        vexp += tt.k[size_t(i)] * ww[size_t(i)];
        k[size_t(i)] = tt.k[size_t(i)] + m[size_t(i)];
      }
      row.push_back({colid(u + tt.x + w, k), &tt.c, vexp});
    }
    rows.push_back(std::move(row));
    if (rows.size() > row_budget) throw InconclusiveBudget("ideal slice exceeds " + std::to_string(row_budget) + " rows");
  };
  for (size_t next = 0; next < cols.size(); ++next) {
    const std::string z = cols[next].first;
    const std::vector<int> kz = cols[next].second;
    for (size_t p = 0; p <= z.size(); ++p) {
      for (auto& [r, t] : empty_terms) place(r, t, z, kz, p);
      if (p == z.size()) break;
      auto it = by_first.find(z[p]);
      if (it == by_first.end()) continue;
      for (auto& [r, t] : it->second)
        if (z.compare(p, t->x.size(), t->x) == 0) place(r, t, z, kz, p);
    }
  }
  if (stats) {
    stats->rows = rows.size();
    stats->columns = cols.size();
    stats->degree = D;
    stats->letters = int(letters.size());
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-997, 997), den(1, 997);
  for (int s = 0; s < samples; ++s) {
    // v at a random rational, reduced mod P
    uint64_t x = 0;
    std::unordered_map<const RatFunc*, uint64_t> cval;
    auto val = [&](const RatFunc* c) {
      auto it = cval.find(c);
      if (it != cval.end()) return it->second;
      uint64_t y = c->eval_mod(x, P);
      cval.emplace(c, y);
      return y;
    };
    for (;;) {
      long p = num(rng), q = den(rng);
      if (p == 0 || std::abs(p) == q) continue;
      uint64_t pm = p > 0 ? uint64_t(p) : P - uint64_t(-p);
      x = mulmod(pm, invmod(uint64_t(q)));
      try {
        for (auto* r : rels)
          for (auto& t : r->terms) val(&t.c);
        for (auto& t : tvec) val(t.second);
        break;
      } catch (const PoleAtEpsilon&) {
        cval.clear();
      }
    }
    uint64_t xinv = invmod(x);
    auto vpow = [&](int e) { return e >= 0 ? powmod(x, uint64_t(e)) : powmod(xinv, uint64_t(-e)); };

    Echelon ech;
    for (auto& row : rows) {
      std::map<int, uint64_t> acc;
      for (auto& e : row) acc[e.col] = addmod(acc[e.col], mulmod(val(e.c), vpow(e.vexp)));
      SparseRow sr;
      for (auto& [c, y] : acc)
        if (y) sr.push_back({c, y});
      if (!sr.empty()) ech.insert(std::move(sr));
    }
    std::map<int, uint64_t> acc;
    for (auto& [c, f] : tvec) acc[c] = addmod(acc[c], val(f));
    SparseRow tr;
    for (auto& [c, y] : acc)
      if (y) tr.push_back({c, y});
    ech.reduce(tr);
    if (stats) stats->rank = ech.piv.size();
    if (!tr.empty()) return false;
  }
  return true;
}

// letters of generator index a (E_a F_a, their odd partners) and Kb_a, Kb_a+1
void add_index(const Alphabet& A, int a, bool all, std::string& out) {
  auto put = [&](int slot) {
    if (out.find(char(slot)) == std::string::npos) out.push_back(char(slot));
  };
  put(A.kb_slot(a));
  put(A.kb_slot(a + 1));
  if (all)
    for (int odd = 0; odd < 2; ++odd) {
      put(A.root_slot(a, a + 1, odd));
      put(A.root_slot(a + 1, a, odd));
    }
}

}  // namespace

LinWord raw_eval(const Engine& eng, const ExprPtr& e) { return raw(eng, *e); }
LinWord raw_eval(const Engine& eng, const std::string& text) { return raw(eng, *parse(text, eng.n())); }

bool oracle_equal(const Engine& eng, const LinWord& a, const LinWord& b, int degree_bound, int samples, uint64_t seed,
                  size_t row_budget, OracleStats* stats) {
  const Alphabet& A = eng.alpha();
  const int n = A.n();
  Smash S{A, n};

  auto tmap = S.collect(a);
  for (auto& t : b) S.add(tmap, t, -1);
  std::vector<STerm> target;
  for (auto& [k, pc] : tmap)
    if (!pc.second.is_zero()) target.push_back({pc.second, pc.first.x, pc.first.k});
  if (target.empty()) return true;

  int dt = 0;
  std::string l0;
  for (auto& t : target) {
    dt = std::max(dt, int(t.x.size()));
    for (char ch : t.x)
      if (l0.find(ch) == std::string::npos) l0.push_back(ch);
  }
  if (degree_bound > 0 && degree_bound < dt)
    throw InconclusiveBudget("degree bound " + std::to_string(degree_bound) + " below the degree " + std::to_string(dt) +
                             " of the difference");
  const int D = degree_bound > 0 ? degree_bound : dt + 2;

  // alphabets: the target's letters; plus K-bars and parity partners at the
  // indices it touches; plus every generator at those indices
  std::vector<int> idx;
  for (char ch : l0) {
    const SlotInfo& s = A.info(int(uint8_t(ch)));
    std::vector<int> cand = s.kind == Kind::KB ? std::vector<int>{s.i - 1, s.i} : std::vector<int>{std::min(s.i, s.j)};
    for (int x : cand)
      if (x >= 1 && x < n && std::find(idx.begin(), idx.end(), x) == idx.end()) idx.push_back(x);
  }
  std::string l1 = l0, l2 = l0;
  for (char ch : l0) {
    const SlotInfo& s = A.info(int(uint8_t(ch)));
    if (s.kind == Kind::Even || s.kind == Kind::Odd) {
      char partner = char(A.root_slot(s.i, s.j, s.kind == Kind::Even));
      if (l1.find(partner) == std::string::npos) l1.push_back(partner);
    }
  }
  for (int x : idx) {
    add_index(A, x, false, l1);
    add_index(A, x, true, l2);
  }
  // grow the target's letters by small subsets of the pool; big alphabets blow up the slice
  std::string pool;
  for (char ch : l2 + l1)
    if (l0.find(ch) == std::string::npos && pool.find(ch) == std::string::npos) pool.push_back(ch);
  std::vector<std::string> alphabets{l0};
  for (size_t i = 0; i < pool.size(); ++i) alphabets.push_back(l0 + pool[i]);
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) alphabets.push_back(l0 + pool[i] + pool[j]);
  for (auto& l : alphabets) std::sort(l.begin(), l.end());

  std::vector<RelData> rels;
  for (auto& r : qq_relations(A)) {
    RelData d;
    for (auto& [k, pc] : S.collect(r.expr))
      if (!pc.second.is_zero()) d.terms.push_back({pc.second, pc.first.x, pc.first.k});
    if (d.terms.empty()) continue;  // K relations vanish identically here
    for (auto& t : d.terms) d.deg = std::max(d.deg, int(t.x.size()));
    rels.push_back(std::move(d));
  }

  bool over_budget = false;
  for (int d = dt; d <= D; ++d)
    for (auto& l : alphabets) {
      try {
        bool ok = slice_member(S, rels, target, l, d, samples, seed, row_budget, stats);
        if (ok) return true;
      } catch (const InconclusiveBudget&) {
        over_budget = true;
      }
    }
  if (over_budget) throw InconclusiveBudget("no membership found within the row budget");
  return false;
}

bool oracle_equal(const Engine& eng, const std::string& lhs, const std::string& rhs, int degree_bound, int samples,
                  uint64_t seed, size_t row_budget, OracleStats* stats) {
  return oracle_equal(eng, raw_eval(eng, lhs), raw_eval(eng, rhs), degree_bound, samples, seed, row_budget, stats);
}

}  // namespace qn
