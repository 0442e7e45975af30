#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qn/scalars.hpp"

namespace qn {

struct StepBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoRuleApplies : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

enum class Kind : uint8_t { Even, Odd, K, KB };

struct SlotInfo {
  Kind kind;
  int i = 0, j = 0;  // root (i,j); Cartan letters use i only
  int parity = 0;
  int region = 0;  // -1 negative, 0 Cartan, +1 positive
  int height = 0;  // |i-j|
};

// Letter slots in canonical PBW order: negative part by columns (rows
// ascending), then K_1 Kb_1 ... K_n Kb_n, then the positive part by rows
// n-1..1 (columns ascending). Each root has an even slot followed by its odd slot.
class Alphabet {
 public:
  explicit Alphabet(int n);
  int n() const { return n_; }
  int size() const { return int(info_.size()); }
  int num_roots() const { return n_ * (n_ - 1) / 2; }
  int root_slot(int i, int j, bool odd) const;
  int k_slot(int i) const;
  int kb_slot(int i) const;
  const SlotInfo& info(int s) const { return info_[size_t(s)]; }
  bool is_simple(int s) const { return info_[size_t(s)].height == 1; }
  int weight_pair(int k, int s) const;  // (eps_k, wt(letter s))
  std::string name(int s) const;         // E[1,3], Eb[2,1], K[1], Kb[2]

 private:
  int n_;
  std::vector<SlotInfo> info_;
  std::vector<int> slot_of_;  // index (i-1)*n+(j-1) -> even slot
};

struct Letter {
  int slot = 0;
  int exp = 1;
  friend bool operator==(const Letter& a, const Letter& b) { return a.slot == b.slot && a.exp == b.exp; }
  friend bool operator<(const Letter& a, const Letter& b) {
    return a.slot != b.slot ? a.slot < b.slot : a.exp < b.exp;
  }
};
using Word = std::vector<Letter>;

struct Term {
  RatFunc c;
  Word w;
};
using LinWord = std::vector<Term>;  // formal linear combination of words

// Canonical monomial: factors sorted by slot, nonzero exponents.
struct Mono {
  std::vector<std::pair<int, int>> f;
  bool empty() const { return f.empty(); }
  friend bool operator==(const Mono& a, const Mono& b) { return a.f == b.f; }
  friend bool operator<(const Mono& a, const Mono& b) { return a.f < b.f; }
  size_t hash() const;
  Word word() const;
};
struct MonoHash {
  size_t operator()(const Mono& m) const { return m.hash(); }
};

class Element {
 public:
  std::map<Mono, RatFunc> terms;

  Element() = default;
  explicit Element(const RatFunc& c);  // scalar
  static Element mono(const Mono& m, const RatFunc& c = RatFunc(1));

  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }
  void add(const Mono& m, const RatFunc& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const RatFunc& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const RatFunc& c) { return a *= c; }
  friend Element operator*(const RatFunc& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  Element bar() const;
  LinWord words() const;
};

std::vector<int> weight_of(const Alphabet& A, const Mono& m);
int parity_of(const Alphabet& A, const Mono& m);
std::vector<int> weight_of(const Alphabet& A, const Word& w);
int parity_of(const Alphabet& A, const Word& w);
bool is_canonical(const Alphabet& A, const Mono& m);
std::string render(const Alphabet& A, const Element& x);
std::string render(const Alphabet& A, const Word& w);

// Straightening engine for U_v(q_n). Commutation rules for pairs of letters are
// produced on first use: generator pairs come straight from the defining
// relations, the bracket definitions of root vectors give the adjacent pairs,
// everything else is derived by substituting a bracket expansion and
// straightening. Results are memoized.
class Engine {
 public:
  explicit Engine(int n);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const Alphabet& alpha() const { return A_; }
  int n() const { return A_.n(); }

  Element normalize(const Word& w);
  Element normalize(const LinWord& lw);
  Element multiply(const Element& a, const Element& b);
  Element left_mult(const Letter& x, const Element& e);
  Element right_mult(const Element& e, const Letter& x);
  Element pow(const Element& a, int k);

  // replacement used for an out-of-order or contractible adjacent pair; every
  // word in the result is in canonical order
  LinWord rule_lookup(const Letter& x, const Letter& y);
  // which construction produced a rule: "relation", "definition", "expand-right",
  // "expand-left", "supplement"
  std::string rule_source(int sx, int sy);

  // Bracket expansion of a root letter into two shorter root letters; k is
  // the split point (0 means the one used in the recursive definition).
  LinWord bracket(int slot, int k = 0) const;
  // full expansion over simple generators
  LinWord expand_to_generators(const Word& w) const;
  LinWord expand_to_generators(int slot) const;

  void set_step_budget(long b) { budget_ = b; }
  long step_budget() const { return budget_; }
  size_t memo_size() const { return memo_.size(); }
  void clear_memo() { memo_.clear(); }
  size_t rule_count() const { return rules_.size(); }

 private:
  struct Key {
    int slot, exp;
    Mono m;
    friend bool operator==(const Key& a, const Key& b) { return a.slot == b.slot && a.exp == b.exp && a.m == b.m; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const { return k.m.hash() * 1315423911u ^ size_t(k.slot * 131 + k.exp); }
  };
  struct Rule {
    LinWord rhs;
    std::string source;
  };

  Alphabet A_;
  long budget_;
  long steps_ = 0;
  int depth_ = 0;
  std::unordered_map<Key, Element, KeyHash> memo_;
  std::unordered_set<Key, KeyHash> active_;
  std::map<std::pair<int, int>, Rule> rules_;
  std::set<std::pair<int, int>> deriving_;

  Element lm(int slot, int exp, const Mono& m);
  Element lm_uncached(int slot, int exp, const Mono& m);
  Element onto(const Word& w, const Mono& tail);
  const Rule& rule(int sx, int sy);
  Rule derive(int sx, int sy);
  bool base_rule(int sx, int sy, LinWord& out) const;
  bool definition_rule(int sx, int sy, LinWord& out) const;
  bool supplement_rule(int sx, int sy, LinWord& out) const;
  Element straighten_expand_right(int sx, int sy, int k);
  Element straighten_expand_left(int sx, int sy, int k);
  RatFunc k_scalar(int kslot, int e, int s) const;  // K^e x = scalar x K^e
};

// Convenience constructors.
Letter E(const Alphabet& A, int i, int j, bool odd = false);
Letter Kl(const Alphabet& A, int i, int e = 1);
Letter KBl(const Alphabet& A, int i);

}  // namespace qn
