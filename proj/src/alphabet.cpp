#include <sstream>

#include "qn/algebra.hpp"

namespace qn {

Alphabet::Alphabet(int n) : n_(n), slot_of_(size_t(n * n), -1) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  auto push_root = [&](int i, int j, int region) {
    slot_of_[size_t((i - 1) * n + (j - 1))] = int(info_.size());
    int h = i > j ? i - j : j - i;
    info_.push_back({Kind::Even, i, j, 0, region, h});
    info_.push_back({Kind::Odd, i, j, 1, region, h});
  };
  for (int c = 1; c < n; ++c)
    for (int r = c + 1; r <= n; ++r) push_root(r, c, -1);
  for (int i = 1; i <= n; ++i) {
    info_.push_back({Kind::K, i, 0, 0, 0, 0});
    info_.push_back({Kind::KB, i, 0, 1, 0, 0});
  }
  for (int r = n - 1; r >= 1; --r)
    for (int c = r + 1; c <= n; ++c) push_root(r, c, 1);
}

int Alphabet::root_slot(int i, int j, bool odd) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
    throw IndexError("root index (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for n=" +
                     std::to_string(n_));
  return slot_of_[size_t((i - 1) * n_ + (j - 1))] + (odd ? 1 : 0);
}

int Alphabet::k_slot(int i) const {
  if (i < 1 || i > n_) throw IndexError("Cartan index " + std::to_string(i) + " invalid for n=" + std::to_string(n_));
  return 2 * num_roots() + 2 * (i - 1);
}

int Alphabet::kb_slot(int i) const { return k_slot(i) + 1; }

int Alphabet::weight_pair(int k, int s) const {
  const SlotInfo& x = info(s);
  if (x.kind == Kind::K || x.kind == Kind::KB) return 0;
  return (k == x.i ? 1 : 0) - (k == x.j ? 1 : 0);
}

std::string Alphabet::name(int s) const {
  const SlotInfo& x = info(s);
  std::ostringstream os;
  switch (x.kind) {
    case Kind::Even: os << "E[" << x.i << "," << x.j << "]"; break;
    case Kind::Odd: os << "Eb[" << x.i << "," << x.j << "]"; break;
    case Kind::K: os << "K[" << x.i << "]"; break;
    case Kind::KB: os << "Kb[" << x.i << "]"; break;
  }
  return os.str();
}

Letter E(const Alphabet& A, int i, int j, bool odd) { return {A.root_slot(i, j, odd), 1}; }
Letter Kl(const Alphabet& A, int i, int e) { return {A.k_slot(i), e}; }
Letter KBl(const Alphabet& A, int i) { return {A.kb_slot(i), 1}; }

// ---------------------------------------------------------------- Mono / Element

size_t Mono::hash() const {
  size_t h = 1469598103934665603ULL;
  for (auto& [s, e] : f) {
    h ^= size_t(s * 7919 + e);
    h *= 1099511628211ULL;
  }
  return h;
}

Word Mono::word() const {
  Word w;
  w.reserve(f.size());
  for (auto& [s, e] : f) w.push_back({s, e});
  return w;
}

Element::Element(const RatFunc& c) {
  if (!c.is_zero()) terms.emplace(Mono{}, c);
}

Element Element::mono(const Mono& m, const RatFunc& c) {
  Element e;
  if (!c.is_zero()) e.terms.emplace(m, c);
  return e;
}

void Element::add(const Mono& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (auto& [m, c] : o.terms) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (auto& [m, c] : o.terms) add(m, -c);
  return *this;
}

Element& Element::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [m, x] : terms) x *= c;
  return *this;
}

Element Element::bar() const {
  Element r;
  for (auto& [m, c] : terms) r.terms.emplace(m, c.bar());
  return r;
}

LinWord Element::words() const {
  LinWord lw;
  for (auto& [m, c] : terms) lw.push_back({c, m.word()});
  return lw;
}

std::vector<int> weight_of(const Alphabet& A, const Word& w) {
  std::vector<int> wt(size_t(A.n()), 0);
  for (auto& l : w) {
    const SlotInfo& x = A.info(l.slot);
    if (x.kind == Kind::Even || x.kind == Kind::Odd) {
      wt[size_t(x.i - 1)] += l.exp;
      wt[size_t(x.j - 1)] -= l.exp;
    }
  }
  return wt;
}

int parity_of(const Alphabet& A, const Word& w) {
  int p = 0;
  for (auto& l : w) p += A.info(l.slot).parity * l.exp;
  return ((p % 2) + 2) % 2;
}

std::vector<int> weight_of(const Alphabet& A, const Mono& m) { return weight_of(A, m.word()); }
int parity_of(const Alphabet& A, const Mono& m) { return parity_of(A, m.word()); }

bool is_canonical(const Alphabet& A, const Mono& m) {
  int last = -1;
  for (auto& [s, e] : m.f) {
    if (s <= last || e == 0) return false;
    last = s;
    const SlotInfo& x = A.info(s);
    if ((x.kind == Kind::Odd || x.kind == Kind::KB) && e != 1) return false;
    if (x.kind == Kind::Even && e < 0) return false;
  }
  return true;
}

std::string render(const Alphabet& A, const Word& w) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += A.name(w[k].slot);
    if (w[k].exp != 1) s += "^" + std::to_string(w[k].exp);
  }
  return s;
}

std::string render(const Alphabet& A, const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : x.terms) {
    std::string cs = c.str();
    bool neg = false;
    RatFunc cc = c;
    if (c.num().terms().size() == 1 && c.num().terms()[0].second < 0) {
      neg = true;
      cc = -c;
      cs = cc.str();
    }
    std::string body;
    if (m.empty()) {
      body = cc.num().terms().size() > 1 && !cc.is_integral() ? "(" + cs + ")" : cs;
      if (cc.num().terms().size() > 1 && cc.is_integral()) body = "(" + cs + ")";
    } else {
      std::string ws = render(A, m.word());
      if (cc.is_one()) body = ws;
      else if (cc.is_integral() && cc.num().terms().size() == 1) body = cs + "*" + ws;
      else body = "(" + cs + ")*" + ws;
    }
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace qn
