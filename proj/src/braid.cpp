#include "qn/braid.hpp"

#include <chrono>
#include <random>

namespace qn {

namespace {

using Clock = std::chrono::steady_clock;

Term tm(const RatFunc& c, Word w) { return Term{c, std::move(w)}; }

int swap_index(int i, int k) { return k == i ? i + 1 : k == i + 1 ? i : k; }

}  // namespace

LinWord Braid::generator_image(int i, bool inverse, const Letter& g) const {
  const Alphabet& A = eng_.alpha();
  if (i < 1 || i >= A.n()) throw IndexError("braid index " + std::to_string(i) + " invalid for n=" + std::to_string(A.n()));
  const SlotInfo& x = A.info(g.slot);
  const RatFunc one(1), v = RatFunc::v(1), vi = RatFunc::v(-1), d = v - vi;
  auto K = [&](int k, int e = 1) { return Kl(A, k, e); };
  auto KB = [&](int k) { return KBl(A, k); };
  auto Ei = [&](bool o = false) { return gen_E(A, i, o); };
  auto Fi = [&](bool o = false) { return gen_F(A, i, o); };

  if (x.kind == Kind::K) return {tm(one, {K(swap_index(i, x.i), g.exp)})};
  if (x.kind == Kind::KB) {
    int k = x.i;
    if (!inverse) {
      if (k == i) return {tm(one, {KB(i + 1)})};
      if (k == i + 1) return {tm(d, {KB(i + 1), Fi(), Ei()}), tm(-d, {Fi(), Ei(), KB(i + 1)}), tm(one, {KB(i)})};
    } else {
      if (k == i + 1) return {tm(one, {KB(i)})};
      // printed image cancels to K_{i+1}bar; this one inverts the forward map
      if (k == i) return {tm(d, {Ei(), Fi(), KB(i)}), tm(-d, {KB(i), Ei(), Fi()}), tm(one, {KB(i + 1)})};
    }
    return {tm(one, {g})};
  }
  if (x.height != 1) throw std::invalid_argument("braid image requested for a non-simple root letter");
  bool pos = x.i < x.j, odd = x.kind == Kind::Odd;
  int a = pos ? x.i : x.j;
  if (a == i) {
    if (!inverse) {
      if (pos && !odd) return {tm(-one, {Fi(), K(i), K(i + 1, -1)})};
      if (!pos && !odd) return {tm(-one, {K(i, -1), K(i + 1), Ei()})};
      if (pos) return {tm(-one, {KB(i + 1), Fi(), K(i)}), tm(v, {Fi(), KB(i + 1), K(i)})};
      return {tm(-one, {K(i, -1), Ei(), KB(i + 1)}), tm(vi, {KB(i + 1), K(i, -1), Ei()})};
    }
    if (pos && !odd) return {tm(-one, {K(i + 1), K(i, -1), Fi()})};
    if (!pos && !odd) return {tm(-one, {Ei(), K(i), K(i + 1, -1)})};
    if (pos) return {tm(-one, {K(i + 1), Fi(), KB(i)}), tm(v, {K(i + 1), KB(i), Fi()})};
    return {tm(-one, {KB(i), Ei(), K(i + 1, -1)}), tm(vi, {Ei(), KB(i), K(i + 1, -1)})};
  }
  if (a == i - 1 || a == i + 1) {
    Letter y = g;
    y.exp = 1;
    if (!inverse) {
      if (pos) return {tm(-one, {Ei(), y}), tm(vi, {y, Ei()})};
      return {tm(-one, {y, Fi()}), tm(v, {Fi(), y})};
    }
    if (pos) return {tm(-one, {y, Ei()}), tm(vi, {Ei(), y})};
    return {tm(-one, {Fi(), y}), tm(v, {y, Fi()})};
  }
  return {tm(one, {g})};
}

Element Braid::word_image(int i, bool inverse, const Word& w) {
  Element acc(RatFunc(1));
  for (auto& l : w) {
    const SlotInfo& x = eng_.alpha().info(l.slot);
    if (x.kind == Kind::K) {
      acc = eng_.multiply(acc, eng_.normalize(generator_image(i, inverse, l)));
      continue;
    }
    for (int r = 0; r < l.exp; ++r) acc = eng_.multiply(acc, letter_image(i, inverse, {l.slot, 1}));
  }
  return acc;
}

Element Braid::letter_image(int i, bool inverse, const Letter& l) {
  auto key = std::make_tuple(i, inverse, l.slot, l.exp);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const SlotInfo& x = eng_.alpha().info(l.slot);
  Element r;
  if (x.kind == Kind::K || x.kind == Kind::KB || x.height == 1) {
    r = eng_.normalize(generator_image(i, inverse, l));
  } else {
    for (auto& t : eng_.expand_to_generators(l.slot)) r += word_image(i, inverse, t.w) * t.c;
  }
  cache_.emplace(key, r);
  return r;
}

Element Braid::apply(int i, bool inverse, const Element& x) {
  if (i < 1 || i >= eng_.n()) throw IndexError("braid index " + std::to_string(i) + " invalid for n=" + std::to_string(eng_.n()));
  Element out;
  for (auto& [m, c] : x.terms) out += word_image(i, inverse, m.word()) * c;
  return out;
}

Element Braid::omega(const Element& x) {
  const Alphabet& A = eng_.alpha();
  LinWord lw;
  for (auto& [m, c] : x.terms) {
    Word r;
    for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
      const SlotInfo& s = A.info(it->first);
      if (s.kind == Kind::K) r.push_back({it->first, -it->second});
      else if (s.kind == Kind::KB) r.push_back({it->first, it->second});
      else r.push_back({A.root_slot(s.j, s.i, s.kind == Kind::Odd), it->second});
    }
    lw.push_back({c.bar(), std::move(r)});
  }
  return eng_.normalize(lw);
}

Element Braid::omega_via_generators(const Element& x) {
  const Alphabet& A = eng_.alpha();
  LinWord lw;
  for (auto& [m, c] : x.terms)
    for (auto& t : eng_.expand_to_generators(m.word())) {
      Word r;
      for (auto it = t.w.rbegin(); it != t.w.rend(); ++it) {
        const SlotInfo& s = A.info(it->slot);
        if (s.kind == Kind::K) r.push_back({it->slot, -it->exp});
        else if (s.kind == Kind::KB) r.push_back(*it);
        else r.push_back({A.root_slot(s.j, s.i, s.kind == Kind::Odd), it->exp});
      }
      lw.push_back({(c * t.c).bar(), std::move(r)});
    }
  return eng_.normalize(lw);
}

Element Braid::root_vector_via_braid(int i, int j, bool odd) {
  const Alphabet& A = eng_.alpha();
  int lo = std::min(i, j), hi = std::max(i, j);
  if (lo < 1 || hi > A.n() || i == j) throw IndexError("root index invalid");
  Letter g = i < j ? gen_E(A, hi - 1, odd) : gen_F(A, hi - 1, odd);
  Element x = eng_.normalize(Word{g});
  for (int k = hi - 2; k >= lo; --k) x = apply(k, false, x);
  return x;
}

SuiteReport braid_suite(Engine& eng) {
  auto t0 = Clock::now();
  const Alphabet& A = eng.alpha();
  const int n = A.n();
  Braid B(eng);
  SuiteReport rep;
  rep.name = "braid n=" + std::to_string(n);
  auto check = [&](const std::string& what, const Element& e) {
    ++rep.checked;
    if (!e.is_zero()) rep.failures.push_back(what + " -> " + render(A, e));
  };
  auto guarded = [&](const std::string& what, auto&& f) {
    try {
      f();
    } catch (const std::exception& ex) {
      ++rep.checked;
      rep.failures.push_back(what + ": " + ex.what());
    }
  };

  std::vector<Letter> gens;
  for (int k = 1; k <= n; ++k) {
    gens.push_back(Kl(A, k, 1));
    gens.push_back(Kl(A, k, -1));
    gens.push_back(KBl(A, k));
  }
  for (int a = 1; a < n; ++a)
    for (int o = 0; o < 2; ++o) {
      gens.push_back(gen_E(A, a, o));
      gens.push_back(gen_F(A, a, o));
    }

  auto rels = qq_relations(A);
  for (int i = 1; i < n; ++i) {
    for (int inv = 0; inv < 2; ++inv)
      for (auto& r : rels) {
        std::string what = std::string(inv ? "Tinv" : "T") + std::to_string(i) + " " + r.name;
        // the relation itself normalizes to 0, so the images are taken word by word
        guarded(what, [&] {
          Element s;
          for (auto& t : r.expr) {
            Element w(RatFunc(1));
            for (auto& l : t.w) w = eng.multiply(w, eng.normalize(B.generator_image(i, inv, l)));
            s += w * t.c;
          }
          check(what, s);
        });
      }
    for (auto& g : gens) {
      Element x = eng.normalize(Word{g});
      std::string nm = render(A, Word{g});
      guarded("T" + std::to_string(i) + "Tinv " + nm,
              [&] { check("T" + std::to_string(i) + "Tinv " + nm, B.apply(i, false, B.apply(i, true, x)) - x); });
      guarded("Tinv" + std::to_string(i) + "T " + nm,
              [&] { check("Tinv" + std::to_string(i) + "T " + nm, B.apply(i, true, B.apply(i, false, x)) - x); });
    }
  }
  for (int i = 1; i + 1 < n; ++i)
    for (auto& g : gens) {
      std::string nm = "braid relation i=" + std::to_string(i) + " on " + render(A, Word{g});
      guarded(nm, [&] {
        Element x = eng.normalize(Word{g});
        Element l = B.apply(i, false, B.apply(i + 1, false, B.apply(i, false, x)));
        Element r = B.apply(i + 1, false, B.apply(i, false, B.apply(i + 1, false, x)));
        check(nm, l - r);
      });
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int o = 0; o < 2; ++o) {
        std::string nm = "root via braid " + A.name(A.root_slot(i, j, o));
        guarded(nm, [&] { check(nm, B.root_vector_via_braid(i, j, o) - eng.normalize(Word{E(A, i, j, o)})); });
      }
    }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

SuiteReport omega_suite(Engine& eng, unsigned seed, int corpus) {
  auto t0 = Clock::now();
  const Alphabet& A = eng.alpha();
  Braid B(eng);
  SuiteReport rep;
  rep.name = "omega n=" + std::to_string(A.n());
  auto check = [&](const std::string& what, auto&& f) {
    ++rep.checked;
    try {
      Element e = f();
      if (!e.is_zero()) rep.failures.push_back(what + " -> " + render(A, e));
    } catch (const std::exception& ex) {
      rep.failures.push_back(what + ": " + ex.what());
    }
  };
  for (auto& r : qq_relations(A)) {
    check("Omega " + r.name, [&] {
      // reverse each word literally and bar the coefficient
      LinWord lw;
      for (auto& t : r.expr) {
        Word w;
        for (auto it = t.w.rbegin(); it != t.w.rend(); ++it) {
          const SlotInfo& s = A.info(it->slot);
          if (s.kind == Kind::K) w.push_back({it->slot, -it->exp});
          else if (s.kind == Kind::KB) w.push_back(*it);
          else w.push_back({A.root_slot(s.j, s.i, s.kind == Kind::Odd), it->exp});
        }
        lw.push_back({t.c.bar(), std::move(w)});
      }
      return eng.normalize(lw);
    });
  }
  for (int s = 0; s < A.size(); ++s) {
    Element x = eng.normalize(Word{{s, 1}});
    check("Omega letter vs generators " + A.name(s), [&] { return B.omega(x) - B.omega_via_generators(x); });
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> slot(0, A.size() - 1), len(1, 5), ex(-2, 2);
  for (int c = 0; c < corpus; ++c) {
    Word w;
    int L = len(rng);
    for (int k = 0; k < L; ++k) {
      int s = slot(rng);
      int e = A.info(s).kind == Kind::K ? (ex(rng) ? ex(rng) : 1) : 1;
      if (e == 0) e = -1;
      w.push_back({s, e});
    }
    RatFunc coeff = RatFunc::v(ex(rng)) + RatFunc(c % 3);
    Element x = eng.normalize(LinWord{{coeff, w}});
    check("Omega^2 on " + render(A, w), [&] { return B.omega(B.omega(x)) - x; });
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace qn
