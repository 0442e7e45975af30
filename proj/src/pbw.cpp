#include "qn/pbw.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace qn {

namespace {

using Factors = std::vector<std::pair<int, int>>;

// all choices of exponents for the given slots; ranges[k] = {lo, hi}
std::vector<Factors> odometer(const std::vector<int>& slots, const std::vector<std::pair<int, int>>& ranges) {
  std::vector<Factors> acc{{}};
  for (size_t k = 0; k < slots.size(); ++k) {
    std::vector<Factors> nxt;
    for (auto& f : acc)
      for (int e = ranges[k].first; e <= ranges[k].second; ++e) {
        Factors g = f;
        if (e) g.push_back({slots[k], e});
        nxt.push_back(std::move(g));
      }
    acc = std::move(nxt);
  }
  return acc;
}

}  // namespace

std::vector<Mono> enumerate_pbw(int n, int cap, int kcap) {
  Alphabet A(n);
  std::vector<int> sl[3];
  std::vector<std::pair<int, int>> rg[3];
  for (int s = 0; s < A.size(); ++s) {
    const SlotInfo& x = A.info(s);
    int part = x.region + 1;
    sl[part].push_back(s);
    if (x.kind == Kind::Even) rg[part].push_back({0, cap});
    else if (x.kind == Kind::K) rg[part].push_back({-kcap, kcap});
    else rg[part].push_back({0, std::min(cap, 1)});
  }
  auto neg = odometer(sl[0], rg[0]), cart = odometer(sl[1], rg[1]), pos = odometer(sl[2], rg[2]);
  std::vector<Mono> out;
  out.reserve(neg.size() * cart.size() * pos.size());
  for (auto& a : neg)
    for (auto& b : cart)
      for (auto& c : pos) {
        Mono m;
        m.f = a;
        m.f.insert(m.f.end(), b.begin(), b.end());
        m.f.insert(m.f.end(), c.begin(), c.end());
        out.push_back(std::move(m));
      }
  return out;
}

SuiteReport pbw_suite(Engine& eng, int max_len, int random_words, unsigned seed) {
  auto t0 = std::chrono::steady_clock::now();
  const Alphabet& A = eng.alpha();
  const int n = A.n();
  SuiteReport rep;
  rep.name = "PBW n=" + std::to_string(n);

  auto sound = [&](const Word& w, const Element& x) -> std::string {
    std::vector<int> wt = weight_of(A, w);
    int par = parity_of(A, w);
    for (auto& [m, c] : x.terms) {
      if (!is_canonical(A, m)) return "non-canonical monomial " + render(A, m.word());
      if (c.is_zero()) return "zero coefficient kept";
      if (weight_of(A, m) != wt) return "weight changed at " + render(A, m.word());
      if (parity_of(A, m) != par) return "parity changed at " + render(A, m.word());
    }
    return {};
  };

  // every word of length <= max_len over E_a, Eb_a, F_a, Fb_a, K_i^+-1, Kb_i
  std::vector<Letter> gens;
  for (int a = 1; a < n; ++a)
    for (bool odd : {false, true}) {
      gens.push_back(gen_E(A, a, odd));
      gens.push_back(gen_F(A, a, odd));
    }
  for (int i = 1; i <= n; ++i) {
    gens.push_back(Kl(A, i));
    gens.push_back(Kl(A, i, -1));
    gens.push_back(KBl(A, i));
  }
  std::vector<Word> layer{{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<Word> nxt;
    for (auto& w : layer) {
      ++rep.checked;
      try {
        std::string bad = sound(w, eng.normalize(w));
        if (!bad.empty()) rep.failures.push_back(render(A, w) + ": " + bad);
      } catch (const std::exception& ex) {
        rep.failures.push_back(render(A, w) + ": " + ex.what());
      }
      if (len < max_len)
        for (auto& g : gens) {
          Word v = w;
          v.push_back(g);
          nxt.push_back(std::move(v));
        }
    }
    layer = std::move(nxt);
  }

  // canonical monomials are fixed points
  for (auto& m : enumerate_pbw(n, 2, 2)) {
    ++rep.checked;
    Element x = eng.normalize(m.word());
    if (x != Element::mono(m)) rep.failures.push_back("not a fixed point: " + render(A, m.word()));
  }

  // idempotence on random words over the whole alphabet
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len_d(1, 6), slot_d(0, A.size() - 1), sign_d(0, 1);
  for (int k = 0; k < random_words; ++k) {
    Word w;
    for (int l = len_d(rng); l > 0; --l) {
      int s = slot_d(rng);
      int e = A.info(s).kind == Kind::K && sign_d(rng) ? -1 : 1;
      w.push_back({s, e});
    }
    ++rep.checked;
    try {
      Element x = eng.normalize(w);
      std::string bad = sound(w, x);
      if (!bad.empty()) rep.failures.push_back(render(A, w) + ": " + bad);
      else if (eng.normalize(x.words()) != x) rep.failures.push_back("not idempotent: " + render(A, w));
    } catch (const std::exception& ex) {
      rep.failures.push_back(render(A, w) + ": " + ex.what());
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace qn
