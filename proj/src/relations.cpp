#include "qn/relations.hpp"

#include <chrono>
#include <sstream>

namespace qn {

namespace {

using Clock = std::chrono::steady_clock;

Term tm(const RatFunc& c, Word w) { return Term{c, std::move(w)}; }

}  // namespace

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (checked - std::min(checked, failures.size())) << "/" << checked << " passed";
  if (!notes.empty()) os << " (" << notes.size() << " only after correcting the printed form)";
  if (!failures.empty()) os << ", first failure: " << failures.front();
  return os.str();
}

Letter gen_E(const Alphabet& A, int a, bool odd) { return E(A, a, a + 1, odd); }
Letter gen_F(const Alphabet& A, int a, bool odd) { return E(A, a + 1, a, odd); }

std::vector<Relation> qq_relations(const Alphabet& A) {
  const int n = A.n();
  const RatFunc one(1), v = RatFunc::v(1), vi = RatFunc::v(-1);
  const RatFunc vmvi = v - vi;
  const RatFunc c = vmvi / (v + vi);
  std::vector<Relation> R;
  auto add = [&](std::string name, LinWord e) { R.push_back({std::move(name), std::move(e)}); };
  auto K = [&](int i, int e = 1) { return Kl(A, i, e); };
  auto KB = [&](int i) { return KBl(A, i); };
  auto Ea = [&](int a, bool o = false) { return gen_E(A, a, o); };
  auto Fa = [&](int a, bool o = false) { return gen_F(A, a, o); };
  auto idx = [](const char* s, int i, int j = 0) {
    std::string r = std::string(s) + "(" + std::to_string(i);
    if (j) r += "," + std::to_string(j);
    return r + ")";
  };

  // QQ1
  for (int i = 1; i <= n; ++i) {
    add(idx("QQ1 K*Kinv", i), {tm(one, {K(i), K(i, -1)}), tm(-one, {})});
    add(idx("QQ1 Kinv*K", i), {tm(one, {K(i, -1), K(i)}), tm(-one, {})});
    for (int j = 1; j <= n; ++j) {
      if (i != j) add(idx("QQ1 KK", i, j), {tm(one, {K(i), K(j)}), tm(-one, {K(j), K(i)})});
      add(idx("QQ1 KKb", i, j), {tm(one, {K(i), KB(j)}), tm(-one, {KB(j), K(i)})});
      LinWord e{tm(one, {KB(i), KB(j)}), tm(one, {KB(j), KB(i)})};
      if (i == j) {
        RatFunc q = RatFunc(2) / (RatFunc::v(2) - RatFunc::v(-2));
        e.push_back(tm(-q, {K(i, 2)}));
        e.push_back(tm(q, {K(i, -2)}));
      }
      add(idx("QQ1 KbKb", i, j), e);
    }
  }
  // QQ2
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      int p = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
      for (int o = 0; o < 2; ++o) {
        add(idx(o ? "QQ2 K Eb" : "QQ2 K E", i, j), {tm(one, {K(i), Ea(j, o)}), tm(-RatFunc::v(p), {Ea(j, o), K(i)})});
        add(idx(o ? "QQ2 K Fb" : "QQ2 K F", i, j), {tm(one, {K(i), Fa(j, o)}), tm(-RatFunc::v(-p), {Fa(j, o), K(i)})});
      }
    }
  // QQ3
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      if (j == i) {
        add(idx("QQ3 Kb E", i, j), {tm(one, {KB(i), Ea(i)}), tm(-v, {Ea(i), KB(i)}), tm(-one, {Ea(i, true), K(i, -1)})});
        add(idx("QQ3 Kb F", i, j), {tm(one, {KB(i), Fa(i)}), tm(-v, {Fa(i), KB(i)}), tm(one, {Fa(i, true), K(i)})});
        add(idx("QQ3 Kb Eb", i, j),
            {tm(one, {KB(i), Ea(i, true)}), tm(v, {Ea(i, true), KB(i)}), tm(-one, {Ea(i), K(i, -1)})});
        add(idx("QQ3 Kb Fb", i, j), {tm(one, {KB(i), Fa(i, true)}), tm(v, {Fa(i, true), KB(i)}), tm(-one, {Fa(i), K(i)})});
      } else if (j == i - 1) {
        add(idx("QQ3 Kb E", i, j), {tm(v, {KB(i), Ea(j)}), tm(-one, {Ea(j), KB(i)}), tm(one, {K(i, -1), Ea(j, true)})});
        add(idx("QQ3 Kb F", i, j), {tm(v, {KB(i), Fa(j)}), tm(-one, {Fa(j), KB(i)}), tm(-one, {K(i), Fa(j, true)})});
        add(idx("QQ3 Kb Eb", i, j),
            {tm(v, {KB(i), Ea(j, true)}), tm(one, {Ea(j, true), KB(i)}), tm(-one, {K(i, -1), Ea(j)})});
        add(idx("QQ3 Kb Fb", i, j), {tm(v, {KB(i), Fa(j, true)}), tm(one, {Fa(j, true), KB(i)}), tm(-one, {K(i), Fa(j)})});
      } else {
        add(idx("QQ3 Kb E", i, j), {tm(one, {KB(i), Ea(j)}), tm(-one, {Ea(j), KB(i)})});
        add(idx("QQ3 Kb F", i, j), {tm(one, {KB(i), Fa(j)}), tm(-one, {Fa(j), KB(i)})});
        add(idx("QQ3 Kb Eb", i, j), {tm(one, {KB(i), Ea(j, true)}), tm(one, {Ea(j, true), KB(i)})});
        add(idx("QQ3 Kb Fb", i, j), {tm(one, {KB(i), Fa(j, true)}), tm(one, {Fa(j, true), KB(i)})});
      }
    }
  // QQ4
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      LinWord a{tm(one, {Ea(i), Fa(j)}), tm(-one, {Fa(j), Ea(i)})};
      LinWord b{tm(one, {Ea(i, true), Fa(j, true)}), tm(one, {Fa(j, true), Ea(i, true)})};
      LinWord c2{tm(one, {Ea(i), Fa(j, true)}), tm(-one, {Fa(j, true), Ea(i)})};
      LinWord d{tm(one, {Ea(i, true), Fa(j)}), tm(-one, {Fa(j), Ea(i, true)})};
      if (i == j) {
        RatFunc q = one / vmvi;
        a.push_back(tm(-q, {K(i), K(i + 1, -1)}));
        a.push_back(tm(q, {K(i, -1), K(i + 1)}));
        b.push_back(tm(-q, {K(i), K(i + 1)}));
        b.push_back(tm(q, {K(i, -1), K(i + 1, -1)}));
        b.push_back(tm(-vmvi, {KB(i), KB(i + 1)}));
        c2.push_back(tm(-one, {K(i + 1, -1), KB(i)}));
        c2.push_back(tm(one, {KB(i + 1), K(i, -1)}));
        d.push_back(tm(-one, {K(i + 1), KB(i)}));
        d.push_back(tm(one, {KB(i + 1), K(i)}));
      }
      add(idx("QQ4 E F", i, j), a);
      add(idx("QQ4 Eb Fb", i, j), b);
      add(idx("QQ4 E Fb", i, j), c2);
      add(idx("QQ4 Eb F", i, j), d);
    }
  // QQ5
  for (int i = 1; i < n; ++i) {
    add(idx("QQ5 Eb^2", i), {tm(one, {Ea(i, true), Ea(i, true)}), tm(c, {Ea(i), Ea(i)})});
    add(idx("QQ5 Fb^2", i), {tm(one, {Fa(i, true), Fa(i, true)}), tm(-c, {Fa(i), Fa(i)})});
    for (int j = 1; j < n; ++j) {
      int d = i > j ? i - j : j - i;
      if (d != 1) {
        add(idx("QQ5 E Eb", i, j), {tm(one, {Ea(i), Ea(j, true)}), tm(-one, {Ea(j, true), Ea(i)})});
        add(idx("QQ5 F Fb", i, j), {tm(one, {Fa(i), Fa(j, true)}), tm(-one, {Fa(j, true), Fa(i)})});
      }
      if (d > 1) {
        add(idx("QQ5 E E", i, j), {tm(one, {Ea(i), Ea(j)}), tm(-one, {Ea(j), Ea(i)})});
        add(idx("QQ5 F F", i, j), {tm(one, {Fa(i), Fa(j)}), tm(-one, {Fa(j), Fa(i)})});
        add(idx("QQ5 Eb Eb", i, j), {tm(one, {Ea(i, true), Ea(j, true)}), tm(one, {Ea(j, true), Ea(i, true)})});
        add(idx("QQ5 Fb Fb", i, j), {tm(one, {Fa(i, true), Fa(j, true)}), tm(one, {Fa(j, true), Fa(i, true)})});
      }
    }
    if (i + 1 < n) {
      int k = i + 1;
      add(idx("QQ5 E E+1", i), {tm(one, {Ea(i), Ea(k)}), tm(-v, {Ea(k), Ea(i)}), tm(-one, {Ea(i, true), Ea(k, true)}),
                                tm(-v, {Ea(k, true), Ea(i, true)})});
      add(idx("QQ5 E Eb+1", i), {tm(one, {Ea(i), Ea(k, true)}), tm(-v, {Ea(k, true), Ea(i)}),
                                 tm(-one, {Ea(i, true), Ea(k)}), tm(v, {Ea(k), Ea(i, true)})});
      add(idx("QQ5 F F+1", i), {tm(one, {Fa(i), Fa(k)}), tm(-v, {Fa(k), Fa(i)}), tm(one, {Fa(i, true), Fa(k, true)}),
                                tm(v, {Fa(k, true), Fa(i, true)})});
      add(idx("QQ5 F Fb+1", i), {tm(one, {Fa(i), Fa(k, true)}), tm(-v, {Fa(k, true), Fa(i)}),
                                 tm(-one, {Fa(i, true), Fa(k)}), tm(v, {Fa(k), Fa(i, true)})});
    }
  }
  // QQ6
  const RatFunc two = v + vi;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (i - j != 1 && j - i != 1) continue;
      for (int o = 0; o < 2; ++o) {
        Letter x = Ea(i), y = Ea(j, o);
        add(idx(o ? "QQ6 E E Eb" : "QQ6 E E E", i, j),
            {tm(one, {x, x, y}), tm(-two, {x, y, x}), tm(one, {y, x, x})});
        Letter f = Fa(i), g = Fa(j, o);
        add(idx(o ? "QQ6 F F Fb" : "QQ6 F F F", i, j),
            {tm(one, {f, f, g}), tm(-two, {f, g, f}), tm(one, {g, f, f})});
      }
    }
  return R;
}

SuiteReport qq_suite(Engine& eng) {
  auto t0 = Clock::now();
  SuiteReport rep;
  rep.name = "qq n=" + std::to_string(eng.n());
  for (auto& r : qq_relations(eng.alpha())) {
    ++rep.checked;
    try {
      Element e = eng.normalize(r.expr);
      if (!e.is_zero()) rep.failures.push_back(r.name + " -> " + render(eng.alpha(), e));
    } catch (const std::exception& ex) {
      rep.failures.push_back(r.name + ": " + ex.what());
    }
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

SuiteReport confluence_check(Engine& eng) {
  auto t0 = Clock::now();
  const Alphabet& A = eng.alpha();
  SuiteReport rep;
  rep.name = "confluence n=" + std::to_string(A.n());
  std::vector<Letter> letters;
  for (int s = 0; s < A.size(); ++s) {
    if (A.info(s).kind == Kind::K) {
      letters.push_back({s, 1});
      letters.push_back({s, -1});
    } else {
      letters.push_back({s, 1});
    }
  }
  // pair normal forms, reused for the right-hand grouping
  std::vector<Element> pair(letters.size() * letters.size());
  for (size_t a = 0; a < letters.size(); ++a)
    for (size_t b = 0; b < letters.size(); ++b) pair[a * letters.size() + b] = eng.normalize(Word{letters[a], letters[b]});
  for (size_t a = 0; a < letters.size(); ++a)
    for (size_t b = 0; b < letters.size(); ++b) {
      const Element& xy = pair[a * letters.size() + b];
      for (size_t c = 0; c < letters.size(); ++c) {
        ++rep.checked;
        try {
          Element left = eng.left_mult(letters[a], pair[b * letters.size() + c]);
          Element right = eng.right_mult(xy, letters[c]);
          if (left != right)
            rep.failures.push_back(render(A, Word{letters[a], letters[b], letters[c]}) + " differs by " +
                                   render(A, left - right));
        } catch (const std::exception& ex) {
          rep.failures.push_back(render(A, Word{letters[a], letters[b], letters[c]}) + ": " + ex.what());
        }
      }
    }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace qn
