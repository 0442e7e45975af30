#include "qn/integral.hpp"

#include <chrono>
#include <mutex>
#include <random>
#include <sstream>

#include "qn/braid.hpp"
#include "qn/expr.hpp"
#include "qn/identities.hpp"

namespace qn {

namespace {

using Clock = std::chrono::steady_clock;
using Poly1 = std::map<int, RatFunc>;  // Laurent polynomial in one K

Poly1 mul(const Poly1& a, const Poly1& b) {
  Poly1 r;
  for (auto& [e, c] : a)
    for (auto& [f, d] : b) {
      RatFunc& x = r[e + f];
      x += c * d;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

Poly1 bracket_poly(int c, int t) {
  Poly1 p{{0, RatFunc(1)}};
  for (int s = 1; s <= t; ++s) {
    RatFunc den = RatFunc::v(s) - RatFunc::v(-s);
    Poly1 f{{1, RatFunc::v(c - s + 1) / den}, {-1, -RatFunc::v(-c + s - 1) / den}};
    p = mul(p, f);
  }
  return p;
}

// [K;0 over t], cached
const Poly1& bracket0(int t) {
  static std::mutex mu;
  static std::vector<Poly1> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (int(cache.size()) <= t) cache.push_back(bracket_poly(0, int(cache.size())));
  return cache[size_t(t)];
}

// coordinates of p in the basis K^tau [K;0 over t]. The basis elements with
// t <= T span exactly the Laurent polynomials supported on [-T, T+1], so the
// top and bottom coefficients can be peeled off one T at a time.
std::map<std::pair<int, int>, RatFunc> univariate_to_basis(Poly1 p) {
  std::map<std::pair<int, int>, RatFunc> out;
  if (p.empty()) return out;
  int T = std::max({0, p.rbegin()->first - 1, -p.begin()->first});
  for (int t = T; t >= 0; --t) {
    const Poly1 b = bracket0(t);
    auto peel = [&](int deg, int tau) {
      auto it = p.find(deg);
      if (it == p.end()) return;
      RatFunc lead = b.at(deg - tau);
      RatFunc a = it->second / lead;
      out[{tau, t}] = a;
      for (auto& [e, c] : b) {
        RatFunc& x = p[e + tau];
        x -= a * c;
        if (x.is_zero()) p.erase(e + tau);
      }
    };
    peel(t + 1, 1);
    peel(-t, 0);
  }
  if (!p.empty()) throw std::logic_error("Cartan basis conversion left a remainder");
  return out;
}

}  // namespace

Element divided_power(Engine& eng, const Letter& l, int m) {
  const SlotInfo& x = eng.alpha().info(l.slot);
  if (m < 0) throw std::invalid_argument("divided power with negative exponent");
  if (x.kind == Kind::Odd && m >= 2) throw std::invalid_argument("divided powers of odd letters are undefined");
  if (x.kind == Kind::K || x.kind == Kind::KB) throw std::invalid_argument("divided power of a Cartan letter");
  if (m == 0) return Element(RatFunc(1));
  return eng.normalize(Word{{l.slot, m}}) * RatFunc(quantum_factorial(m)).inverse();
}

Element kbracket_expand(Engine& eng, int i, int c, int t) {
  if (t < 0) throw std::invalid_argument("bracket with negative t");
  const Alphabet& A = eng.alpha();
  int ks = A.k_slot(i);
  Element r;
  for (auto& [e, co] : bracket_poly(c, t)) r.add(e ? Mono{{{ks, e}}} : Mono{}, co);
  return r;
}

Element kbracket_expand(Engine& eng, int i, int j, int c, int t) {
  if (t < 0) throw std::invalid_argument("bracket with negative t");
  const Alphabet& A = eng.alpha();
  int si = A.k_slot(i), sj = A.k_slot(j);
  Element r;
  for (auto& [e, co] : bracket_poly(c, t)) {
    Mono m;
    if (e) {
      m.f = {{si, e}, {sj, -e}};
      if (sj < si) std::swap(m.f[0], m.f[1]);
    }
    r.add(m, co);
  }
  return r;
}

DExpansion to_divided(const Engine& eng, const Element& x) {
  const Alphabet& A = eng.alpha();
  const int n = A.n();
  // group by root parts and Kb pattern; the K part is a polynomial in K_1..K_n
  std::map<DMono, std::map<std::vector<int>, RatFunc>> groups;
  for (auto& [m, c] : x.terms) {
    DMono key;
    key.cartan.assign(size_t(n), {0, 0, 0});
    std::vector<int> sigma(size_t(n), 0);
    RatFunc scale(1);
    for (auto& [s, e] : m.f) {
      const SlotInfo& info = A.info(s);
      if (info.kind == Kind::K) {
        sigma[size_t(info.i - 1)] = e;
      } else if (info.kind == Kind::KB) {
        key.cartan[size_t(info.i - 1)][2] = e;
      } else {
        (info.region < 0 ? key.neg : key.pos).f.push_back({s, e});
        if (info.kind == Kind::Even) scale *= RatFunc(quantum_factorial(e));
      }
    }
    RatFunc& slot = groups[key][sigma];
    slot += c * scale;
  }
  DExpansion out;
  for (auto& [key, poly] : groups) {
    // convert one variable at a time; a converted coordinate holds 2t+tau
    std::map<std::vector<int>, RatFunc> cur;
    for (auto& [k, c] : poly)
      if (!c.is_zero()) cur[k] = c;
    for (int i = 0; i < n; ++i) {
      std::map<std::vector<int>, Poly1> by_rest;
      for (auto& [k, c] : cur) {
        std::vector<int> rest = k;
        rest[size_t(i)] = 0;
        by_rest[rest][k[size_t(i)]] = c;
      }
      std::map<std::vector<int>, RatFunc> nxt;
      for (auto& [rest, p] : by_rest)
        for (auto& [tt, c] : univariate_to_basis(p)) {
          std::vector<int> k = rest;
          k[size_t(i)] = 2 * tt.second + tt.first;
          if (!c.is_zero()) nxt[k] += c;
        }
      cur = std::move(nxt);
    }
    for (auto& [k, c] : cur) {
      if (c.is_zero()) continue;
      DMono d = key;
      for (int i = 0; i < n; ++i) {
        d.cartan[size_t(i)][0] = k[size_t(i)] % 2;
        d.cartan[size_t(i)][1] = k[size_t(i)] / 2;
      }
      out[d] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Element from_divided(Engine& eng, const DMono& d) {
  const Alphabet& A = eng.alpha();
  RatFunc scale(1);
  for (const Mono* part : {&d.neg, &d.pos})
    for (auto& [s, e] : part->f)
      if (A.info(s).kind == Kind::Even) scale *= RatFunc(quantum_factorial(e));
  // product of per-index Cartan polynomials, kept in canonical slot order
  std::vector<std::pair<std::vector<std::pair<int, int>>, RatFunc>> cart{{{}, scale.inverse()}};
  for (int i = 1; i <= A.n(); ++i) {
    auto [tau, t, xi] = d.cartan[size_t(i - 1)];
    Poly1 p = bracket0(t);
    decltype(cart) nxt;
    for (auto& [f, c] : cart)
      for (auto& [e, co] : p) {
        auto g = f;
        if (e + tau) g.push_back({A.k_slot(i), e + tau});
        if (xi) g.push_back({A.kb_slot(i), 1});
        nxt.push_back({std::move(g), c * co});
      }
    cart = std::move(nxt);
  }
  Element r;
  for (auto& [f, c] : cart) {
    Mono m;
    m.f = d.neg.f;
    m.f.insert(m.f.end(), f.begin(), f.end());
    m.f.insert(m.f.end(), d.pos.f.begin(), d.pos.f.end());
    r.add(m, c);
  }
  return r;
}

std::string render(const Alphabet& A, const DMono& d) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "*";
    first = false;
  };
  auto part = [&](const Mono& m) {
    for (auto& [s, e] : m.f) {
      sep();
      os << A.name(s);
      if (A.info(s).kind == Kind::Even && e != 1) os << "^(" << e << ")";
    }
  };
  part(d.neg);
  for (int i = 1; i <= int(d.cartan.size()); ++i) {
    auto [tau, t, xi] = d.cartan[size_t(i - 1)];
    if (tau) sep(), os << "K[" << i << "]";
    if (t) sep(), os << "KB[" << i << ";0," << t << "]";
    if (xi) sep(), os << "Kb[" << i << "]";
  }
  part(d.pos);
  return first ? "1" : os.str();
}

IntegralityCertificate integrality_check(const Engine& eng, const Element& x) {
  IntegralityCertificate cert;
  cert.expansion = to_divided(eng, x);
  for (auto& [m, c] : cert.expansion)
    if (!c.is_integral()) {
      cert.integral = false;
      cert.offending = render(eng.alpha(), m) + " with coefficient " + c.str();
      break;
    }
  return cert;
}

std::vector<DMono> enumerate_divided_basis(int n, int cap) {
  Alphabet A(n);
  std::vector<std::vector<std::pair<int, int>>> roots_neg{{}}, roots_pos{{}};
  auto extend = [&](std::vector<std::vector<std::pair<int, int>>>& acc, int region) {
    for (int s = 0; s < A.size(); ++s) {
      const SlotInfo& x = A.info(s);
      if (x.region != region) continue;
      int hi = x.kind == Kind::Even ? cap : 1;
      std::vector<std::vector<std::pair<int, int>>> nxt;
      for (auto& f : acc)
        for (int e = 0; e <= hi; ++e) {
          auto g = f;
          if (e) g.push_back({s, e});
          nxt.push_back(std::move(g));
        }
      acc = std::move(nxt);
    }
  };
  extend(roots_neg, -1);
  extend(roots_pos, 1);
  std::vector<std::vector<std::array<int, 3>>> carts{{}};
  for (int i = 0; i < n; ++i) {
    decltype(carts) nxt;
    for (auto& c : carts)
      for (int tau = 0; tau < 2; ++tau)
        for (int t = 0; t <= cap; ++t)
          for (int xi = 0; xi < 2; ++xi) {
            auto g = c;
            g.push_back({tau, t, xi});
            nxt.push_back(std::move(g));
          }
    carts = std::move(nxt);
  }
  std::vector<DMono> out;
  for (auto& ng : roots_neg)
    for (auto& c : carts)
      for (auto& p : roots_pos) out.push_back(DMono{Mono{ng}, Mono{p}, c});
  return out;
}

// ---------------------------------------------------------------- suites

namespace {

struct RootPair {
  int a, k, b;  // alpha = alpha_{a,k}, alpha' = alpha_{k,b}, alpha + alpha' = alpha_{a,b}
};

std::vector<RootPair> adjacent_pairs(int n) {
  std::vector<RootPair> r;
  for (int a = 1; a <= n; ++a)
    for (int k = a + 1; k <= n; ++k)
      for (int b = k + 1; b <= n; ++b) r.push_back({a, k, b});
  return r;
}

std::string root(const char* kind, int i, int j) {
  return std::string(kind) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

}  // namespace

SuiteReport qz_suite(Engine& eng, int cap) {
  auto t0 = Clock::now();
  const int n = eng.n();
  Braid br(eng);
  Evaluator ev(eng, br);
  SuiteReport rep;
  rep.name = "qz n=" + std::to_string(n);
  using V = std::vector<std::pair<std::string, long>>;
  auto D = [&](const std::string& name, const std::string& l, const std::string& r, const V& vars,
               const std::string& fl = "", const std::string& fr = "", const std::string& note = "") {
    std::string nm = name;
    for (auto& [k, x] : vars) nm += " " + k + "=" + std::to_string(x);
    Display d{nm, fill(l, vars), fill(r, vars), fl.empty() ? "" : fill(fl, vars), fr.empty() ? "" : fill(fr, vars), note};
    check_display(ev, rep, d);
  };

  // QZ1
  for (int i = 1; i <= n; ++i) {
    V vi{{"i", i}};
    D("QZ1 K Kinv", "K[{i}]*K[{i}]^-1", "1", vi);
    D("QZ1 Kinv K", "K[{i}]^-1*K[{i}]", "1", vi);
    D("QZ1 bracket t=0", "KB[{i};0,0]", "1", vi);
    D("QZ1 Kb^2", "Kb[{i}]*Kb[{i}]", "v^-1*K[{i}]*KB[{i};0,1] - (1 - v^-2)*KB[{i};0,2]", vi);
    for (int t = 0; t <= cap; ++t)
      for (int j = 1; j <= n; ++j) {
        V w{{"i", i}, {"j", j}, {"t", t}};
        D("QZ1 bracket commutes with K", "KB[{i};0,{t}]*K[{j}]", "K[{j}]*KB[{i};0,{t}]", w);
        D("QZ1 bracket commutes with Kinv", "KB[{i};0,{t}]*K[{j}]^-1", "K[{j}]^-1*KB[{i};0,{t}]", w);
        D("QZ1 bracket commutes with Kb", "KB[{i};0,{t}]*Kb[{j}]", "Kb[{j}]*KB[{i};0,{t}]", w);
        for (int u = 0; u <= cap; ++u) {
          V w2{{"i", i}, {"j", j}, {"t", t}, {"u", u}};
          D("QZ1 brackets commute", "KB[{i};0,{t}]*KB[{j};0,{u}]", "KB[{j};0,{u}]*KB[{i};0,{t}]", w2);
        }
      }
    // the three binomial identities, r + s <= cap + 1
    for (int r = 1; r <= cap + 1; ++r)
      for (int s = 0; r + s <= cap + 1; ++s) {
        std::string lhs;
        for (int t = 0; t <= s; ++t) {
          V w{{"i", i}, {"r", r}, {"s", s}, {"t", t}};
          lhs += fill(std::string(t ? " + " : "") + "(-1)^{t}*v^{r*(s-t)}*qbinom({r+t-1},{t})*K[{i}]^{t}*KB[{i};0,{r}]*KB[{i};0,{s-t}]", w);
        }
        D("QZ1 bracket product", lhs, "qbinom({r+s},{r})*KB[{i};0,{r+s}]", {{"i", i}, {"r", r}, {"s", s}});
      }
    for (int r = 0; r <= cap + 1; ++r)
      for (int c = 1; c <= cap; ++c) {
        std::string rhs;
        for (int s = 0; s <= r; ++s)
          rhs += fill(std::string(s ? " + " : "") + "(-1)^{s}*v^{c*(r-s)}*qbinom({c+s-1},{s})*K[{i}]^{s}*KB[{i};0,{r-s}]",
                      {{"i", i}, {"r", r}, {"s", s}, {"c", c}});
        D("QZ1 bracket shift down", "KB[{i};{-c},{r}]", rhs, {{"i", i}, {"r", r}, {"c", c}});
      }
    for (int r = 0; r <= cap + 1; ++r)
      for (int c = 0; c <= cap; ++c) {
        std::string rhs;
        for (int s = 0; s <= r; ++s)
          rhs += fill(std::string(s ? " + " : "") + "v^{c*(r-s)}*qbinom({c},{s})*K[{i}]^{-s}*KB[{i};0,{r-s}]",
                      {{"i", i}, {"r", r}, {"s", s}, {"c", c}});
        D("QZ1 bracket shift up", "KB[{i};{c},{r}]", rhs, {{"i", i}, {"r", r}, {"c", c}});
      }
  }

  // QZ2
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      int p = (i == j) - (i == j + 1);
      int dm = (i == j) - (i - 1 == j), dp = (i == j) + (i - 1 == j);
      for (int m = 0; m <= cap; ++m) {
        V w{{"i", i}, {"j", j}, {"m", m}, {"p", p}, {"dm", dm}, {"dp", dp}};
        D("QZ2 K E^(m)", "K[{i}]*E[{j}]^({m})", "v^{m*p}*E[{j}]^({m})*K[{i}]", w);
        D("QZ2 K F^(m)", "K[{i}]*F[{j}]^({m})", "v^{-m*p}*F[{j}]^({m})*K[{i}]", w);
        D("QZ2 Kb E^(m)", "Kb[{i}]*E[{j}]^({m})", "v^{m*p}*E[{j}]^({m})*Kb[{i}] + ({dm})*Eb[{j}]*E[{j}]^({m-1})*K[{i}]^-1", w);
        D("QZ2 Kb F^(m)", "Kb[{i}]*F[{j}]^({m})", "v^{m*p}*F[{j}]^({m})*Kb[{i}] - ({dm})*F[{j}]^({m-1})*Fb[{j}]*K[{i}]", w);
        for (int c = -cap; c <= cap; ++c)
          for (int t = 0; t <= cap; ++t) {
            V w2 = w;
            w2.push_back({"c", c});
            w2.push_back({"t", t});
            D("QZ2 bracket E^(m)", "KB[{i};{c},{t}]*E[{j}]^({m})", "E[{j}]^({m})*KB[{i};{c+m*p},{t}]", w2);
            D("QZ2 bracket F^(m)", "KB[{i};{c},{t}]*F[{j}]^({m})", "F[{j}]^({m})*KB[{i};{c-m*p},{t}]", w2);
            if (m == 1) {
              D("QZ2 bracket Eb", "KB[{i};{c},{t}]*Eb[{j}]", "Eb[{j}]*KB[{i};{c+p},{t}]", w2);
              D("QZ2 bracket Fb", "KB[{i};{c},{t}]*Fb[{j}]", "Fb[{j}]*KB[{i};{c-p},{t}]", w2);
            }
          }
      }
      V w{{"i", i}, {"j", j}, {"p", p}, {"dm", dm}, {"dp", dp}};
      D("QZ2 K Eb", "K[{i}]*Eb[{j}]", "v^{p}*Eb[{j}]*K[{i}]", w);
      D("QZ2 K Fb", "K[{i}]*Fb[{j}]", "v^{-p}*Fb[{j}]*K[{i}]", w);
      D("QZ2 Kb Eb", "Kb[{i}]*Eb[{j}]", "-v^{p}*Eb[{j}]*Kb[{i}] + ({dp})*E[{j}]*K[{i}]^-1", w);
      D("QZ2 Kb Fb", "Kb[{i}]*Fb[{j}]", "-v^{p}*Fb[{j}]*Kb[{i}] + ({dp})*F[{j}]*K[{i}]", w);
    }

  // QZ3
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int m = 0; m <= cap; ++m)
        for (int k = 0; k <= cap; ++k) {
          V w{{"i", i}, {"j", j}, {"m", m}, {"n", k}};
          if (i != j) {
            D("QZ3 E^(m) F^(n)", "E[{i}]^({m})*F[{j}]^({n})", "F[{j}]^({n})*E[{i}]^({m})", w);
            if (k == 0) D("QZ3 E^(m) Fb", "E[{i}]^({m})*Fb[{j}]", "Fb[{j}]*E[{i}]^({m})", w);
            if (m == 0) D("QZ3 Eb F^(n)", "Eb[{i}]*F[{j}]^({n})", "F[{j}]^({n})*Eb[{i}]", w);
            if (m == 0 && k == 0) D("QZ3 Eb Fb", "Eb[{i}]*Fb[{j}]", "-Fb[{j}]*Eb[{i}]", w);
            continue;
          }
          std::string lit, fix;
          for (int t = 0; t <= std::min(m, k); ++t) {
            V wt = w;
            wt.push_back({"t", t});
            lit += fill(std::string(t ? " + " : "") + "F[{i}]^({n-t})*KB[{i};{2*t-m-n},{t}]*E[{i}]^({m-t})", wt);
            fix += fill(std::string(t ? " + " : "") + "F[{i}]^({n-t})*KB[{i},{i+1};{2*t-m-n},{t}]*E[{i}]^({m-t})", wt);
          }
          D("QZ3 E^(m) F^(n) same i", "E[{i}]^({m})*F[{i}]^({n})", lit, w, "E[{i}]^({m})*F[{i}]^({n})", fix,
            "the bracket taken in K_i K_{i+1}^-1 instead of K_i");
          if (k == 0) {
            D("QZ3 E^(m) Fb same i", "E[{i}]^({m})*Fb[{i}]",
              "Fb[{i}]*E[{i}]^({m}) - Kb[{i+1}]*E[{i}]^({m-1})*K[{i}]^-1 + Kb[{i}]*E[{i}]^({m-1})*K[{i+1}]^-1 - Eb[{i}]*E[{i}]^({m-2})*K[{i+1}]^-1*K[{i}]^-1",
              w);
          }
          if (m == 0) {
            D("QZ3 Eb F^(n) same i", "Eb[{i}]*F[{i}]^({n})",
              "F[{i}]^({n})*Eb[{i}] - K[{i}]*F[{i}]^({n-1})*Kb[{i+1}] + K[{i+1}]*F[{i}]^({n-1})*Kb[{i}] - F[{i}]^({n-2})*Fb[{i}]*K[{i}]*K[{i+1}]",
              w);
          }
          if (m == 0 && k == 0)
            D("QZ3 Eb Fb same i", "Eb[{i}]*Fb[{i}]",
              "-Fb[{i}]*Eb[{i}] + (K[{i}]*K[{i+1}] - K[{i}]^-1*K[{i+1}]^-1)/(v - v^-1) + (v - v^-1)*Kb[{i}]*Kb[{i+1}]", w);
        }

  // QZ4 / QZ5 on every positive root
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      for (const char* fam : {"E", "F"}) {
        bool e = fam[0] == 'E';
        std::string X = root(fam, a, b), Xb = root(e ? "Eb" : "Fb", a, b);
        std::string tag = e ? "QZ4 " : "QZ5 ";
        for (int m = 0; m <= cap; ++m)
          for (int k = 0; m + k <= cap + 1; ++k) {
            V w{{"m", m}, {"n", k}};
            D(tag + "divided powers " + X, X + "^({m})*" + X + "^({n})", "qbinom({m+n},{n})*" + X + "^({m+n})", w);
          }
        D(tag + "zeroth power " + X, X + "^(0)", "1", {});
        for (int m = 0; m <= cap; ++m) D(tag + "X^(m) Xb " + X, X + "^({m})*" + Xb, Xb + "*" + X + "^({m})", {{"m", m}});
        D(tag + "odd square " + X, Xb + "^(2)", std::string(e ? "-" : "") + "(v - v^-1)/(v + v^-1)*" + X + "^(2)", {});
        // (alpha, alpha_i) = 0 with i > g(alpha)
        for (int i = a + 1; i < n; ++i) {
          int pr = (a == i) - (a == i + 1) - (b == i) + (b == i + 1);
          if (pr != 0) continue;
          std::string S = e ? "E[{i}]" : "F[{i}]", Sb = e ? "Eb[{i}]" : "Fb[{i}]";
          for (int m = 0; m <= cap; ++m)
            for (int k = 0; k <= cap; ++k) {
              V w{{"i", i}, {"m", m}, {"n", k}};
              D(tag + "orthogonal X_i^(m) X^(n) " + X, S + "^({m})*" + X + "^({n})", X + "^({n})*" + S + "^({m})", w);
              if (k == 0) D(tag + "orthogonal X_i^(m) Xb " + X, S + "^({m})*" + Xb, Xb + "*" + S + "^({m})", w);
              if (m == 0) D(tag + "orthogonal Xb_i X^(n) " + X, Sb + "*" + X + "^({n})", X + "^({n})*" + Sb, w);
              if (m == 0 && k == 0) D(tag + "orthogonal Xb_i Xb " + X, Sb + "*" + Xb, "-" + Xb + "*" + Sb, w);
            }
        }
      }
    }

  // QZ4 / QZ5, (alpha, alpha') = -1 with g(alpha) < g(alpha')
  for (auto [a, k, b] : adjacent_pairs(n)) {
    std::string A_ = root("E", a, k), Ap = root("E", k, b), S = root("E", a, b);
    std::string Ab = root("Eb", a, k), Apb = root("Eb", k, b), Sb = root("Eb", a, b);
    std::string FA = root("F", a, k), FAp = root("F", k, b), FS = root("F", a, b);
    std::string FAb = root("Fb", a, k), FApb = root("Fb", k, b), FSb = root("Fb", a, b);
    std::string rt = " (" + std::to_string(a) + "," + std::to_string(k) + "," + std::to_string(b) + ")";
    for (int m = 0; m <= cap; ++m)
      for (int q = 0; q <= cap; ++q) {
        V w{{"m", m}, {"n", q}};
        std::string lit, fix, flit, ffix;
        for (int j = 0; j <= std::min(m, q); ++j) {
          V wj = w;
          wj.push_back({"j", j});
          std::string pre = j ? " + " : "";
          lit += fill(pre + "v^{j+(m-j)*(n-j)}*" + A_ + "^({n-j})*" + S + "^({j})*" + A_ + "^({m-j})", wj);
          fix += fill(pre + "v^{j+(m-j)*(n-j)}*" + A_ + "^({n-j})*" + S + "^({j})*" + Ap + "^({m-j})", wj);
          flit += fill(pre + "v^{-j-(m-j)*(n-j)}*" + FA + "^({n-j})*" + FS + "^({j})*" + FA + "^({m-j})", wj);
          ffix += fill(pre + "v^{-j-(m-j)*(n-j)}*" + FAp + "^({n-j})*" + FS + "^({j})*" + FA + "^({m-j})", wj);
        }
        D("QZ4 X'^(m) X^(n) sum" + rt, Ap + "^({m})*" + A_ + "^({n})", lit, w, Ap + "^({m})*" + A_ + "^({n})", fix,
          "last factor E_{alpha'}^(m-j)");
        D("QZ5 X^(m) X'^(n) sum" + rt, FA + "^({m})*" + FAp + "^({n})", flit, w, FA + "^({m})*" + FAp + "^({n})", ffix,
          "first factor F_{alpha'}^(n-j)");
        D("QZ4 E^(m) S^(n)" + rt, "v^{m*n}*" + Ap + "^({m})*" + S + "^({n})", S + "^({n})*" + Ap + "^({m})", w);
        D("QZ4 A^(m) S^(n)" + rt, A_ + "^({m})*" + S + "^({n})", "v^{m*n}*" + S + "^({n})*" + A_ + "^({m})", w);
        D("QZ5 S^(m) A'^(n)" + rt, FS + "^({m})*" + FAp + "^({n})", "v^{m*n}*" + FAp + "^({n})*" + FS + "^({m})", w);
        D("QZ5 A^(m) S^(n)" + rt, FA + "^({m})*" + FS + "^({n})", "v^{m*n}*" + FS + "^({n})*" + FA + "^({m})", w);
      }
    for (int m = 0; m <= cap; ++m) {
      V w{{"m", m}};
      D("QZ4 Eb' E^(m)" + rt, Apb + "*" + A_ + "^({m})", "v^{m}*" + A_ + "^({m})*" + Apb + " + v^{m}*" + Sb + "*" + A_ + "^({m-1})", w);
      D("QZ4 S^(m) Eb" + rt, "v^{m}*" + S + "^({m})*" + Ab, Ab + "*" + S + "^({m})", w);
      D("QZ4 E^(m) Sb" + rt, A_ + "^({m})*" + Sb, "v^{m}*" + Sb + "*" + A_ + "^({m})", w);
      D("QZ4 E'^(m) Sb" + rt, Ap + "^({m})*" + Sb,
        "v^{m}*" + Sb + "*" + Ap + "^({m}) - v^{m}*" + Ap + "^({m-1})*" + S + "*" + Apb + " + v^{m-1}*" + Ap + "^({m-1})*" + Apb + "*" + S, w);
      D("QZ5 Fb' F^(n)" + rt, FApb + "*" + FA + "^({m})", "v^{m}*" + FA + "^({m})*" + FApb + " - " + FA + "^({m-1})*" + FSb, w);
      D("QZ5 Fb S^(m)" + rt, FAb + "*" + FS + "^({m})", "v^{m}*" + FS + "^({m})*" + FAb, w);
      D("QZ5 Sb F^(m)" + rt, "v^{m}*" + FSb + "*" + FA + "^({m})", FA + "^({m})*" + FSb, w);
      D("QZ5 F'^(m) Sb" + rt, FAp + "^({m})*" + FSb,
        "v^{m}*" + FSb + "*" + FAp + "^({m}) + " + FApb + "*" + FS + "*" + FAp + "^({m-1}) - v*" + FS + "*" + FApb + "*" + FAp + "^({m-1})", w);
    }
    D("QZ4 Eb Sb" + rt, Ab + "*" + Sb, "-v*" + Sb + "*" + Ab, {});
    D("QZ4 v Sb Eb'" + rt, "v*" + Sb + "*" + Apb, "-" + Apb + "*" + Sb + " - (v - v^-1)*" + S + "*" + Ap, {});
    D("QZ5 Fb Sb" + rt, FAb + "*" + FSb, "-v*" + FSb + "*" + FAb, {});
    D("QZ5 v Sb Fb'" + rt, "v*" + FSb + "*" + FApb + " + " + FApb + "*" + FSb, "(v - v^-1)*" + FS + "*" + FAp, {});
  }
  for (int i = 1; i + 1 < n; ++i)
    for (int m = 0; m <= cap; ++m) {
      V w{{"i", i}, {"m", m}};
      D("QZ4 Eb_i E_{i+1}^(m)", "Eb[{i}]*E[{i+1}]^({m})",
        "v^{m}*E[{i+1}]^({m})*Eb[{i}] + E[{i+1}]^({m-1})*(E[{i}]*Eb[{i+1}] - v*Eb[{i+1}]*E[{i}])", w);
      D("QZ5 F_{i+1}^(m) Fb_i", "v^{m}*F[{i+1}]^({m})*Fb[{i}]",
        "Fb[{i}]*F[{i+1}]^({m}) + v^{m-1}*(v*Fb[{i+1}]*F[{i}] - F[{i}]*Fb[{i+1}])*F[{i+1}]^({m-1})", w);
      if (m == 0) {
        D("QZ4 Eb_i Eb_{i+1}", "Eb[{i}]*Eb[{i+1}] + v*Eb[{i+1}]*Eb[{i}]", "E[{i}]*E[{i+1}] - v*E[{i+1}]*E[{i}]", w);
        D("QZ5 Fb_i Fb_{i+1}", "Fb[{i}]*Fb[{i+1}] + v*Fb[{i+1}]*Fb[{i}]", "v*F[{i+1}]*F[{i}] - F[{i}]*F[{i+1}]", w);
      }
    }

  // divided powers against odd generators, the E^(m) F^(n) expansion, Kb^2
  for (int i = 1; i < n; ++i)
    for (int m = 0; m <= cap; ++m) {
      V w{{"i", i}, {"m", m}};
      D("Eb F^(m)", "Eb[{i}]*F[{i}]^({m})",
        "F[{i}]^({m})*Eb[{i}] - v^{1-m}*F[{i}]^({m-1})*K[{i}]*Kb[{i+1}] + v^{m-1}*F[{i}]^({m-1})*Kb[{i}]*K[{i+1}] - F[{i}]^({m-2})*K[{i}]*K[{i+1}]*Fb[{i}]",
        w);
      D("E^(m) Fb", "E[{i}]^({m})*Fb[{i}]",
        "Fb[{i}]*E[{i}]^({m}) + v^{m-1}*E[{i}]^({m-1})*Kb[{i}]*K[{i+1}]^-1 - v^{1-m}*E[{i}]^({m-1})*Kb[{i+1}]*K[{i}]^-1 + E[{i}]^({m-2})*Eb[{i}]*K[{i+1}]^-1*K[{i}]^-1",
        w);
      if (i + 1 < n)
        D("Eb E_{i+1}^(m)", "Eb[{i}]*E[{i+1}]^({m})",
          "v^{m}*E[{i+1}]^({m})*Eb[{i}] + E[{i+1}]^({m-1})*(E[{i}]*Eb[{i+1}] - v*Eb[{i+1}]*E[{i}])", w);
      for (int k = 0; k <= cap; ++k) {
        V w2{{"i", i}, {"m", m}, {"n", k}};
        std::string lit, fix;
        for (int t = 0; t <= std::min(m, k); ++t) {
          V wt = w2;
          wt.push_back({"t", t});
          lit += fill(std::string(t ? " + " : "") + "F[{i}]^({n-t})*KB[{i};{2*t-m-n},{t}]*E[{i}]^({m-t})", wt);
          fix += fill(std::string(t ? " + " : "") + "F[{i}]^({n-t})*KB[{i},{i+1};{2*t-m-n},{t}]*E[{i}]^({m-t})", wt);
        }
        D("E^(m) F^(n) expansion", "E[{i}]^({m})*F[{i}]^({n})", lit, w2, "E[{i}]^({m})*F[{i}]^({n})", fix,
          "the bracket taken in K_i K_{i+1}^-1 instead of K_i");
      }
    }
  for (int i = 1; i <= n; ++i)
    D("Kb^2 in K brackets", "Kb[{i}]*Kb[{i}]", "v^-1*K[{i}]*KB[{i};0,1] - (1 - v^-2)*KB[{i};0,2]", {{"i", i}});

  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

SuiteReport closure_suite(Engine& eng, int cap, int random_pairs, unsigned seed, int factor_cap) {
  auto t0 = Clock::now();
  SuiteReport rep;
  rep.name = "closure n=" + std::to_string(eng.n()) + " cap=" + std::to_string(cap);
  if (factor_cap >= 0 && factor_cap < cap) rep.name += " (factor pairs cap=" + std::to_string(factor_cap) + ")";
  std::vector<DMono> basis = enumerate_divided_basis(eng.n(), cap);
  std::map<DMono, Element> memo;
  auto elem = [&](const DMono& d) -> const Element& {
    auto it = memo.find(d);
    if (it == memo.end()) it = memo.emplace(d, from_divided(eng, d)).first;
    return it->second;
  };
  auto check = [&](const DMono& x, const DMono& y) {
    ++rep.checked;
    try {
      Element p = eng.multiply(elem(x), elem(y));
      auto cert = integrality_check(eng, p);
      if (!cert.integral)
        rep.failures.push_back(render(eng.alpha(), x) + " * " + render(eng.alpha(), y) + ": " + cert.offending);
    } catch (const std::exception& ex) {
      rep.failures.push_back(render(eng.alpha(), x) + " * " + render(eng.alpha(), y) + ": " + ex.what());
    }
  };
  // every ordered pair of single-factor basis elements (negative part only,
  // Cartan part only, positive part only)
  std::vector<DMono> factors;
  if (factor_cap < 0) factor_cap = cap;
  for (auto& d : enumerate_divided_basis(eng.n(), std::min(cap, factor_cap))) {
    bool cart = false;
    for (auto& c : d.cartan) cart = cart || c[0] || c[1] || c[2];
    int parts = !d.neg.empty() + cart + !d.pos.empty();
    if (parts <= 1) factors.push_back(d);
  }
  for (auto& x : factors)
    for (auto& y : factors) check(x, y);
  // plus seeded random pairs of full basis elements
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  for (int k = 0; k < random_pairs; ++k) check(basis[pick(rng)], basis[pick(rng)]);
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

SuiteReport t_stability_suite(Engine& eng, int cap) {
  auto t0 = Clock::now();
  const Alphabet& A = eng.alpha();
  const int n = A.n();
  Braid br(eng);
  SuiteReport rep;
  rep.name = "T-stability n=" + std::to_string(n);
  std::vector<std::pair<std::string, Element>> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back({"K" + std::to_string(i), eng.normalize(Word{Kl(A, i)})});
    gens.push_back({"K" + std::to_string(i) + "^-1", eng.normalize(Word{Kl(A, i, -1)})});
    gens.push_back({"Kb" + std::to_string(i), eng.normalize(Word{KBl(A, i)})});
    for (int t = 1; t <= cap; ++t) gens.push_back({"[K" + std::to_string(i) + ";0," + std::to_string(t) + "]", kbracket_expand(eng, i, 0, t)});
  }
  for (int j = 1; j < n; ++j) {
    for (int m = 1; m <= cap; ++m) {
      gens.push_back({"E" + std::to_string(j) + "^(" + std::to_string(m) + ")", divided_power(eng, gen_E(A, j), m)});
      gens.push_back({"F" + std::to_string(j) + "^(" + std::to_string(m) + ")", divided_power(eng, gen_F(A, j), m)});
    }
    gens.push_back({"Eb" + std::to_string(j), eng.normalize(Word{gen_E(A, j, true)})});
    gens.push_back({"Fb" + std::to_string(j), eng.normalize(Word{gen_F(A, j, true)})});
  }
  for (int i = 1; i < n; ++i)
    for (int inv = 0; inv < 2; ++inv)
      for (auto& [name, g] : gens) {
        ++rep.checked;
        std::string what = std::string(inv ? "Tinv" : "T") + std::to_string(i) + "(" + name + ")";
        try {
          auto cert = integrality_check(eng, br.apply(i, inv, g));
          if (!cert.integral) rep.failures.push_back(what + ": " + cert.offending);
        } catch (const std::exception& ex) {
          rep.failures.push_back(what + ": " + ex.what());
        }
      }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

SuiteReport presentation_iso_suite(Engine& eng, int cap) {
  auto t0 = Clock::now();
  const Alphabet& A = eng.alpha();
  const int n = A.n();
  Braid br(eng);
  SuiteReport rep;
  rep.name = "presentation n=" + std::to_string(n);
  auto zero = [&](const std::string& what, const Element& e) {
    ++rep.checked;
    if (!e.is_zero()) rep.failures.push_back(what + " -> " + render(A, e));
  };
  // E_beta^(m) = T_a ... T_{b-2}(E_{b-1}^(m)) and the same for F, odd ones at m = 1
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int fam = 0; fam < 4; ++fam) {
        bool pos = fam % 2 == 0, odd = fam >= 2;
        for (int m = odd ? 1 : 0; m <= (odd ? 1 : cap); ++m) {
          Letter g = pos ? gen_E(A, b - 1, odd) : gen_F(A, b - 1, odd);
          Element x = odd ? eng.normalize(Word{g}) : divided_power(eng, g, m);
          for (int k = b - 2; k >= a; --k) x = br.apply(k, false, x);
          Letter target = pos ? E(A, a, b, odd) : E(A, b, a, odd);
          Element y = odd ? eng.normalize(Word{target}) : divided_power(eng, target, m);
          zero("braid-built " + A.name(target.slot) + "^(" + std::to_string(m) + ")", x - y);
        }
      }
  // QZ relations hold for the images
  SuiteReport qz = qz_suite(eng, cap);
  rep.checked += qz.checked;
  rep.failures.insert(rep.failures.end(), qz.failures.begin(), qz.failures.end());
  rep.notes.insert(rep.notes.end(), qz.notes.begin(), qz.notes.end());
  // Omega carries the positive-part relations to identities: Omega of every
  // product of two positive root letters straightens to the reversed product
  for (int s = 0; s < A.size(); ++s)
    for (int t = 0; t < A.size(); ++t) {
      if (A.info(s).region != 1 || A.info(t).region != 1) continue;
      Element xy = eng.normalize(Word{{s, 1}, {t, 1}});
      Element lhs = br.omega(xy);
      Word rw{{A.root_slot(A.info(t).j, A.info(t).i, A.info(t).kind == Kind::Odd), 1},
              {A.root_slot(A.info(s).j, A.info(s).i, A.info(s).kind == Kind::Odd), 1}};
      zero("Omega(" + A.name(s) + "*" + A.name(t) + ")", lhs - eng.normalize(rw));
    }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace qn
