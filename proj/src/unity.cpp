#include "qn/unity.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "qn/braid.hpp"
#include "qn/expr.hpp"
#include "qn/identities.hpp"

namespace qn {

using Clock = std::chrono::steady_clock;

ElementCyclo specialize_element(const Engine& eng, const Element& x, int l) {
  ElementCyclo out;
  out.l = l;
  for (auto& [d, c] : to_divided(eng, x)) {
    CycloNum z;
    try {
      z = specialize(c, l);
    } catch (const PoleAtEpsilon&) {
      throw PoleAtEpsilon("coefficient " + c.str() + " of " + render(eng.alpha(), d) + " has a pole at eps");
    }
    if (!z.is_zero()) out.terms.emplace(d, std::move(z));
  }
  return out;
}

Element lift(Engine& eng, const ElementCyclo& a) {
  Element out;
  for (auto& [d, z] : a.terms) {
    RatFunc c;
    const auto& cs = z.coeffs();
    for (size_t k = 0; k < cs.size(); ++k)
      if (cs[k] != 0) c += RatFunc::rational(cs[k]) * RatFunc::v(int(k));
    out += from_divided(eng, d) * c;
  }
  return out;
}

ElementCyclo multiply(Engine& eng, const ElementCyclo& a, const ElementCyclo& b) {
  if (a.l != b.l) throw std::invalid_argument("different roots of unity");
  return specialize_element(eng, eng.multiply(lift(eng, a), lift(eng, b)), a.l);
}

std::string render(const Alphabet& A, const ElementCyclo& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, z] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << z.str() << ")*" << render(A, d);
  }
  return os.str();
}

SuiteReport binomial_vanishing_suite(int l) {
  auto t0 = Clock::now();
  SuiteReport rep;
  rep.name = "binomials l=" + std::to_string(l);
  for (int m = 0; m < l; ++m)
    for (int k = 0; k < l; ++k) {
      if (m + k < l) continue;
      ++rep.checked;
      if (!specialize(gauss_binom(m + k, k), l).is_zero())
        rep.failures.push_back("[" + std::to_string(m + k) + " over " + std::to_string(k) + "] at eps");
    }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

namespace {

struct Ctx {
  Engine& eng;
  Braid br;
  Evaluator ev;
  int l;
  SuiteReport rep;
  Ctx(Engine& e, int l_, const std::string& name) : eng(e), br(e), ev(e, br), l(l_) {
    rep.name = name + " n=" + std::to_string(e.n()) + " l=" + std::to_string(l_);
  }
  bool vanishes(const Element& x) { return specialize_element(eng, x, l).is_zero(); }
  void zero(const std::string& what, const std::string& expr) {
    ++rep.checked;
    try {
      Element x = ev.eval(expr);
      if (!vanishes(x)) rep.failures.push_back(what + ": " + render(eng.alpha(), specialize_element(eng, x, l)));
    } catch (const std::exception& ex) {
      rep.failures.push_back(what + ": " + ex.what());
    }
  }
  void display(const std::string& name, const std::string& l_, const std::string& r, const std::string& fl = "",
               const std::string& fr = "", const std::string& note = "") {
    check_display(ev, rep, Display{name, l_, r, fl, fr, note}, [&](const Element& x) { return vanishes(x); });
  }
};

std::string root(const char* kind, int i, int j) {
  return std::string(kind) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

}  // namespace

SuiteReport nilpotency_suite(Engine& eng, int l) {
  auto t0 = Clock::now();
  Ctx c(eng, l, "nilpotency");
  const int n = eng.n();
  std::string L = std::to_string(l), L1 = std::to_string(l - 1);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (const char* fam : {"E", "F"}) {
        std::string X = root(fam, a, b), Xb = root(fam[0] == 'E' ? "Eb" : "Fb", a, b);
        c.zero(X + "^" + L, X + "^" + L);
        c.zero(X + "*" + Xb + "^" + L1, X + "*" + Xb + "^" + L1);
        c.zero(Xb + "^" + L1 + "*" + X, Xb + "^" + L1 + "*" + X);
        // the other reading, Xb X^(l-1), is recorded, not asserted
        Element y = c.ev.eval(Xb + "*" + X + "^" + L1);
        c.rep.info.push_back(Xb + "*" + X + "^" + L1 + (c.vanishes(y) ? " = 0" : " != 0 (= " + render(eng.alpha(), specialize_element(eng, y, l)) + ")"));
      }
  // a power below l survives
  c.rep.checked++;
  if (c.vanishes(c.ev.eval("E[1]^" + L1))) c.rep.failures.push_back("E[1]^(l-1) vanishes");
  c.rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c.rep;
}

SuiteReport centrality_suite(Engine& eng, int l) {
  auto t0 = Clock::now();
  Ctx c(eng, l, "centrality");
  const int n = eng.n();
  std::vector<std::string> gens;
  for (int a = 1; a < n; ++a)
    for (const char* g : {"E", "Eb", "F", "Fb"}) gens.push_back(std::string(g) + "[" + std::to_string(a) + "]");
  for (int j = 1; j <= n; ++j)
    for (const char* g : {"K[{j}]", "K[{j}]^-1", "Kb[{j}]"}) gens.push_back(fill(g, {{"j", j}}));
  for (int i = 1; i <= n; ++i) {
    std::string Kl = fill("K[{i}]^{l}", {{"i", i}, {"l", l}});
    for (auto& g : gens) c.zero("[" + Kl + ", " + g + "]", Kl + "*" + g + " - " + g + "*" + Kl);
    c.zero(fill("K[{i}]^{2*l} - 1", {{"i", i}, {"l", l}}), fill("K[{i}]^{2*l} - 1", {{"i", i}, {"l", l}}));
    // K^l itself is not 1
    c.rep.checked++;
    if (c.vanishes(c.ev.eval(Kl + " - 1"))) c.rep.failures.push_back(Kl + " = 1");
  }
  c.rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c.rep;
}

SuiteReport qu_presentation_suite(Engine& eng, int l) {
  auto t0 = Clock::now();
  Ctx c(eng, l, "qu");
  const int n = eng.n();
  using V = std::vector<std::pair<std::string, long>>;
  auto D = [&](const std::string& name, const std::string& lhs, const std::string& rhs, const V& w,
               const std::string& fl = "", const std::string& fr = "", const std::string& note = "") {
    std::string nm = name;
    for (auto& [k, x] : w) nm += " " + k + "=" + std::to_string(x);
    c.display(nm, fill(lhs, w), fill(rhs, w), fl.empty() ? "" : fill(fl, w), fr.empty() ? "" : fill(fr, w), note);
  };

  // QU1
  for (int i = 1; i <= n; ++i) {
    V w{{"i", i}, {"l", l}};
    D("QU1 K Kinv", "K[{i}]*K[{i}]^-1", "1", w);
    D("QU1 Kinv K", "K[{i}]^-1*K[{i}]", "1", w);
    D("QU1 K^2l", "K[{i}]^{2*l}", "1", w);
    for (int j = 1; j <= n; ++j) {
      V w2{{"i", i}, {"j", j}, {"d", 2 * (i == j)}};
      D("QU1 K K", "K[{i}]*K[{j}]", "K[{j}]*K[{i}]", w2);
      D("QU1 K Kb", "K[{i}]*Kb[{j}]", "Kb[{j}]*K[{i}]", w2);
      D("QU1 Kb Kb", "Kb[{i}]*Kb[{j}] + Kb[{j}]*Kb[{i}]", "{d}*(K[{i}]^2 - K[{i}]^-2)/(v^2 - v^-2)", w2);
    }
  }
  // QU2
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      int p = (i == j) - (i == j + 1);
      V w{{"i", i}, {"j", j}, {"p", p}, {"dm", (i == j) - (i - 1 == j)}, {"dp", (i == j) + (i - 1 == j)}};
      D("QU2 K E", "K[{i}]*E[{j}]", "v^{p}*E[{j}]*K[{i}]", w);
      D("QU2 Kb E", "Kb[{i}]*E[{j}]", "v^{p}*E[{j}]*Kb[{i}] + ({dm})*Eb[{j}]*K[{i}]^-1", w);
      D("QU2 K Eb", "K[{i}]*Eb[{j}]", "v^{p}*Eb[{j}]*K[{i}]", w);
      D("QU2 Kb Eb", "Kb[{i}]*Eb[{j}]", "-v^{p}*Eb[{j}]*Kb[{i}] + ({dp})*E[{j}]*K[{i}]^-1", w);
      D("QU2 K F", "K[{i}]*F[{j}]", "v^{-p}*F[{j}]*K[{i}]", w);
      D("QU2 Kb F", "Kb[{i}]*F[{j}]", "v^{p}*F[{j}]*Kb[{i}] - ({dm})*Fb[{j}]*K[{i}]", w);
      D("QU2 K Fb", "K[{i}]*Fb[{j}]", "v^{-p}*Fb[{j}]*K[{i}]", w);
      D("QU2 Kb Fb", "Kb[{i}]*Fb[{j}]", "-v^{p}*Fb[{j}]*Kb[{i}] + ({dp})*F[{j}]*K[{i}]", w);
    }
  // QU3
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      V w{{"i", i}, {"j", j}, {"d", i == j}};
      D("QU3 E F", "E[{i}]*F[{j}] - F[{j}]*E[{i}]", "{d}*(K[{i}]*K[{i+1}]^-1 - K[{i}]^-1*K[{i+1}])/(v - v^-1)", w);
      D("QU3 E Fb", "E[{i}]*Fb[{j}] - Fb[{j}]*E[{i}]", "{d}*(K[{i+1}]^-1*Kb[{i}] - Kb[{i+1}]*K[{i}]^-1)", w);
      D("QU3 Eb F", "Eb[{i}]*F[{j}] - F[{j}]*Eb[{i}]", "{d}*(K[{i+1}]*Kb[{i}] - Kb[{i+1}]*K[{i}])", w);
      D("QU3 Eb Fb", "Eb[{i}]*Fb[{j}] + Fb[{j}]*Eb[{i}]",
        "{d}*((K[{i}]*K[{i+1}] - K[{i}]^-1*K[{i+1}]^-1)/(v - v^-1) + (v - v^-1)*Kb[{i}]*Kb[{i+1}])", w);
    }
  // QU4 / QU5 on single roots and orthogonal simple roots
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (const char* fam : {"E", "F"}) {
        bool e = fam[0] == 'E';
        std::string X = root(fam, a, b), Xb = root(e ? "Eb" : "Fb", a, b), tag = e ? "QU4 " : "QU5 ";
        V w{{"l", l}};
        if (e)
          D(tag + "odd square " + X, Xb + "^2", "-(v - v^-1)/(v + v^-1)*" + X + "^2", w);
        else
          D(tag + "odd square " + X, Xb + "^2", "(v - v^-1)/(v + v^-1)*" + X + "^2", w, Xb + "^2",
            "-(v - v^-1)/(v + v^-1)*" + X + "^2", "the sign of the E-side odd square");
        D(tag + "X^l " + X, X + "^{l}", "0", w);
        D(tag + "X Xb " + X, X + "*" + Xb, Xb + "*" + X, w);
        for (int i = a + 1; i < n; ++i) {
          int pr = (a == i) - (a == i + 1) - (b == i) + (b == i + 1);
          if (pr != 0) continue;
          std::string S = root(fam, i, i + 1), Sb = root(e ? "Eb" : "Fb", i, i + 1);
          D(tag + "orthogonal X_i X " + X, S + "*" + X, X + "*" + S, {{"i", i}});
          D(tag + "orthogonal X_i Xb " + X, S + "*" + Xb, Xb + "*" + S, {{"i", i}});
          if (e) D(tag + "orthogonal Xb_i X " + X, Sb + "*" + X, X + "*" + Sb, {{"i", i}});
          else
            D(tag + "orthogonal Xb_i X " + X, Sb + "*" + Xb, Xb + "*" + Sb, {{"i", i}}, Sb + "*" + X, X + "*" + Sb,
              "Fb_i F_alpha in place of the first Fb_i Fb_alpha");
          D(tag + "orthogonal Xb_i Xb " + X, Sb + "*" + Xb, "-" + Xb + "*" + Sb, {{"i", i}});
        }
      }
  // QU4 / QU5, (alpha, alpha') = -1, alpha = (a,k), alpha' = (k,b)
  for (int a = 1; a <= n; ++a)
    for (int k = a + 1; k <= n; ++k)
      for (int b = k + 1; b <= n; ++b) {
        std::string rt = " (" + std::to_string(a) + "," + std::to_string(k) + "," + std::to_string(b) + ")";
        for (const char* fam : {"E", "F"}) {
          bool e = fam[0] == 'E';
          const char* bar = e ? "Eb" : "Fb";
          std::string A_ = root(fam, a, k), Ap = root(fam, k, b), S = root(fam, a, b);
          std::string Ab = root(bar, a, k), Apb = root(bar, k, b), Sb = root(bar, a, b);
          std::string tag = e ? "QU4 " : "QU5 ";
          if (e) {
            D(tag + "X' X" + rt, Ap + "*" + A_, "v*" + A_ + "*" + Ap + " + v*" + S, {});
            D(tag + "Xb' X" + rt, Apb + "*" + A_, "v*" + A_ + "*" + Apb + " + v*" + Sb, {});
          } else {
            D(tag + "X' X" + rt, Ap + "*" + A_, "v*" + A_ + "*" + Ap + " - " + S, {});
            D(tag + "Xb' X" + rt, Apb + "*" + A_, "v*" + A_ + "*" + Apb + " - " + Sb, {});
          }
          D(tag + "v X' S" + rt, "v*" + Ap + "*" + S, S + "*" + Ap, {});
          D(tag + "X S" + rt, A_ + "*" + S, "v*" + S + "*" + A_, {});
          if (e) D(tag + "Xb S" + rt, Ab + "*" + S, "v*" + S + "*" + Ab, {});
          else
            D(tag + "Xb S" + rt, Ab + "*" + S, "v*" + S + "*" + Apb, {}, Ab + "*" + S, "v*" + S + "*" + Ab,
              "Fb_alpha on the right");
          D(tag + "X Sb" + rt, A_ + "*" + Sb, "v*" + Sb + "*" + A_, {});
          D(tag + "Xb Sb" + rt, Ab + "*" + Sb, "-v*" + Sb + "*" + Ab, {});
          D(tag + "X' Sb" + rt, Ap + "*" + Sb + " - v*" + Sb + "*" + Ap, Apb + "*" + S + " - v*" + S + "*" + Apb, {});
          D(tag + "Xb' Sb" + rt, Apb + "*" + Sb + " + v*" + Sb + "*" + Apb,
            std::string(e ? "-" : "") + "(v - v^-1)*" + S + "*" + Ap, {});
        }
      }
  for (int i = 1; i + 1 < n; ++i) {
    V w{{"i", i}};
    D("QU4 Eb_i E_{i+1}", "Eb[{i}]*E[{i+1}]", "v*E[{i+1}]*Eb[{i}] + E[{i}]*Eb[{i+1}] - v*Eb[{i+1}]*E[{i}]", w);
    D("QU4 Eb_i Eb_{i+1}", "Eb[{i}]*Eb[{i+1}] + v*Eb[{i+1}]*Eb[{i}]", "E[{i}]*E[{i+1}] - v*E[{i}]*E[{i}]", w,
      "Eb[{i}]*Eb[{i+1}] + v*Eb[{i+1}]*Eb[{i}]", "E[{i}]*E[{i+1}] - v*E[{i+1}]*E[{i}]", "last term E_{i+1} E_i");
    D("QU5 Fb_i F_{i+1}", "Fb[{i}]*F[{i+1}]", "v*F[{i+1}]*Fb[{i}] + F[{i}]*Fb[{i+1}] - v*Fb[{i+1}]*F[{i}]", w);
    D("QU5 Fb_i Fb_{i+1}", "Fb[{i}]*Fb[{i+1}] + v*Fb[{i+1}]*Fb[{i}]", "v*F[{i}]*F[{i}] - F[{i}]*F[{i+1}]", w,
      "Fb[{i}]*Fb[{i+1}] + v*Fb[{i+1}]*Fb[{i}]", "v*F[{i+1}]*F[{i}] - F[{i}]*F[{i+1}]", "first term F_{i+1} F_i");
  }
  c.rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c.rep;
}

SuiteReport specialization_hom_suite(Engine& eng, int l, int pairs, unsigned seed) {
  auto t0 = Clock::now();
  SuiteReport rep;
  rep.name = "specialization hom n=" + std::to_string(eng.n()) + " l=" + std::to_string(l);
  // basis monomials with at most two nontrivial factors keep the products small
  std::vector<DMono> basis;
  for (auto& d : enumerate_divided_basis(eng.n(), 1)) {
    size_t k = d.neg.f.size() + d.pos.f.size();
    for (auto& c : d.cartan) k += (c[0] != 0) + (c[1] != 0) + (c[2] != 0);
    if (k <= 2) basis.push_back(d);
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
  // random integral combinations of three basis elements
  auto rnd = [&] {
    Element x;
    for (int t = 0; t < 3; ++t) {
      LaurentPoly p = LaurentPoly::monomial(coef(rng), ex(rng)) + LaurentPoly::monomial(coef(rng), ex(rng));
      x += from_divided(eng, basis[pick(rng)]) * RatFunc(p);
    }
    return x;
  };
  for (int k = 0; k < pairs; ++k) {
    ++rep.checked;
    try {
      Element a = rnd(), b = rnd();
      ElementCyclo lhs = specialize_element(eng, eng.multiply(a, b), l);
      ElementCyclo rhs = multiply(eng, specialize_element(eng, a, l), specialize_element(eng, b, l));
      if (!(lhs == rhs)) rep.failures.push_back("pair " + std::to_string(k));
    } catch (const std::exception& ex) {
      rep.failures.push_back("pair " + std::to_string(k) + ": " + ex.what());
    }
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

namespace {

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// (even|odd) counts of the product of choices: per root, gen values and an odd flag
void count_parts(int roots, long gens_per_root, int flags, long& even, long& odd) {
  long g = ipow(gens_per_root, roots);
  // parity = number of odd flags set
  long e = 0, o = 0;
  for (long mask = 0; mask < (1L << flags); ++mask) (__builtin_popcountl(mask) % 2 ? o : e) += g;
  even = e;
  odd = o;
}

}  // namespace

Census restricted_rank_census(int n, int l) {
  Census c;
  c.n = n;
  c.l = l;
  const int N = n * (n - 1) / 2, P = n * (n + 1) / 2;
  auto part = [&](const std::string& name, int roots, long per_root, int flags, long pg, long pf, const std::string& printed) {
    CensusPart p;
    p.name = name;
    count_parts(roots, per_root, flags, p.even, p.odd);
    p.gen_count = ipow(per_root, roots);
    p.flag_count = 1L << flags;
    p.printed = printed;
    p.printed_gen = pg;
    p.printed_flag = pf;
    p.agrees = p.gen_count == pg && p.flag_count == pf;
    c.parts.push_back(p);
  };
  std::string pe = "(l^(n(n+1)/2) | 2^(n(n+1)/2))";
  part("plus", N, l, N, ipow(l, P), 1L << P, pe);
  part("minus", N, l, N, ipow(l, P), 1L << P, pe);
  // the minus part read literally: 0 <= m < 0 leaves only m = 0
  part("minus, range 0<=m<0 read literally", N, 1, N, ipow(l, P), 1L << P, pe);
  part("zero (restricted)", n, 2L * l, n, ipow(2L * l, n), 1L << n, "((2l)^n | 2^n)");
  part("U_eps", 2 * N + n, 0, 2 * N + n, (1L << n) * ipow(l, n * (n + 2)), 1L << (n * (n + 2)), "(2^n l^(n(n+2)) | 2^(n(n+2)))");
  // U_eps: l choices per root on both sides, 2l per K; flags on every root and every Kb
  {
    CensusPart& u = c.parts.back();
    u.gen_count = ipow(l, 2 * N) * ipow(2L * l, n);
    long e = 0, o = 0;
    for (long mask = 0; mask < (1L << (2 * N + n)); ++mask) (__builtin_popcountl(mask) % 2 ? o : e) += u.gen_count;
    u.even = e;
    u.odd = o;
    u.agrees = u.gen_count == u.printed_gen && u.flag_count == u.printed_flag;
  }
  if (P != N)
    c.flags.push_back("printed rank exponent n(n+1)/2 = " + std::to_string(P) + " but |Phi+| = n(n-1)/2 = " +
                      std::to_string(N));
  c.flags.push_back("minus part printed with the empty range 0 <= m < 0; counted with 0 <= m < l");
  for (auto& p : c.parts)
    if (!p.agrees) c.flags.push_back(p.name + ": enumerated (" + std::to_string(p.gen_count) + " | " +
                                     std::to_string(p.flag_count) + "), printed " + p.printed + " = (" +
                                     std::to_string(p.printed_gen) + " | " + std::to_string(p.printed_flag) + ")");
  return c;
}

std::string render(const Census& c) {
  std::ostringstream os;
  os << "census n=" << c.n << " l=" << c.l << "\n";
  for (auto& p : c.parts)
    os << "  " << p.name << ": even " << p.even << ", odd " << p.odd << "; choices (" << p.gen_count << " | "
       << p.flag_count << "), printed " << p.printed << " = (" << p.printed_gen << " | " << p.printed_flag << ")"
       << (p.agrees ? "" : "  MISMATCH") << "\n";
  for (auto& f : c.flags) os << "  flag: " << f << "\n";
  return os.str();
}

}  // namespace qn
