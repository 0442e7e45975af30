#include "qn/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "qn/braid.hpp"
#include "qn/oracle.hpp"

namespace qn {

namespace {

using Vars = std::vector<std::pair<std::string, long>>;

struct Case {
  bool when;
  const char* rhs;
  const char* fix = nullptr;  // corrected right-hand side
  const char* note = nullptr;
};

struct Sink {
  std::vector<Display>& out;
  bool omega;

  void add(const std::string& family, const char* lhs, std::initializer_list<Case> cases, const Vars& v) {
    for (const Case& c : cases) {
      if (!c.when) continue;
      std::string nm = family;
      for (auto& [k, x] : v) nm += " " + k + "=" + std::to_string(x);
      Display d{nm, fill(lhs, v), fill(c.rhs, v), "", "", ""};
      if (c.fix) {
        d.fixed_lhs = d.lhs;
        d.fixed_rhs = fill(c.fix, v);
        d.fix_note = c.note;
      }
      out.push_back(d);
      if (omega) {
        Display o = d;
        o.name += " (Omega)";
        auto wrap = [](const std::string& s) { return s.empty() ? s : "Omega(" + s + ")"; };
        o.lhs = wrap(d.lhs);
        o.rhs = wrap(d.rhs);
        o.fixed_lhs = wrap(d.fixed_lhs);
        o.fixed_rhs = wrap(d.fixed_rhs);
        out.push_back(o);
      }
      return;  // first matching case only
    }
  }
};

}  // namespace

std::vector<Display> lemma_displays(int n, bool omega) {
  std::vector<Display> out;
  Sink S{out, omega};

  // recursive root vectors, every split point
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      Vars v{{"i", i}, {"j", j}};
      S.add("root E_ij", "E[{i},{j}]", {{true, "-E[{i},{j-1}]*E[{j-1},{j}] + v^-1*E[{j-1},{j}]*E[{i},{j-1}]"}}, v);
      S.add("root Eb_ij", "Eb[{i},{j}]", {{true, "-E[{i},{j-1}]*Eb[{j-1},{j}] + v^-1*Eb[{j-1},{j}]*E[{i},{j-1}]"}}, v);
      S.add("root E_ji", "E[{j},{i}]", {{true, "-E[{j},{j-1}]*E[{j-1},{i}] + v*E[{j-1},{i}]*E[{j},{j-1}]"}}, v);
      S.add("root Eb_ji", "Eb[{j},{i}]", {{true, "-Eb[{j},{j-1}]*E[{j-1},{i}] + v*E[{j-1},{i}]*Eb[{j},{j-1}]"}}, v);
      for (int k = i + 1; k < j; ++k) {
        Vars w{{"i", i}, {"k", k}, {"j", j}};
        S.add("split E_ij", "E[{i},{j}]", {{true, "-E[{i},{k}]*E[{k},{j}] + v^-1*E[{k},{j}]*E[{i},{k}]"}}, w);
        S.add("split Eb_ij", "Eb[{i},{j}]", {{true, "-E[{i},{k}]*Eb[{k},{j}] + v^-1*Eb[{k},{j}]*E[{i},{k}]"}}, w);
        S.add("split E_ji", "E[{j},{i}]",
              {{true, "-E[{j},{k}]*E[{k},{i}] + v*E[{j-1},{i}]*E[{j},{k}]",
                "-E[{j},{k}]*E[{k},{i}] + v*E[{k},{i}]*E[{j},{k}]", "E_{k,i} in place of E_{j-1,i}"}},
              w);
        S.add("split Eb_ji", "Eb[{j},{i}]", {{true, "-Eb[{j},{k}]*E[{k},{i}] + v*E[{k},{i}]*Eb[{j},{k}]"}}, w);
      }
    }

  // K-bar against positive roots
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int a = 1; a <= n; ++a) {
        Vars v{{"a", a}, {"i", i}, {"j", j}};
        bool far = a < i || (i < a && a < j) || a > j;
        S.add("KE Kb E", "Kb[{a}]*E[{i},{j}]",
              {{far, "E[{i},{j}]*Kb[{a}]"},
               {a == i && j > i + 1,
                "v*E[{i},{j}]*Kb[{i}] - Eb[{i},{i+1}]*E[{i+1},{j}]*K[{i}]^-1 + v^-1*E[{i+1},{j}]*Eb[{i},{i+1}]*K[{i}]^-1"},
               {a == j, "v^-1*E[{i},{j}]*Kb[{j}] - Eb[{i},{j}]*K[{j}]^-1"}},
              v);
        S.add("KE Kb Eb", "Kb[{a}]*Eb[{i},{j}]",
              {{far, "-Eb[{i},{j}]*Kb[{a}]"},
               {a == i && j > i + 1,
                "-v*Eb[{i},{j}]*Kb[{i}] - Eb[{i},{i+1}]*Eb[{i+1},{j}]*K[{i}]^-1 - v^-1*Eb[{i+1},{j}]*Eb[{i},{i+1}]*K[{i}]^-1"},
               {a == j, "-v^-1*Eb[{i},{j}]*Kb[{j}] + E[{i},{j}]*K[{j}]^-1"}},
              v);
      }

  // generator against root (positive side), the displays used inside the proofs
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int a = 1; a < n; ++a) {
        Vars v{{"a", a}, {"i", i}, {"j", j}};
        bool far = a < i - 1 || (i < a && a < j - 1) || a > j;
        bool longr = j > i + 1;
        S.add("pe-pe E_a E_ij", "E[{a},{a+1}]*E[{i},{j}]",
              {{far, "E[{i},{j}]*E[{a},{a+1}]"},
               {a == i - 1, "v^-1*E[{i},{j}]*E[{i-1},{i}] - E[{i-1},{j}]"},
               {a == i && longr, "v*E[{i},{j}]*E[{i},{i+1}]"},
               {a == j - 1 && longr, "v^-1*E[{i},{j}]*E[{j-1},{j}]"},
               {a == j, "v*E[{i},{j}]*E[{j},{j+1}] + v*E[{i},{j+1}]"}},
              v);
        S.add("pe-po E_a Eb_ij", "E[{a},{a+1}]*Eb[{i},{j}]",
              {{far, "Eb[{i},{j}]*E[{a},{a+1}]"},
               {a == i - 1, "v^-1*Eb[{i},{j}]*E[{i-1},{i}] - Eb[{i-1},{j}]"},
               {a == i && longr, "v*Eb[{i},{j}]*E[{i},{i+1}]"},
               {a == j - 1, "v*Eb[{i},{j}]*E[{j-1},{j}] - v*E[{i},{j}]*Eb[{j-1},{j}] + Eb[{j-1},{j}]*E[{i},{j}]"},
               {a == j, "v^-1*Eb[{i},{j}]*E[{j},{j+1}] + Eb[{j},{j+1}]*E[{i},{j}] - v^-1*E[{i},{j}]*Eb[{j},{j+1}]"}},
              v);
        S.add("pe-po Eb_a E_ij", "Eb[{a},{a+1}]*E[{i},{j}]",
              {{far, "E[{i},{j}]*Eb[{a},{a+1}]"},
               {a == i - 1 && longr,
                "v*E[{i},{j}]*Eb[{i-1},{i}] - E[{i-1},{i}]*(Eb[{i},{i+1}]*E[{i+1},{j}] - v^-1*E[{i+1},{j}]*Eb[{i},{i+1}]) + "
                "v*(Eb[{i},{i+1}]*E[{i+1},{j}] - v^-1*E[{i+1},{j}]*Eb[{i},{i+1}])*E[{i-1},{i}]"},
               {a == i && longr, "v*E[{i},{j}]*Eb[{i},{i+1}]"},
               {a == j - 1, "v*E[{i},{j}]*Eb[{j-1},{j}] - v*Eb[{i},{j}]*E[{j-1},{j}] + E[{j-1},{j}]*Eb[{i},{j}]"},
               {a == j, "v*E[{i},{j}]*Eb[{j},{j+1}] + v*Eb[{i},{j+1}]"}},
              v);
        S.add("po-po Eb_a Eb_ij", "Eb[{a},{a+1}]*Eb[{i},{j}]",
              {{far, "-Eb[{i},{j}]*Eb[{a},{a+1}]"},
               {a == i - 1 && longr,
                "-v*Eb[{i},{j}]*Eb[{i-1},{i}] - E[{i-1},{i}]*(Eb[{i},{i+1}]*Eb[{i+1},{j}] + v^-1*Eb[{i+1},{j}]*Eb[{i},{i+1}]) + "
                "v*(Eb[{i},{i+1}]*Eb[{i+1},{j}] + v^-1*Eb[{i+1},{j}]*Eb[{i},{i+1}])*E[{i-1},{i}]"},
               {a == i && longr, "-v*Eb[{i},{j}]*Eb[{i},{i+1}]"},
               {a == j - 1 && longr, "-v*Eb[{i},{j}]*Eb[{j-1},{j}] - (v - v^-1)*E[{i},{j}]*E[{j-1},{j}]"},
               {a == j, "-v^-1*Eb[{i},{j}]*Eb[{j},{j+1}] + v^-1*E[{i},{j}]*E[{j},{j+1}] - E[{j},{j+1}]*E[{i},{j}]"}},
              v);
        bool farF = a < i || (i < a && a < j - 1) || a > j - 1;
        S.add("ne-pe F_a E_ij", "E[{a+1},{a}]*E[{i},{j}]",
              {{farF, "E[{i},{j}]*E[{a+1},{a}]"},
               {a == i && longr, "E[{i},{j}]*E[{a+1},{a}] - E[{i+1},{j}]*K[{i}]^-1*K[{i+1}]"},
               {a == j - 1 && longr, "E[{i},{j}]*E[{a+1},{a}] + v^-1*E[{i},{j-1}]*K[{j-1}]*K[{j}]^-1"}},
              v);
        S.add("ne-po F_a Eb_ij", "E[{a+1},{a}]*Eb[{i},{j}]",
              {{farF, "Eb[{i},{j}]*E[{a+1},{a}]"},
               {a == i && longr, "Eb[{i},{j}]*E[{i+1},{i}] - Eb[{i+1},{j}]*K[{i+1}]*K[{i}]^-1"},
               {a == j - 1 && longr,
                "Eb[{i},{j}]*E[{j},{j-1}] - (v - v^-1)*Kb[{j}]*K[{j-1}]*E[{i},{j-1}] + (v - v^-1)*Kb[{j-1}]*E[{i},{j-1}]*K[{j}] + "
                "v*Eb[{i},{j-1}]*K[{j}]*K[{j-1}]^-1"}},
              v);
        S.add("ne-po Eb_a E_ji", "Eb[{a},{a+1}]*E[{j},{i}]",
              {{farF, "E[{j},{i}]*Eb[{a},{a+1}]"},
               {a == i && longr, "E[{j},{i}]*Eb[{i},{i+1}] - v*Kb[{i+1}]*E[{j},{i+1}]*K[{i}] + E[{j},{i+1}]*Kb[{i+1}]*K[{i}]"},
               {a == j - 1 && longr, "E[{j},{i}]*Eb[{j-1},{j}] - Kb[{j-1}]*E[{j-1},{i}]*K[{j}] + v*E[{j-1},{i}]*Kb[{j-1}]*K[{j}]"}},
              v);
        S.add("no-po Fb_a Eb_ij", "Eb[{a+1},{a}]*Eb[{i},{j}]",
              {{farF, "-Eb[{i},{j}]*Eb[{a+1},{a}]"},
               {a == i && longr,
                "-Eb[{i},{j}]*Eb[{i+1},{i}] - Kb[{i+1}]*Eb[{i+1},{j}]*K[{i}]^-1 - v^-1*Eb[{i+1},{j}]*Kb[{i+1}]*K[{i}]^-1"},
               {a == j - 1 && longr,
                "-Eb[{i},{j}]*Eb[{j},{j-1}] - K[{j-1}]*E[{i},{j-1}]*K[{j}] - (v - v^-1)*E[{i},{j-1}]*Kb[{j-1}]*Kb[{j}] + "
                "v^-1*(v - v^-1)*Kb[{j-1}]*E[{i},{j-1}]*Kb[{j}]"}},
              v);
        S.add("no-po Eb_a Eb_ji", "Eb[{a},{a+1}]*Eb[{j},{i}]",
              {{farF, "-Eb[{j},{i}]*Eb[{a},{a+1}]"},
               {a == i && longr, "-Eb[{j},{i}]*Eb[{i},{i+1}] - Eb[{j},{i+1}]*Kb[{i+1}]*K[{i}] - v*Kb[{i+1}]*Eb[{j},{i+1}]*K[{i}]"},
               {a == j - 1 && longr,
                "-Eb[{j},{i}]*Eb[{j-1},{j}] - E[{j-1},{i}]*K[{j-1}]^-1*K[{j}]^-1 + (v - v^-1)*Kb[{j-1}]*E[{j-1},{i}]*Kb[{j}] - "
                "v*(v - v^-1)*E[{j-1},{i}]*Kb[{j-1}]*Kb[{j}]",
                "-Eb[{j},{i}]*Eb[{j-1},{j}] - E[{j-1},{i}]*K[{j-1}]^-1*K[{j}]^-1 - (v - v^-1)*Kb[{j-1}]*E[{j-1},{i}]*Kb[{j}] + "
                "v*(v - v^-1)*E[{j-1},{i}]*Kb[{j-1}]*Kb[{j}]",
                "both Kb terms with opposite sign"}},
              v);
      }
  for (int a = 2; a + 2 <= n; ++a) {
    Vars v{{"a", a}};
    S.add("pe-pe E_a E_{a-1,a+2}", "E[{a},{a+1}]*E[{a-1},{a+2}]", {{true, "E[{a-1},{a+2}]*E[{a},{a+1}]"}}, v);
    S.add("pe-po E_a Eb_{a-1,a+2}", "E[{a},{a+1}]*Eb[{a-1},{a+2}]",
          {{true, "E[{a-1},{a+2}]*E[{a},{a+1}]", "Eb[{a-1},{a+2}]*E[{a},{a+1}]", "the bar on the root vector"}}, v);
    S.add("pe-po Eb_a E_{a-1,a+2}", "Eb[{a},{a+1}]*E[{a-1},{a+2}]", {{true, "E[{a-1},{a+2}]*Eb[{a},{a+1}]"}}, v);
    S.add("po-po Eb_a Eb_{a-1,a+2}", "Eb[{a},{a+1}]*Eb[{a-1},{a+2}]",
          {{true, "-E[{a-1},{a+2}]*Eb[{a},{a+1}]", "-Eb[{a-1},{a+2}]*Eb[{a},{a+1}]", "the bar on the root vector"}}, v);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      Vars v{{"i", i}, {"j", j}};
      S.add("ne-pe E_ji E_{j-1}", "E[{j},{i}]*E[{j-1},{j}]", {{true, "E[{j-1},{j}]*E[{j},{i}] + E[{j-1},{i}]*K[{j-1}]^-1*K[{j}]"}}, v);
    }
  for (int k = 1; k <= n; ++k)
    for (int j = k + 2; j <= n; ++j) {
      Vars v{{"k", k}, {"j", j}};
      S.add("ne-po Fb_{j-1} E_kj", "Eb[{j},{j-1}]*E[{k},{j}]",
            {{true, "E[{k},{j}]*Eb[{j},{j-1}] + K[{j}]^-1*E[{k},{j-1}]*Kb[{j-1}] - v^-1*K[{j}]^-1*Kb[{j-1}]*E[{k},{j-1}]"}}, v);
    }

  // root against root
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          Vars v{{"i", i}, {"j", j}, {"k", k}, {"l", l}};
          if (i <= k) {
            S.add("pe-pe", "E[{i},{j}]*E[{k},{l}]",
                  {{j < k || (i < k && l < j), "E[{k},{l}]*E[{i},{j}]"},
                   {j == k, "v^-1*E[{k},{l}]*E[{i},{j}] - E[{i},{l}]"},
                   {(i == k && j < l) || (i < k && j == l), "v*E[{k},{l}]*E[{i},{j}]"},
                   {i < k && k < j && j < l, "E[{k},{l}]*E[{i},{j}] + (v - v^-1)*E[{i},{l}]*E[{k},{j}]"}},
                  v);
            S.add("ne-pe", "E[{j},{i}]*E[{k},{l}]",
                  {{j <= k || (i < k && l < j), "E[{k},{l}]*E[{j},{i}]"},
                   {i == k && j < l, "E[{k},{l}]*E[{j},{i}] - E[{j},{l}]*K[{j}]*K[{i}]^-1"},
                   {i < k && j == l, "E[{k},{l}]*E[{j},{i}] + E[{k},{i}]*K[{j}]*K[{k}]^-1"},
                   {i < k && k < j && j < l, "E[{k},{l}]*E[{j},{i}] - (v - v^-1)*E[{k},{i}]*E[{j},{l}]*K[{j}]*K[{k}]^-1"},
                   {i == k && j == l, "E[{k},{l}]*E[{j},{i}] + (K[{j}]*K[{i}]^-1 - K[{i}]*K[{j}]^-1)/(v - v^-1)"}},
                  v);
            S.add("po-po", "Eb[{i},{j}]*Eb[{k},{l}]",
                  {{j < k || (i < k && l < j), "-Eb[{k},{l}]*Eb[{i},{j}]"},
                   {j == k && l > j + 1,
                    "-v*Eb[{k},{l}]*Eb[{i},{j}] + (v*Eb[{j},{j+1}]*Eb[{j+1},{l}] + Eb[{j+1},{l}]*Eb[{j},{j+1}])*E[{i},{j}] - "
                    "v^-1*E[{i},{j}]*(v*Eb[{j},{j+1}]*Eb[{j+1},{l}] + Eb[{j+1},{l}]*Eb[{j},{j+1}])"},
                   {i == k && j < l, "-v*Eb[{k},{l}]*Eb[{i},{j}]"},
                   {i < k && k < j && j < l, "-Eb[{k},{l}]*Eb[{i},{j}] - (v + v^-1)*Eb[{i},{l}]*Eb[{k},{j}]",
                    "-Eb[{k},{l}]*Eb[{i},{j}] - (v - v^-1)*Eb[{i},{l}]*Eb[{k},{j}]", "(v - v^-1) in place of (v + v^-1)"},
                   {i < k && j == l, "-v^-1*Eb[{k},{l}]*Eb[{i},{j}] - v^-1*(v - v^-1)*E[{i},{j}]*E[{k},{j}]"},
                   {i == k && j == l, "-(v - v^-1)/(v + v^-1)*E[{i},{j}]^2"}},
                  v);
            S.add("no-po", "Eb[{j},{i}]*Eb[{k},{l}]",
                  {{j <= k || (i < k && l < j), "-Eb[{k},{l}]*Eb[{j},{i}]"},
                   {i == k && j < l, "-Eb[{k},{l}]*Eb[{j},{i}] - Kb[{j}]*Eb[{j},{l}]*K[{i}]^-1 - v^-1*Eb[{j},{l}]*Kb[{j}]*K[{i}]^-1"},
                   {i < k && j == l,
                    "-Eb[{k},{l}]*Eb[{j},{i}] - E[{k},{i}]*K[{k}]^-1*K[{j}]^-1 - (v - v^-1)*(E[{j},{i}]*Eb[{k},{j}] - "
                    "Eb[{k},{j}]*E[{j},{i}])*K[{j}]^-1*Kb[{j}]"},
                   {i < k && k < j && j < l,
                    "-Eb[{k},{l}]*Eb[{j},{i}] - (v - v^-1)*Kb[{j}]*Eb[{j},{l}]*E[{k},{i}]*K[{k}]^-1 - "
                    "v^-1*(v - v^-1)*E[{k},{i}]*Eb[{j},{l}]*Kb[{j}]*K[{k}]^-1"},
                   {i == k && j == l,
                    "-Eb[{k},{l}]*Eb[{j},{i}] + (K[{j}]*K[{i}] - K[{i}]^-1*K[{j}]^-1)/(v - v^-1) + (v - v^-1)*Kb[{j}]^2*K[{i}]^-1*K[{j}] - "
                    "(v - v^-1)*(Eb[{j},{i}]*E[{i},{j}] - E[{i},{j}]*Eb[{j},{i}])*K[{j}]*Kb[{j}]"}},
                  v);
          }
          if (k <= i) {
            S.add("pe-pe interchanged", "E[{i},{j}]*E[{k},{l}]",
                  {{l < i || (k < i && j < l), "E[{k},{l}]*E[{i},{j}]"},
                   {l == i, "v*E[{k},{l}]*E[{i},{j}] + v*E[{k},{j}]"},
                   {(k == i && l < j) || (k < i && j == l), "v^-1*E[{k},{l}]*E[{i},{j}]"},
                   {k < i && i < l && l < j, "E[{k},{l}]*E[{i},{j}] - (v - v^-1)*E[{k},{j}]*E[{i},{l}]"}},
                  v);
            S.add("ne-pe interchanged", "E[{j},{i}]*E[{k},{l}]",
                  {{l <= i || (k < i && j < l), "E[{k},{l}]*E[{j},{i}]"},
                   {k == i && l < j, "E[{k},{l}]*E[{j},{i}] - v*E[{j},{l}]*K[{i}]*K[{l}]^-1"},
                   {k < i && j == l, "E[{k},{l}]*E[{j},{i}] + v^-1*E[{k},{i}]*K[{i}]*K[{j}]^-1"},
                   {k < i && i < l && l < j, "E[{k},{l}]*E[{j},{i}] - (v - v^-1)*E[{k},{i}]*E[{j},{l}]*K[{i}]*K[{l}]^-1",
                    "E[{k},{l}]*E[{j},{i}] + (v - v^-1)*E[{k},{i}]*E[{j},{l}]*K[{i}]*K[{l}]^-1", "+(v - v^-1) in place of -(v - v^-1)"}},
                  v);
            S.add("po-po interchanged", "Eb[{i},{j}]*Eb[{k},{l}]",
                  {{l < i || (k < i && j < l), "-Eb[{k},{l}]*Eb[{i},{j}]"},
                   {l == i && j > i + 1,
                    "-v^-1*Eb[{k},{i}]*Eb[{i},{j}] + (Eb[{i},{i+1}]*Eb[{i+1},{j}] + v^-1*Eb[{i+1},{j}]*Eb[{i},{i+1}])*E[{k},{i}] - "
                    "v^-1*E[{k},{i}]*(Eb[{i},{i+1}]*Eb[{i+1},{j}] + v^-1*Eb[{i+1},{j}]*Eb[{i},{i+1}])"},
                   {k == i && l < j, "-v^-1*Eb[{k},{l}]*Eb[{i},{j}]"},
                   {k < i && i < l && l < j, "-Eb[{k},{l}]*Eb[{i},{j}] - (v + v^-1)*Eb[{k},{j}]*Eb[{i},{l}]",
                    "-Eb[{k},{l}]*Eb[{i},{j}] - (v - v^-1)*Eb[{k},{j}]*Eb[{i},{l}]", "(v - v^-1) in place of (v + v^-1)"},
                   {k < i && j == l, "-v*Eb[{k},{l}]*Eb[{i},{j}] - (v - v^-1)*E[{k},{j}]*E[{i},{j}]"}},
                  v);
            S.add("no-po interchanged", "Eb[{j},{i}]*Eb[{k},{l}]",
                  {{l <= i || (k < i && j < l), "-Eb[{k},{l}]*Eb[{j},{i}]"},
                   {k == i && l < j, "-Eb[{k},{l}]*Eb[{j},{i}] - Eb[{j},{l}]*Kb[{l}]*K[{i}] - v*Kb[{l}]*Eb[{j},{l}]*K[{i}]"},
                   {k < i && j == l,
                    "-Eb[{k},{l}]*Eb[{j},{i}] - v^-1*E[{k},{i}]*K[{i}]*K[{j}] + (v - v^-1)*Kb[{j}]*(Eb[{j},{i}]*E[{k},{j}] - "
                    "E[{k},{j}]*Eb[{j},{i}])*K[{j}]"},
                   {k < i && i < l && l < j,
                    "-Eb[{k},{l}]*Eb[{j},{i}] + (v - v^-1)*Kb[{l}]*Eb[{j},{l}]*E[{k},{i}]*K[{i}] + "
                    "v^-1*(v - v^-1)*Eb[{j},{l}]*Kb[{l}]*E[{k},{i}]*K[{i}]"}},
                  v);
          }
          // stated for all i<j, k<l
          S.add("pe-po", "E[{i},{j}]*Eb[{k},{l}]",
                {{j < k || (i < k && l < j) || (i == k && j == l) || l < i || (k < i && j < l), "Eb[{k},{l}]*E[{i},{j}]"},
                 {j == k, "v^-1*Eb[{k},{l}]*E[{i},{j}] - Eb[{i},{l}]"},
                 {i == k && j < l, "v*Eb[{k},{l}]*E[{i},{j}]"},
                 {i < k && k < j && j < l, "Eb[{k},{l}]*E[{i},{j}] + (v - v^-1)*E[{k},{j}]*Eb[{i},{l}]"},
                 {i < k && j == l, "v^-1*Eb[{k},{l}]*E[{i},{j}] + Eb[{i},{j}]*E[{k},{j}] - v^-1*E[{k},{j}]*Eb[{i},{j}]"},
                 {l == i && j > i + 1,
                  "v^-1*Eb[{k},{l}]*E[{i},{j}] - (Eb[{i},{i+1}]*E[{i+1},{j}] - v^-1*E[{i+1},{j}]*Eb[{i},{i+1}])*E[{k},{i}] + "
                  "v^-1*E[{k},{i}]*(Eb[{i},{i+1}]*E[{i+1},{j}] - v^-1*E[{i+1},{j}]*Eb[{i},{i+1}])"},
                 {k == i && l < j, "v^-1*Eb[{k},{l}]*E[{i},{j}]"},
                 {k < i && i < l && l < j, "Eb[{k},{l}]*E[{i},{j}] + v^-1*Eb[{i},{l}]*E[{k},{j}] - v*E[{k},{j}]*Eb[{i},{l}]"},
                 {k < i && j == l, "v*Eb[{k},{l}]*E[{i},{j}] - v*E[{k},{j}]*Eb[{i},{j}] + Eb[{i},{j}]*E[{k},{j}]"}},
                v);
          S.add("ne-po", "E[{j},{i}]*Eb[{k},{l}]",
                {{j <= k || (i < k && l < j) || l <= i || (k < i && j < l), "Eb[{k},{l}]*E[{j},{i}]"},
                 {i == k && j < l, "Eb[{k},{l}]*E[{j},{i}] - Eb[{j},{l}]*K[{j}]*K[{i}]^-1"},
                 {i < k && j == l,
                  "Eb[{k},{l}]*E[{j},{i}] + Eb[{j},{i}]*E[{k},{j}]*K[{j}]^2 - E[{k},{j}]*Eb[{j},{i}]*K[{j}]^2 - "
                  "(v - v^-1)*E[{k},{i}]*Kb[{j}]*K[{k}]^-1*K[{j}]^2"},
                 {i < k && k < j && j < l, "Eb[{k},{l}]*E[{j},{i}] - (v - v^-1)*E[{k},{i}]*Eb[{j},{l}]*K[{j}]*K[{k}]^-1"},
                 {i == k && j == l,
                  "Eb[{k},{l}]*E[{j},{i}] + (Eb[{j},{i}]*E[{i},{j}] - E[{i},{j}]*Eb[{j},{i}])*K[{j}]^2 + Kb[{j}]*K[{i}]^-1*K[{j}]^2 + "
                  "Kb[{j}]*K[{i}]",
                  "Eb[{k},{l}]*E[{j},{i}] + (Eb[{j},{i}]*E[{i},{j}] - E[{i},{j}]*Eb[{j},{i}])*K[{j}]^2 - Kb[{j}]*K[{i}]^-1*K[{j}]^2 + "
                  "Kb[{j}]*K[{i}]",
                  "-Kb_j K_i^-1 K_j^2 in place of +Kb_j K_i^-1 K_j^2"},
                 {k == i && l < j, "Eb[{k},{l}]*E[{j},{i}] + v*Kb[{l}]*E[{j},{l}]*K[{i}] - E[{j},{l}]*Kb[{l}]*K[{i}]"},
                 {k < i && i < l && l < j,
                  "Eb[{k},{l}]*E[{j},{i}] - (v - v^-1)*Kb[{l}]*E[{j},{l}]*E[{k},{i}]*K[{i}] + "
                  "(1 - v^-2)*E[{j},{l}]*Kb[{l}]*E[{k},{i}]*K[{i}]"},
                 {k < i && j == l,
                  "Eb[{k},{j}]*E[{j},{i}] + Eb[{j},{i}]*E[{k},{j}]*K[{j}]^2 - E[{k},{j}]*Eb[{j},{i}]*K[{j}]^2 - "
                  "(1 - v^-2)*E[{k},{i}]*K[{i}]*Kb[{j}]"}},
                v);
        }
  return out;
}

SuiteReport lemma_suite(Engine& eng) {
  auto t0 = std::chrono::steady_clock::now();
  Braid br(eng);
  Evaluator ev(eng, br);
  SuiteReport rep;
  rep.name = "lemmas n=" + std::to_string(eng.n());
  for (const Display& d : lemma_displays(eng.n())) check_display(ev, rep, d);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SuiteReport lemma_oracle_sample(Engine& eng, double fraction, unsigned seed) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Display> ds = lemma_displays(eng.n());
  std::vector<size_t> order(ds.size());
  std::iota(order.begin(), order.end(), size_t(0));
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(size_t(std::ceil(fraction * double(ds.size()))));
  std::sort(order.begin(), order.end());
  SuiteReport rep;
  rep.name = "lemma oracle sample n=" + std::to_string(eng.n());
  for (size_t i : order) {
    const Display& d = ds[i];
    const std::string& l = d.fixed_lhs.empty() ? d.lhs : d.fixed_lhs;
    const std::string& r = d.fixed_rhs.empty() ? d.rhs : d.fixed_rhs;
    ++rep.checked;
    try {
      if (!oracle_equal(eng, l, r, 0, 3, seed + i)) rep.failures.push_back(d.name + ": not in the ideal slice");
    } catch (const std::exception& ex) {
      rep.failures.push_back(d.name + ": " + ex.what());
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace qn
