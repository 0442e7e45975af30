// One PASS/FAIL line per acceptance criterion. Exits 0 once every line has
// been printed; with --strict it exits 1 if any line is FAIL.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qn/braid.hpp"
#include "qn/integral.hpp"
#include "qn/lemmas.hpp"
#include "qn/pbw.hpp"
#include "qn/serialize.hpp"
#include "qn/unity.hpp"
#include "random_ast.hpp"

using namespace qn;
using Clock = std::chrono::steady_clock;

namespace {

int failed = 0;

void emit(bool pass, const std::string& name, const std::string& detail) {
  if (!pass) ++failed;
  std::cout << (pass ? "PASS" : "FAIL") << "  " << name << ": " << detail << std::endl;
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

// run f, time it, report failures; true if the report is ok and within limit
bool timed(std::vector<std::string>& parts, double limit, const std::function<SuiteReport()>& f) {
  auto t0 = Clock::now();
  SuiteReport r;
  try {
    r = f();
  } catch (const std::exception& ex) {
    parts.push_back(std::string("exception: ") + ex.what());
    return false;
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream os;
  os << r.name << " " << (r.checked - r.failures.size()) << "/" << r.checked;
  if (!r.notes.empty()) os << " (" << r.notes.size() << " after correction)";
  os << " " << secs(dt);
  if (limit > 0) os << (dt < limit ? " < " : " >= ") << secs(limit);
  if (!r.failures.empty()) os << " first failure: " << r.failures.front().substr(0, 160);
  parts.push_back(os.str());
  return r.ok() && (limit <= 0 || dt < limit);
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r{-1, ""};
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int main(int argc, char** argv) {
  std::string qnkit = "./qnkit";
  bool strict = false;
  for (int a = 1; a < argc; ++a) {
    std::string s = argv[a];
    if (s == "--strict") strict = true;
    else qnkit = s;
  }

  {  // QQ relations
    std::vector<std::string> parts;
    bool ok = true;
    for (auto [n, limit] : {std::pair{3, 60.0}, std::pair{4, 600.0}}) {
      Engine eng(n);
      ok = timed(parts, limit, [&] { return qq_suite(eng); }) && ok;
    }
    emit(ok, "QQ relation suite", join(parts));
  }

  {  // commutation lemmas, plus an oracle sample
    std::vector<std::string> parts;
    auto t0 = Clock::now();
    Engine eng(4);
    bool ok = timed(parts, 0, [&] { return lemma_suite(eng); });
    ok = timed(parts, 0, [&] { return lemma_oracle_sample(eng, 0.1, 11); }) && ok;
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    ok = ok && dt < 1800;
    emit(ok, "lemma suite n=4", join(parts) + "; total " + secs(dt) + " (limit 1800s)");
  }

  {
    std::vector<std::string> parts;
    Engine eng(3);
    bool ok = timed(parts, 300, [&] { return braid_suite(eng); });
    emit(ok, "braid suite n=3", join(parts));
  }

  {
    std::vector<std::string> parts;
    bool ok = true;
    for (int n : {2, 3}) {
      Engine eng(n);
      ok = timed(parts, 300, [&] { return omega_suite(eng, 1, 200); }) && ok;
    }
    emit(ok, "Omega suite", join(parts));
  }

  {
    std::vector<std::string> parts;
    Engine eng(2);
    bool ok = timed(parts, 600, [&] { return pbw_suite(eng, 4, 1000, 5); });
    emit(ok, "PBW suite n=2", join(parts));
  }

  {  // integral form
    std::vector<std::string> parts;
    auto t0 = Clock::now();
    Engine e3(3);
    bool ok = timed(parts, 0, [&] { return qz_suite(e3, 3); });
    ok = timed(parts, 0, [&] { return t_stability_suite(e3, 3); }) && ok;
    ok = timed(parts, 0, [&] { return presentation_iso_suite(e3, 3); }) && ok;
    // All ordered pairs of basis elements with entries <= 3 at n = 2 is far
    // beyond the time limit, so only a sample is run and the line cannot pass.
    Engine e2(2);
    const int random_pairs = 500;
    bool sample_ok = timed(parts, 0, [&] { return closure_suite(e2, 3, random_pairs, 7, 2); });
    double total_pairs = std::pow(double(enumerate_divided_basis(2, 3).size()), 2);
    std::ostringstream cov;
    cov << "closure exhaustive over " << total_pairs << " pairs not run (sampled only"
        << (sample_ok ? ", sample integral)" : ", sample has failures)");
    parts.push_back(cov.str());
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool exhaustive = false;
    emit(ok && exhaustive, "integral suite", join(parts) + "; total " + secs(dt) + " (limit 1800s)");
  }

  {  // roots of unity
    std::vector<std::string> parts;
    auto t0 = Clock::now();
    bool ok = true;
    for (int l : {3, 5}) ok = timed(parts, 0, [&] { return binomial_vanishing_suite(l); }) && ok;
    for (int n : {2, 3}) {
      Engine eng(n);
      for (int l : {3, 5}) {
        ok = timed(parts, 0, [&] { return nilpotency_suite(eng, l); }) && ok;
        ok = timed(parts, 0, [&] { return centrality_suite(eng, l); }) && ok;
        ok = timed(parts, 0, [&] { return qu_presentation_suite(eng, l); }) && ok;
        ok = timed(parts, 0, [&] { return specialization_hom_suite(eng, l, 100, 3); }) && ok;
      }
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    ok = ok && dt < 600;
    emit(ok, "root-of-unity suite", join(parts) + "; total " + secs(dt) + " (limit 600s)");
    Census c = restricted_rank_census(2, 3);
    std::istringstream in(render(c));
    for (std::string line; std::getline(in, line);) std::cout << "      " << line << "\n";
  }

  {  // frontend
    std::vector<std::string> parts;
    bool ok = true;
    qntest::AstGen g(2024, 4);
    int rt = 0;
    for (int k = 0; k < 1000; ++k) {
      ExprPtr e = g.tree(4);
      try {
        std::string text = render(e);
        if (*parse(text, 4) == *e && render(parse(text, 4)) == text) ++rt;
      } catch (const std::exception&) {
      }
    }
    ok = ok && rt == 1000;
    parts.push_back("round trip " + std::to_string(rt) + "/1000");

    std::vector<std::string> det{
        qnkit + " normalize --n 3 --json --seed 7 --expr " + quote("T(1,E[2])*Fb[2]^2 + Kb[1]*Kb[1]"),
        qnkit + " verify-suite pbw --n 2 --json --seed 9",
        qnkit + " verify-suite omega --n 3 --json --seed 4",
        qnkit + " enumerate-basis --n 2 --cap 1 --divided --json",
    };
    int same = 0;
    for (auto& cmd : det) {
      Run a = run(cmd), b = run(cmd);
      if (a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out) ++same;
    }
    ok = ok && same == int(det.size());
    parts.push_back("deterministic " + std::to_string(same) + "/" + std::to_string(det.size()));

    Engine eng(2);
    Braid br(eng);
    Evaluator ev(eng, br);
    std::string qq4 = dump(to_json(eng.alpha(), ev.eval("F[1]*E[1] + (K[1]*K[2]^-1 - K[1]^-1*K[2])/(v - v^-1)")));
    Run r1 = run(qnkit + " normalize --n 2 --expr " + quote("E[1]*F[1]") + " --json");
    Run r2 = run(qnkit + " verify-suite qq --n 3");
    Run r3 = run(qnkit + " equal --n 3 --lhs " + quote("T(1,E[2])") + " --rhs " + quote("-E[1]*E[2] + v^-1*E[2]*E[1]"));
    bool ex = r1.code == 0 && r1.out == qq4 && r2.code == 0 && r3.code == 0;
    ok = ok && ex;
    parts.push_back("exit codes normalize=" + std::to_string(r1.code) + (r1.out == qq4 ? " (QQ4 form)" : " (wrong output)") +
                    " verify-suite=" + std::to_string(r2.code) + " equal=" + std::to_string(r3.code));
    emit(ok, "frontend", join(parts));
  }

  std::cout << (failed ? std::to_string(failed) + " criterion line(s) FAIL" : std::string("all criteria PASS")) << "\n";
  return strict && failed ? 1 : 0;
}
