// qnkit: command line front end for the qn library
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qn/braid.hpp"
#include "qn/expr.hpp"
#include "qn/integral.hpp"
#include "qn/lemmas.hpp"
#include "qn/pbw.hpp"
#include "qn/serialize.hpp"
#include "qn/unity.hpp"

using namespace qn;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Opts {
  int n = 2;
  int l = 3;
  std::string expr, lhs, rhs;
  bool json = false;
  unsigned seed = 1;
  long max_steps = 0;
  int cap = 3;
  int kcap = 0;
  int i = 1;
  bool inverse = false, divided = false;
  double oracle_fraction = 0;
  std::string suite;
};

json report_json(const SuiteReport& r) {
  return {{"suite", r.name},
          {"checked", r.checked},
          {"passed", r.checked - std::min(r.checked, r.failures.size())},
          {"ok", r.ok()},
          {"failures", r.failures},
          {"corrections", r.notes},
          {"info", r.info}};
}

void print_report(const SuiteReport& r) {
  std::cout << r.summary() << " [" << r.seconds << "s]\n";
  for (auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
  for (auto& c : r.notes) std::cout << "  corrected: " << c << "\n";
  for (auto& c : r.info) std::cout << "  info: " << c << "\n";
}

void check_opts(const Opts& o) {
  if (o.n < 2 || o.n > 9) throw UsageError("--n must lie in 2..9");
  if (o.l < 3 || o.l % 2 == 0) throw UsageError("--l must be odd and >= 3");
  if (o.cap < 0 || o.kcap < 0) throw UsageError("--cap/--kcap must be >= 0");
  if (o.i < 1 || o.i >= o.n) throw UsageError("--i must lie in 1..n-1");
}

const std::string& need(const std::string& s, const char* flag) {
  if (s.empty()) throw UsageError(std::string(flag) + " is required");
  return s;
}

int run(const std::string& verb, const Opts& o) {
  check_opts(o);
  Engine eng(o.n);
  if (o.max_steps > 0) eng.set_step_budget(o.max_steps);
  Braid br(eng);
  Evaluator ev(eng, br);
  const Alphabet& A = eng.alpha();
  auto out_element = [&](const Element& x) {
    if (o.json) std::cout << dump(to_json(A, x));
    else std::cout << render(A, x) << "\n";
  };

  if (verb == "normalize") {
    out_element(ev.eval(need(o.expr, "--expr")));
    return 0;
  }
  if (verb == "omega") {
    out_element(br.omega(ev.eval(need(o.expr, "--expr"))));
    return 0;
  }
  if (verb == "braid") {
    out_element(br.apply(o.i, o.inverse, ev.eval(need(o.expr, "--expr"))));
    return 0;
  }
  if (verb == "equal") {
    Element d = ev.eval(need(o.lhs, "--lhs")) - ev.eval(need(o.rhs, "--rhs"));
    if (o.json) std::cout << dump({{"equal", d.is_zero()}, {"difference", to_json(A, d)}});
    else std::cout << (d.is_zero() ? "equal" : "not equal; lhs - rhs = " + render(A, d)) << "\n";
    return d.is_zero() ? 0 : 1;
  }
  if (verb == "enumerate-basis") {
    json arr = json::array();
    std::vector<std::string> lines;
    if (o.divided) {
      for (auto& d : enumerate_divided_basis(o.n, o.cap)) {
        arr.push_back(to_json(A, d));
        lines.push_back(render(A, d));
      }
    } else {
      for (auto& m : enumerate_pbw(o.n, o.cap, o.kcap)) {
        arr.push_back(to_json(A, m));
        lines.push_back(m.empty() ? "1" : render(A, m.word()));
      }
    }
    if (o.json) std::cout << dump({{"n", o.n}, {"count", arr.size()}, {"monomials", arr}});
    else {
      std::cout << lines.size() << " monomials\n";
      for (auto& s : lines) std::cout << s << "\n";
    }
    return 0;
  }
  if (verb == "check-integral") {
    auto cert = integrality_check(eng, ev.eval(need(o.expr, "--expr")));
    json exp = json::array();
    for (auto& [d, c] : cert.expansion) {
      json t = to_json(A, d);
      t["coeff"] = to_json(c);
      exp.push_back(t);
    }
    if (o.json) std::cout << dump({{"integral", cert.integral}, {"offending", cert.offending}, {"expansion", exp}});
    else {
      std::cout << (cert.integral ? "integral" : "not integral: " + cert.offending) << "\n";
      for (auto& [d, c] : cert.expansion) std::cout << "  (" << c.str() << ") " << render(A, d) << "\n";
    }
    return cert.integral ? 0 : 1;
  }
  if (verb == "specialize") {
    ElementCyclo z;
    try {
      z = specialize_element(eng, ev.eval(need(o.expr, "--expr")), o.l);
    } catch (const PoleAtEpsilon& ex) {
      if (o.json) std::cout << dump({{"l", o.l}, {"error", ex.what()}});
      else std::cout << "pole: " << ex.what() << "\n";
      return 1;
    }
    json arr = json::array();
    for (auto& [d, c] : z.terms) {
      json t = to_json(A, d);
      json cs = json::array();
      for (auto& q : c.coeffs()) cs.push_back(q.get_str());
      t["coeff"] = cs;
      arr.push_back(t);
    }
    if (o.json) std::cout << dump({{"n", o.n}, {"l", o.l}, {"terms", arr}});
    else std::cout << render(A, z) << "\n";
    return 0;
  }
  if (verb == "census") {
    Census c = restricted_rank_census(o.n, o.l);
    if (o.json) {
      json parts = json::array();
      for (auto& p : c.parts)
        parts.push_back({{"part", p.name},
                         {"even", p.even},
                         {"odd", p.odd},
                         {"choices", {p.gen_count, p.flag_count}},
                         {"printed", p.printed},
                         {"printed_value", {p.printed_gen, p.printed_flag}},
                         {"agrees", p.agrees}});
      std::cout << dump({{"n", c.n}, {"l", c.l}, {"parts", parts}, {"flags", c.flags}});
    } else {
      std::cout << render(c);
    }
    return 0;  // reports, never fails
  }
  if (verb == "verify-suite") {
    std::vector<SuiteReport> reps;
    const std::string& s = o.suite;
    if (s == "qq") reps.push_back(qq_suite(eng));
    else if (s == "confluence") reps.push_back(confluence_check(eng));
    else if (s == "lemmas") {
      reps.push_back(lemma_suite(eng));
      if (o.oracle_fraction > 0) reps.push_back(lemma_oracle_sample(eng, o.oracle_fraction, o.seed));
    } else if (s == "qz") reps.push_back(qz_suite(eng, o.cap));
    else if (s == "qu") {
      reps.push_back(binomial_vanishing_suite(o.l));
      reps.push_back(nilpotency_suite(eng, o.l));
      reps.push_back(centrality_suite(eng, o.l));
      reps.push_back(qu_presentation_suite(eng, o.l));
      reps.push_back(specialization_hom_suite(eng, o.l, 100, o.seed));
    } else if (s == "braid") reps.push_back(braid_suite(eng));
    else if (s == "omega") reps.push_back(omega_suite(eng, o.seed));
    else if (s == "pbw") reps.push_back(pbw_suite(eng, 4, 1000, o.seed));
    else if (s == "closure") reps.push_back(closure_suite(eng, o.cap, 1500, o.seed));
    else if (s == "tstab") reps.push_back(t_stability_suite(eng, o.cap));
    else if (s == "presentation") reps.push_back(presentation_iso_suite(eng, o.cap));
    bool ok = true;
    json arr = json::array();
    for (auto& r : reps) {
      ok = ok && r.ok();
      arr.push_back(report_json(r));
      if (!o.json) print_report(r);
    }
    if (o.json) std::cout << dump({{"n", o.n}, {"ok", ok}, {"reports", arr}});
    return ok ? 0 : 1;
  }
  throw UsageError("unknown verb " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the quantum queer superalgebra U_v(q_n)", "qnkit"};
  app.require_subcommand(1);
  Opts o;
  struct Verb {
    const char* name;
    const char* help;
  };
  const std::vector<Verb> verbs{
      {"normalize", "PBW normal form of --expr"},
      {"equal", "exit 0 iff --lhs and --rhs normalize to the same element"},
      {"verify-suite", "run a verification suite"},
      {"braid", "T_i (or T_i^-1 with --inverse) of --expr"},
      {"omega", "the anti-involution Omega of --expr"},
      {"enumerate-basis", "PBW monomials (or the divided-power basis) up to --cap"},
      {"check-integral", "divided-power expansion of --expr and its integrality"},
      {"specialize", "image of --expr at a primitive l-th root of unity"},
      {"census", "restricted basis counts against the printed ranks"},
  };
  std::string chosen;
  for (auto& v : verbs) {
    CLI::App* c = app.add_subcommand(v.name, v.help);
    c->add_option("--n", o.n, "rank n >= 2");
    c->add_flag("--json", o.json, "print JSON");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--max-steps", o.max_steps, "step budget per normalize call (overrides QNKIT_MAX_STEPS)");
    c->add_option("--cap", o.cap, "exponent cap");
    std::string name = v.name;
    if (name == "normalize" || name == "braid" || name == "omega" || name == "check-integral" || name == "specialize")
      c->add_option("--expr", o.expr, "expression");
    if (name == "equal") {
      c->add_option("--lhs", o.lhs, "left side");
      c->add_option("--rhs", o.rhs, "right side");
    }
    if (name == "specialize" || name == "census" || name == "verify-suite") c->add_option("--l", o.l, "odd order of eps");
    if (name == "braid") {
      c->add_option("--i", o.i, "index of T_i");
      c->add_flag("--inverse", o.inverse, "apply T_i^-1");
    }
    if (name == "enumerate-basis") {
      c->add_option("--kcap", o.kcap, "bound on |K exponents|");
      c->add_flag("--divided", o.divided, "the divided-power basis");
    }
    if (name == "verify-suite") {
      c->add_option("suite", o.suite, "suite name")
          ->required()
          ->check(CLI::IsMember({"qq", "lemmas", "qz", "qu", "braid", "omega", "pbw", "closure", "tstab",
                                 "presentation", "confluence"}));
      c->add_option("--oracle-fraction", o.oracle_fraction, "lemmas: fraction also checked by the ideal oracle");
    }
    c->callback([&chosen, name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run(chosen, o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at offset " << e.offset << ": " << e.what() << "\n";
    return 2;
  } catch (const IndexError& e) {
    std::cerr << "index error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
