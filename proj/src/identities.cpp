#include "qn/identities.hpp"

namespace qn {

void check_display(Evaluator& ev, SuiteReport& rep, const Display& d, const ZeroTest& zero) {
  auto vanishes = [&](const std::string& l, const std::string& r, std::string& residue) {
    Element x = ev.eval("(" + l + ") - (" + r + ")");
    bool z = zero ? zero(x) : x.is_zero();
    if (!z) residue = std::to_string(x.size()) + " terms";
    return z;
  };
  ++rep.checked;
  std::string res;
  try {
    if (vanishes(d.lhs, d.rhs, res)) return;
  } catch (const std::exception& ex) {
    res = ex.what();
  }
  if (d.fixed_lhs.empty() && d.fixed_rhs.empty()) {
    rep.failures.push_back(d.name + ": " + d.lhs + " = " + d.rhs + " fails (" + res + ")");
    return;
  }
  std::string res2;
  try {
    if (vanishes(d.fixed_lhs.empty() ? d.lhs : d.fixed_lhs, d.fixed_rhs.empty() ? d.rhs : d.fixed_rhs, res2)) {
      rep.notes.push_back(d.name + ": printed form fails (" + res + "); holds with " + d.fix_note);
      return;
    }
  } catch (const std::exception& ex) {
    res2 = ex.what();
  }
  rep.failures.push_back(d.name + ": fails as printed (" + res + ") and corrected (" + res2 + ")");
}

}  // namespace qn
