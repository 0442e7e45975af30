#pragma once

#include <functional>
#include <string>

#include "qn/expr.hpp"
#include "qn/relations.hpp"

namespace qn {

// One instance of a printed identity lhs = rhs in surface syntax. When the
// printed form is known to be off, fixed_lhs/fixed_rhs hold the corrected one.
struct Display {
  std::string name;
  std::string lhs, rhs;
  std::string fixed_lhs, fixed_rhs;
  std::string fix_note;
};

using ZeroTest = std::function<bool(const Element&)>;

// Evaluates lhs - rhs. A printed form that fails while its correction holds is
// logged in rep.notes; anything else that does not vanish is a failure.
void check_display(Evaluator& ev, SuiteReport& rep, const Display& d, const ZeroTest& zero = {});

}  // namespace qn
