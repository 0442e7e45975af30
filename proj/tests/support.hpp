#pragma once

#include <map>
#include <string>

#include "qn/braid.hpp"
#include "qn/expr.hpp"

// one engine per rank, shared across a test binary
struct Session {
  qn::Engine eng;
  qn::Braid br;
  qn::Evaluator ev;
  explicit Session(int n) : eng(n), br(eng), ev(eng, br) {}
  qn::Element operator()(const std::string& s) { return ev.eval(s); }
  bool same(const std::string& a, const std::string& b) { return (ev.eval(a) - ev.eval(b)).is_zero(); }
};

inline Session& session(int n) {
  static std::map<int, Session*> s;
  auto& p = s[n];
  if (!p) p = new Session(n);
  return *p;
}
