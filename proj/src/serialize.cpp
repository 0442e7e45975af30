#include "qn/serialize.hpp"

#include <algorithm>
#include <stdexcept>

#include "qn/braid.hpp"
#include "qn/expr.hpp"

namespace qn {

using nlohmann::json;

namespace {

// root parts as [[a,b,a0,a1]...] in slot order, even and odd exponents merged
json roots(const Alphabet& A, const std::vector<std::pair<int, int>>& f, int region) {
  json out = json::array();
  for (auto& [s, e] : f) {
    const SlotInfo& x = A.info(s);
    if (x.region != region) continue;
    bool odd = x.kind == Kind::Odd;
    if (!out.empty() && out.back()[0] == x.i && out.back()[1] == x.j) {
      out.back()[odd ? 3 : 2] = e;
      continue;
    }
    out.push_back({x.i, x.j, odd ? 0 : e, odd ? e : 0});
  }
  return out;
}

}  // namespace

json to_json(const RatFunc& c) { return {{"num", c.num().str()}, {"den", c.den().str()}}; }

json to_json(const Alphabet& A, const Mono& m) {
  json cart = json::array();
  for (auto& [s, e] : m.f) {
    const SlotInfo& x = A.info(s);
    if (x.region != 0) continue;
    if (cart.empty() || cart.back()[0] != x.i) cart.push_back({x.i, 0, 0});
    cart.back()[x.kind == Kind::K ? 1 : 2] = e;
  }
  return {{"neg", roots(A, m.f, -1)}, {"cartan", cart}, {"pos", roots(A, m.f, 1)}};
}

json to_json(const Alphabet& A, const DMono& d) {
  json cart = json::array();
  for (size_t i = 0; i < d.cartan.size(); ++i) {
    auto& c = d.cartan[i];
    if (c[0] || c[1] || c[2]) cart.push_back({int(i) + 1, c[0], c[1], c[2]});
  }
  return {{"neg", roots(A, d.neg.f, -1)}, {"cartan", cart}, {"pos", roots(A, d.pos.f, 1)}};
}

json to_json(const Alphabet& A, const Element& x) {
  std::vector<std::pair<std::string, json>> terms;
  for (auto& [m, c] : x.terms) {
    json t = to_json(A, m);
    std::string key = t.dump();
    t["coeff"] = to_json(c);
    terms.emplace_back(std::move(key), std::move(t));
  }
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
  json arr = json::array();
  for (auto& t : terms) arr.push_back(std::move(t.second));
  return {{"n", A.n()}, {"terms", arr}};
}

Element element_from_json(Engine& eng, const json& j) {
  const Alphabet& A = eng.alpha();
  if (j.at("n").get<int>() != A.n()) throw std::invalid_argument("rank mismatch");
  Braid br(eng);
  Evaluator ev(eng, br);
  Element out;
  for (auto& t : j.at("terms")) {
    Word w;
    for (auto& r : t.at("neg")) {
      int a = r[0], b = r[1];
      if (int e = r[2]; e) w.push_back({A.root_slot(a, b, false), e});
      if (int e = r[3]; e) w.push_back({A.root_slot(a, b, true), e});
    }
    for (auto& c : t.at("cartan")) {
      if (int e = c[1]; e) w.push_back({A.k_slot(c[0]), e});
      if (int e = c[2]; e) w.push_back({A.kb_slot(c[0]), e});
    }
    for (auto& r : t.at("pos")) {
      int a = r[0], b = r[1];
      if (int e = r[2]; e) w.push_back({A.root_slot(a, b, false), e});
      if (int e = r[3]; e) w.push_back({A.root_slot(a, b, true), e});
    }
    const json& c = t.at("coeff");
    Element coeff = ev.eval("(" + c.at("num").get<std::string>() + ")/(" + c.at("den").get<std::string>() + ")");
    out += eng.multiply(coeff, eng.normalize(w));
  }
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace qn
