#pragma once

#include <string>

#include "json.hpp"
#include "qn/algebra.hpp"
#include "qn/integral.hpp"

namespace qn {

// {n, terms: [{neg: [[j,i,a0,a1]..], cartan: [[i,sigma,xi]..], pos: [[i,j,a0,a1]..],
//  coeff: {num, den}}]}, terms sorted by their serialized monomial
nlohmann::json to_json(const Alphabet& A, const Element& x);
nlohmann::json to_json(const Alphabet& A, const Mono& m);
nlohmann::json to_json(const RatFunc& c);
nlohmann::json to_json(const Alphabet& A, const DMono& m);  // cartan entries [i,tau,t,xi]
Element element_from_json(Engine& eng, const nlohmann::json& j);

// compact, key-sorted, newline-terminated; the form the CLI prints
std::string dump(const nlohmann::json& j);

}  // namespace qn
