#pragma once

#include "cpx/algebra/integer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cpx::detail {

// Monomial such as "q", "q^-2" or "" for exponent zero.
inline std::string monomial_text(char var, int e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// Joins signed terms "c*m" in the order given.
inline std::string join_terms(const std::vector<std::pair<Int, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    std::string body;
    if (mono.empty()) {
      body = mag.str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.str() + "*" + mono;
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace cpx::detail
