#pragma once

#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/zpoly.hpp"

#include <string_view>

namespace cpx {

// Reads the canonical text form, e.g. "-1 + z^2" or "q^-2 + 3*q".
// Whitespace is ignored and repeated exponents are summed.
IntLaurent parse_laurent(std::string_view text, char var = 'q');
ZPoly parse_zpoly(std::string_view text, char var = 'z');

}  // namespace cpx
