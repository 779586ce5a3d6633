#pragma once

#include <string>
#include <string_view>

#include "eulerdec/poly.hpp"

namespace eulerdec {

// Polynomial text formats shared by every CLI input and output.
//
//   coefficient list:  "c0,c1,...,cn"   ascending powers, each "p" or "p/q"
//   human form:        "3/4*x^2 - x + 5" terms a*x^k joined by + or -
//
// Input containing an 'x' is read as human form, anything else as a
// coefficient list. Mixed or ambiguous text (commas together with 'x',
// empty terms, dangling operators) is rejected with Error.

Poly parse_poly(std::string_view text);

/// "c0,c1,...,cn"; the zero polynomial prints as "0".
std::string format_coeff_list(const Poly& p);

/// Human form with descending powers, e.g. "x^4 - 2*x^3 + x".
std::string format_human(const Poly& p);

}  // namespace eulerdec
