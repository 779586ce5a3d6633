#include "eulerdec/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "eulerdec/error.hpp"

namespace eulerdec {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Poly parse_coeff_list(const std::string& s) {
  std::vector<Rat> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const auto field = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (field.empty()) throw Error("empty coefficient in '" + s + "'");
    coeffs.push_back(Rat::parse(field));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(coeffs));
}

// One term without its sign: "3/4*x^2", "x", "x^3", "7", "2*x".
Poly parse_term(const std::string& term, bool negative) {
  if (term.empty()) throw Error("dangling operator in polynomial text");
  const auto xpos = term.find('x');
  Rat coeff(1);
  std::size_t power = 0;
  if (xpos == std::string::npos) {
    coeff = Rat::parse(term);
  } else {
    if (term.find('x', xpos + 1) != std::string::npos) throw Error("malformed term '" + term + "'");
    if (xpos > 0) {
      if (term[xpos - 1] != '*') throw Error("missing '*' before x in term '" + term + "'");
      coeff = Rat::parse(term.substr(0, xpos - 1));
    }
    const auto rest = term.substr(xpos + 1);
    if (rest.empty()) {
      power = 1;
    } else {
      if (rest[0] != '^' || rest.size() < 2) throw Error("malformed exponent in term '" + term + "'");
      for (std::size_t i = 1; i < rest.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(rest[i]))) throw Error("malformed exponent in term '" + term + "'");
      }
      if (rest.size() > 7) throw Error("exponent too large in term '" + term + "'");
      power = std::stoul(rest.substr(1));
    }
  }
  return Poly::monomial(negative ? -coeff : coeff, power);
}

Poly parse_human(const std::string& s) {
  Poly acc;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  std::string term;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    // A sign directly after '/' or '^' belongs to a number, which the
    // grammar never allows, so every +/- here is a term separator.
    if (c == '+' || c == '-') {
      acc += parse_term(term, negative);
      term.clear();
      negative = c == '-';
    } else {
      term.push_back(c);
    }
  }
  acc += parse_term(term, negative);
  return acc;
}

}  // namespace

Poly parse_poly(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw Error("empty polynomial text");
  const bool has_x = s.find('x') != std::string::npos;
  const bool has_comma = s.find(',') != std::string::npos;
  if (has_x && has_comma) throw Error("ambiguous polynomial text mixes ',' and 'x': '" + s + "'");
  return has_x ? parse_human(s) : parse_coeff_list(s);
}

std::string format_coeff_list(const Poly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string format_human(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    Rat mag = c[k].abs();
    if (first) {
      if (c[k].sign() < 0) os << '-';
    } else {
      os << (c[k].sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace eulerdec
