#include "eulerdec/structure.hpp"

#include <algorithm>

#include "eulerdec/error.hpp"

namespace eulerdec {

Poly SquareFreeDecomposition::reconstruct() const {
  Poly acc = Poly::constant(content);
  for (const auto& part : parts) acc *= part.factor.pow(part.multiplicity);
  return acc;
}

std::vector<std::size_t> SquareFreeDecomposition::root_multiplicities() const {
  std::vector<std::size_t> out;
  for (const auto& part : parts) out.insert(out.end(), part.factor.deg(), part.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

SquareFreeDecomposition squarefree_decompose(const Poly& f) {
  if (f.is_constant()) throw Error("square-free decomposition needs a nonconstant polynomial");
  SquareFreeDecomposition out{f.leading(), {}};
  const Poly monic = f.monic();
  const Poly df = monic.derivative();
  Poly a = gcd(monic, df);
  Poly b = divrem(monic, a).quotient;
  Poly c = divrem(df, a).quotient;
  Poly d = c - b.derivative();
  for (std::size_t i = 1; !b.is_constant(); ++i) {
    a = gcd(b, d);
    if (!a.is_constant()) out.parts.push_back({a, i});
    b = divrem(b, a).quotient;
    c = divrem(d, a).quotient;
    d = c - b.derivative();
  }
  return out;
}

std::size_t count_simple_roots(const Poly& f) {
  const auto sf = squarefree_decompose(f);
  for (const auto& part : sf.parts) {
    if (part.multiplicity == 1) return part.factor.deg();
  }
  return 0;
}

std::vector<Poly> h_adic_expansion(const Poly& f, const Poly& h) {
  if (h.is_constant()) throw Error("h-adic expansion needs a nonconstant base");
  std::vector<Poly> digits;
  Poly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divrem(rest, h);
    digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return digits;
}

std::optional<Poly> polynomial_in(const Poly& f, const Poly& h) {
  if (h.is_constant()) throw Error("polynomial_in needs a nonconstant h");
  if (f.is_zero()) return Poly{};
  if (f.deg() % h.deg() != 0) return std::nullopt;
  const auto digits = h_adic_expansion(f, h);
  std::vector<Rat> phi;
  phi.reserve(digits.size());
  for (const auto& d : digits) {
    if (!d.is_constant()) return std::nullopt;
    phi.push_back(d.coeff(0));
  }
  return Poly(std::move(phi));
}

std::vector<Linear> find_right_linears(const Poly& p, const Poly& q) {
  if (p.is_constant() || q.is_constant() || p.deg() != q.deg()) {
    throw Error("find_right_linear needs equal positive degrees");
  }
  const std::size_t n = p.deg();
  const auto root = rational_root(p.leading() / q.leading(), n);
  if (!root) return {};
  std::vector<Rat> slopes{*root};
  if (n % 2 == 0) slopes.push_back(-*root);
  std::vector<Linear> found;
  for (const auto& alpha : slopes) {
    // [x^(n-1)] q(alpha x + beta) = q_n n alpha^(n-1) beta + q_(n-1) alpha^(n-1)
    const Rat a_pow = alpha.pow(n - 1);
    const Rat beta = (p.coeff(n - 1) - q.coeff(n - 1) * a_pow) / (q.leading() * Rat(static_cast<long>(n)) * a_pow);
    Linear l(alpha, beta);
    if (compose(q, l) == p) found.push_back(l);
  }
  return found;
}

std::optional<Linear> find_right_linear(const Poly& p, const Poly& q) {
  auto all = find_right_linears(p, q);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Depressed depress(const Poly& p) {
  if (p.is_constant() || p.deg() < 2) throw Error("depress needs degree >= 2");
  const std::size_t n = p.deg();
  const Rat shift = -p.coeff(n - 1) / (p.leading() * Rat(static_cast<long>(n)));
  return {shift, compose(p, Poly{shift, Rat(1)})};
}

}  // namespace eulerdec
