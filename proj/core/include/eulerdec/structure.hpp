#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eulerdec/poly.hpp"

namespace eulerdec {

struct SquareFreePart {
  Poly factor;  // monic, square-free
  std::size_t multiplicity;
};

/// f = content * prod(factor^multiplicity). Factors are pairwise coprime and
/// listed by strictly increasing multiplicity.
struct SquareFreeDecomposition {
  Rat content;
  std::vector<SquareFreePart> parts;

  [[nodiscard]] Poly reconstruct() const;
  /// Multiplicities of all complex roots, ascending (one entry per root).
  [[nodiscard]] std::vector<std::size_t> root_multiplicities() const;
};

/// Yun's algorithm; throws Error on constant input.
SquareFreeDecomposition squarefree_decompose(const Poly& f);

/// Number of complex roots of multiplicity exactly one; throws on constants.
std::size_t count_simple_roots(const Poly& f);

/// Base-h digits d_0..d_m with f = sum d_i h^i, deg d_i < deg h.
std::vector<Poly> h_adic_expansion(const Poly& f, const Poly& h);

/// phi with f = phi(h) if it exists.
std::optional<Poly> polynomial_in(const Poly& f, const Poly& h);

/// Every linear l with p = q(l(x)); positive slopes first. Requires
/// deg p = deg q >= 1.
std::vector<Linear> find_right_linears(const Poly& p, const Poly& q);

/// First entry of find_right_linears, if any.
std::optional<Linear> find_right_linear(const Poly& p, const Poly& q);

struct Depressed {
  Rat shift;      // depressed(x) = p(x + shift)
  Poly depressed; // zero coefficient at x^(n-1)
};

/// Removes the x^(n-1) term by a translation; requires deg p >= 2.
Depressed depress(const Poly& p);

}  // namespace eulerdec
