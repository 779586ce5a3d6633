#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eulerdec/poly.hpp"

namespace eulerdec {

/// Inputs above this degree are refused by the decomposition routines.
inline constexpr std::size_t kMaxDecomposeDegree = 512;

/// The canonical representative of a decomposition class:
///   source = scale * outer(inner(x))
/// with outer and inner monic over Q and the x^(t-1) coefficient of outer
/// equal to zero (t = deg outer).
struct NormalizedDecomposition {
  Rat scale;
  Poly outer;
  Poly inner;

  [[nodiscard]] std::size_t outer_degree() const { return outer.deg(); }
  [[nodiscard]] std::size_t inner_degree() const { return inner.deg(); }
  /// scale * outer, so that scaled_outer()(inner) is the source.
  [[nodiscard]] Poly scaled_outer() const { return outer * scale; }
  [[nodiscard]] Poly composed() const { return compose(scaled_outer(), inner); }

  friend bool operator==(const NormalizedDecomposition&, const NormalizedDecomposition&) = default;
};

/// At most one normalized pair per inner degree, ascending by inner degree.
struct DecompositionSet {
  Poly source;
  std::vector<NormalizedDecomposition> pairs;
};

struct MonicNormalization {
  Rat scale;
  Poly monic;
};

MonicNormalization normalize_monic(const Poly& f);

/// Brings an arbitrary decomposition f = outer(inner) into canonical form:
/// conjugate by the inner's leading coefficient, then translate so the
/// outer factor loses its x^(t-1) term.
NormalizedDecomposition normalize_decomposition(const Poly& outer, const Poly& inner);

/// The only monic degree-k inner factor a normalized decomposition of the
/// monic polynomial f can have. Its coefficients are fixed, top down, by
/// the k coefficients of f just below the leading one.
Poly inner_candidate(const Poly& monic_f, std::size_t k);

/// Normalized decomposition with inner degree k, if f has one.
std::optional<NormalizedDecomposition> try_decompose(const Poly& f, std::size_t k);

DecompositionSet all_decompositions(const Poly& f);

bool is_indecomposable(const Poly& f);

/// Every complete decomposition chain [f_1, ..., f_m] with
/// f = f_1(f_2(...f_m)), one chain per distinct ordered degree sequence.
/// The leading coefficient of f rides on f_1.
std::vector<std::vector<Poly>> complete_decompositions(const Poly& f);

/// True when all chains have the same length and the same degree multiset.
bool chains_share_degree_multiset(const std::vector<std::vector<Poly>>& chains);

struct ComponentPair {
  Poly outer;
  Poly inner;
};

/// Linear l with d2.outer = d1.outer(l) and d1.inner = l(d2.inner).
/// Throws Error when the pairs compose to different polynomials or their
/// outer degrees differ.
std::optional<Linear> decompositions_equivalent(const ComponentPair& d1, const ComponentPair& d2);

}  // namespace eulerdec
