#include "eulerdec/decompose.hpp"

#include <algorithm>

#include "eulerdec/error.hpp"
#include "eulerdec/structure.hpp"

namespace eulerdec {

namespace {

void guard_degree(const Poly& f) {
  if (!f.is_zero() && f.deg() > kMaxDecomposeDegree) {
    throw Error("degree " + std::to_string(f.deg()) + " exceeds the decomposition limit of " +
                std::to_string(kMaxDecomposeDegree));
  }
}

void check_split(const Poly& f, std::size_t k) {
  if (f.is_constant()) throw Error("cannot decompose a constant polynomial");
  const std::size_t n = f.deg();
  if (k < 2 || 2 * k > n || n % k != 0) {
    throw Error("inner degree " + std::to_string(k) + " is not a proper divisor in [2, " + std::to_string(n / 2) +
                "] of degree " + std::to_string(n));
  }
}

}  // namespace

MonicNormalization normalize_monic(const Poly& f) {
  if (f.is_constant()) throw Error("normalize_monic needs a nonconstant polynomial");
  return {f.leading(), f.monic()};
}

NormalizedDecomposition normalize_decomposition(const Poly& outer, const Poly& inner) {
  if (outer.is_constant() || inner.is_constant()) throw Error("decomposition factors must be nonconstant");
  const std::size_t t = outer.deg();
  const Rat b = inner.leading();
  Poly hat_outer = compose(outer, Poly{Rat(0), b});
  Poly hat_inner = inner * b.inverse();
  const Rat scale = hat_outer.leading();
  hat_outer = hat_outer * scale.inverse();
  const Rat shift = hat_outer.coeff(t - 1) / Rat(static_cast<long>(t));
  return {scale, compose(hat_outer, Poly{-shift, Rat(1)}), hat_inner + Poly::constant(shift)};
}

Poly inner_candidate(const Poly& monic_f, std::size_t k) {
  check_split(monic_f, k);
  if (!monic_f.is_monic()) throw Error("inner_candidate needs a monic polynomial");
  const std::size_t n = monic_f.deg();
  const Rat alpha = Rat(1) / Rat(static_cast<long>(n / k));
  // Reversed f as a power series F(y) = y^n f(1/y) = 1 + c_{n-1} y + ...;
  // the reversed inner is F^(1/t) truncated after y^k, obtained from
  // F G' = (1/t) F' G one coefficient at a time.
  std::vector<Rat> rev(k + 1);
  for (std::size_t i = 0; i <= k; ++i) rev[i] = monic_f.coeff(n - i);
  std::vector<Rat> g(k + 1);
  g[0] = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    Rat acc;
    for (std::size_t i = 1; i <= m; ++i) {
      if (rev[i].is_zero()) continue;
      const Rat weight = alpha * Rat(static_cast<long>(i)) - Rat(static_cast<long>(m - i));
      acc += weight * rev[i] * g[m - i];
    }
    g[m] = acc / Rat(static_cast<long>(m));
  }
  std::vector<Rat> h(k + 1);
  for (std::size_t m = 0; m <= k; ++m) h[k - m] = g[m];
  return Poly(std::move(h));
}

std::optional<NormalizedDecomposition> try_decompose(const Poly& f, std::size_t k) {
  guard_degree(f);
  check_split(f, k);
  auto [scale, monic] = normalize_monic(f);
  Poly inner = inner_candidate(monic, k);
  auto outer = polynomial_in(monic, inner);
  if (!outer) return std::nullopt;
  return NormalizedDecomposition{scale, std::move(*outer), std::move(inner)};
}

DecompositionSet all_decompositions(const Poly& f) {
  if (f.is_zero() || f.deg() < 2) throw Error("all_decompositions needs degree >= 2");
  guard_degree(f);
  DecompositionSet set{f, {}};
  const std::size_t n = f.deg();
  for (std::size_t k = 2; 2 * k <= n; ++k) {
    if (n % k != 0) continue;
    if (auto d = try_decompose(f, k)) set.pairs.push_back(std::move(*d));
  }
  return set;
}

bool is_indecomposable(const Poly& f) { return all_decompositions(f).pairs.empty(); }

std::vector<std::vector<Poly>> complete_decompositions(const Poly& f) {
  const auto set = all_decompositions(f);
  if (set.pairs.empty()) return {{f}};
  std::vector<std::vector<Poly>> chains;
  for (const auto& pair : set.pairs) {
    // Only indecomposable right factors start a chain; larger right
    // factors are reached through the recursion on the outer side.
    if (!is_indecomposable(pair.inner)) continue;
    for (auto chain : complete_decompositions(pair.scaled_outer())) {
      chain.push_back(pair.inner);
      if (std::find(chains.begin(), chains.end(), chain) == chains.end()) chains.push_back(std::move(chain));
    }
  }
  return chains;
}

bool chains_share_degree_multiset(const std::vector<std::vector<Poly>>& chains) {
  std::vector<std::size_t> reference;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    std::vector<std::size_t> degrees;
    for (const auto& p : chains[c]) degrees.push_back(p.deg());
    std::sort(degrees.begin(), degrees.end());
    if (c == 0) {
      reference = std::move(degrees);
    } else if (degrees != reference) {
      return false;
    }
  }
  return true;
}

std::optional<Linear> decompositions_equivalent(const ComponentPair& d1, const ComponentPair& d2) {
  if (d1.outer.is_constant() || d2.outer.is_constant() || d1.inner.is_constant() || d2.inner.is_constant()) {
    throw Error("decomposition components must be nonconstant");
  }
  if (d1.outer.deg() != d2.outer.deg()) throw Error("outer degrees differ");
  if (compose(d1.outer, d1.inner) != compose(d2.outer, d2.inner)) {
    throw Error("the two decompositions compose to different polynomials");
  }
  for (const auto& l : find_right_linears(d2.outer, d1.outer)) {
    if (compose(l, d2.inner) == d1.inner) return l;
  }
  return std::nullopt;
}

}  // namespace eulerdec
