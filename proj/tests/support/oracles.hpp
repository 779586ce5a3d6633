#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "eulerdec/poly.hpp"

namespace eulerdec::oracle {

/// E_k(x) = k! [t^k] 2 e^(tx) / (e^t + 1), expanded as a power series in t.
inline Poly euler_by_generating_function(std::size_t k) {
  // w(t) = 2 / (e^t + 1): solve w * (e^t + 1) = 2 term by term.
  std::vector<mpq_class> et(k + 1);  // e^t coefficients
  mpq_class fact = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    if (i > 0) fact *= static_cast<unsigned long>(i);
    et[i] = 1 / fact;
  }
  std::vector<mpq_class> denom = et;
  denom[0] += 1;
  std::vector<mpq_class> w(k + 1);
  for (std::size_t n = 0; n <= k; ++n) {
    mpq_class acc = n == 0 ? mpq_class(2) : mpq_class(0);
    for (std::size_t i = 1; i <= n; ++i) acc -= denom[i] * w[n - i];
    w[n] = acc / denom[0];
  }
  // [t^k] e^(tx) w(t) = sum_j x^j / j! * w_{k-j}
  mpq_class kfact = 1;
  for (std::size_t i = 2; i <= k; ++i) kfact *= static_cast<unsigned long>(i);
  std::vector<Rat> coeffs(k + 1);
  for (std::size_t j = 0; j <= k; ++j) coeffs[j] = Rat(mpq_class(kfact * et[j] * w[k - j]));
  return Poly(std::move(coeffs));
}

/// Coefficients of x^(top-1), ..., x^(top-count) of h^t by schoolbook
/// multiplication, used to solve the triangular system for the inner factor
/// one unknown at a time.
inline Poly inner_by_triangular_solve(const Poly& monic_f, std::size_t k) {
  const std::size_t n = monic_f.deg();
  const std::size_t t = n / k;
  std::vector<Rat> b(k + 1);
  b[k] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    // contribution of the already-known b's to x^(n-j), with b_{k-j} = 0
    const Poly partial = Poly(b).pow(t);
    const Rat known = partial.coeff(n - j);
    b[k - j] = (monic_f.coeff(n - j) - known) / Rat(static_cast<long>(t));
  }
  return Poly(std::move(b));
}

/// Quotient if d divides f exactly, by long division written out longhand.
inline bool divides(const Poly& d, const Poly& f, Poly* quotient = nullptr) {
  std::vector<Rat> rem(f.coeffs().begin(), f.coeffs().end());
  const std::size_t m = d.deg();
  if (rem.size() < m + 1) return f.is_zero();
  std::vector<Rat> q(rem.size() - m);
  for (std::size_t i = rem.size() - m; i-- > 0;) {
    q[i] = rem[i + m] / d.leading();
    for (std::size_t j = 0; j <= m; ++j) rem[i + j] -= q[i] * d.coeff(j);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) return false;
  }
  if (quotient) *quotient = Poly(std::move(q));
  return true;
}

/// Random polynomials with small coefficients for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat small_rat(long span = 5, long max_den = 4) {
    return Rat(mpz_class(integer(-span, span)), mpz_class(integer(1, max_den)));
  }

  Rat nonzero_rat(long span = 5, long max_den = 4) {
    Rat r;
    do {
      r = small_rat(span, max_den);
    } while (r.is_zero());
    return r;
  }

  Poly poly(std::size_t degree, long span = 5, long max_den = 1) {
    std::vector<Rat> c(degree + 1);
    for (auto& v : c) v = small_rat(span, max_den);
    while (c.back().is_zero()) c.back() = nonzero_rat(span, max_den);
    return Poly(std::move(c));
  }

  Poly monic(std::size_t degree, long span = 5, long max_den = 2) {
    Poly p = poly(degree, span, max_den);
    return p.monic();
  }

  /// Monic with zero x^(degree-1) coefficient.
  Poly depressed_monic(std::size_t degree, long span = 5, long max_den = 2) {
    std::vector<Rat> c(degree + 1);
    for (auto& v : c) v = small_rat(span, max_den);
    c[degree] = 1;
    c[degree - 1] = 0;
    return Poly(std::move(c));
  }

  Linear linear(long span = 4, long max_den = 3) { return Linear(nonzero_rat(span, max_den), small_rat(span, max_den)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace eulerdec::oracle
