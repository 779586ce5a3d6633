#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "eulerdec/rat.hpp"

namespace eulerdec {

/// Polynomial degree with a distinguished value for the zero polynomial,
/// which compares below every finite degree.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  static Degree of(std::size_t d) { return Degree(static_cast<std::int64_t>(d)); }

  [[nodiscard]] bool is_neg_infinity() const { return value_ < 0; }
  /// Throws Error for the zero polynomial's degree.
  [[nodiscard]] std::size_t value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;
  friend bool operator==(const Degree& d, std::size_t v) { return !d.is_neg_infinity() && d.value_ == static_cast<std::int64_t>(v); }

  /// deg(a*b) = deg a + deg b, absorbing the zero sentinel.
  friend Degree operator+(const Degree& a, const Degree& b);

 private:
  Degree() = default;
  explicit Degree(std::int64_t v) : value_(v) {}
  std::int64_t value_ = -1;
};

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; the highest stored coefficient is never zero, and the
/// zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly x();
  static Poly monomial(const Rat& c, std::size_t k);

  [[nodiscard]] std::span<const Rat> coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] Degree degree() const;
  /// Degree of a nonzero polynomial; throws Error on zero.
  [[nodiscard]] std::size_t deg() const;
  /// Coefficient of x^i (zero beyond the degree).
  [[nodiscard]] Rat coeff(std::size_t i) const;
  /// Leading coefficient (zero for the zero polynomial).
  [[nodiscard]] Rat leading() const;
  [[nodiscard]] bool is_monic() const;
  /// This polynomial divided by its leading coefficient.
  [[nodiscard]] Poly monic() const;

  [[nodiscard]] Rat operator()(const Rat& at) const;
  [[nodiscard]] Poly derivative() const;
  [[nodiscard]] Poly pow(std::size_t e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(const Poly& a);

  friend bool operator==(const Poly&, const Poly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// outer(inner(x)).
Poly compose(const Poly& outer, const Poly& inner);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws Error when d is zero.
DivRem divrem(const Poly& f, const Poly& d);

/// Monic greatest common divisor over Q; throws Error when both are zero.
Poly gcd(const Poly& f, const Poly& g);

/// Invertible affine map x -> slope*x + intercept.
class Linear {
 public:
  Linear(Rat slope, Rat intercept);
  static Linear identity() { return {Rat(1), Rat(0)}; }

  [[nodiscard]] const Rat& slope() const { return slope_; }
  [[nodiscard]] const Rat& intercept() const { return intercept_; }
  [[nodiscard]] Poly to_poly() const { return Poly{intercept_, slope_}; }
  [[nodiscard]] Rat operator()(const Rat& at) const { return slope_ * at + intercept_; }
  [[nodiscard]] Linear inverse() const;

  /// Linear from a degree-1 polynomial; throws Error otherwise.
  static Linear from_poly(const Poly& p);

  friend bool operator==(const Linear&, const Linear&) = default;

 private:
  Rat slope_;
  Rat intercept_;
};

/// a(b(x)) for two affine maps.
Linear compose(const Linear& a, const Linear& b);
Poly compose(const Poly& outer, const Linear& inner);
Poly compose(const Linear& outer, const Poly& inner);

}  // namespace eulerdec
