#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace eulerdec {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const mpz_class& integer) : v_(integer) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p" or "p/q" (optional sign, q > 0). Throws Error otherwise.
  static Rat parse(std::string_view text);

  [[nodiscard]] mpz_class num() const { return v_.get_num(); }
  [[nodiscard]] mpz_class den() const { return v_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return v_; }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] Rat abs() const;
  [[nodiscard]] Rat inverse() const;
  [[nodiscard]] Rat pow(unsigned long e) const;
  [[nodiscard]] double to_double() const { return v_.get_d(); }

  /// Canonical text: "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a);

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

/// Principal rational n-th root of q (n >= 1): the nonnegative root for even
/// n, the real root for odd n. Empty when the root is irrational.
std::optional<Rat> rational_root(const Rat& q, unsigned long n);

/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

/// Hash of the exact value; equal rationals hash equal.
struct RatHash {
  std::size_t operator()(const Rat& r) const noexcept;
};

}  // namespace eulerdec
