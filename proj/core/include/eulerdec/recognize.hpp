#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "eulerdec/poly.hpp"

namespace eulerdec {

// Standard pairs over Q. Each kind validates its parameters on construction.

struct FirstKind {  // (x^m, a x^r p(x)^m), 0 <= r < m, gcd(r, m) = 1, r + deg p > 0
  std::size_t m;
  std::size_t r;
  Rat a;
  Poly p;
};
struct SecondKind {  // (x^2, (a x^2 + b) p(x)^2)
  Rat a;
  Rat b;
  Poly p;
};
struct ThirdKind {  // (D_m(x, a^n), D_n(x, a^m)), gcd(m, n) = 1
  std::size_t m;
  std::size_t n;
  Rat a;
};
struct FourthKind {  // (a^(-m/2) D_m(x, a), -b^(-n/2) D_n(x, b)), gcd(m, n) = 2
  std::size_t m;
  std::size_t n;
  Rat a;
  Rat b;
};
struct FifthKind {  // ((a x^2 - 1)^3, 3x^4 - 4x^3)
  Rat a;
};

enum class PairKind { First, Second, Third, Fourth, Fifth };

class StandardPair {
 public:
  using Parameters = std::variant<FirstKind, SecondKind, ThirdKind, FourthKind, FifthKind>;

  /// Throws Error when the parameters violate the kind's constraints.
  explicit StandardPair(Parameters params, bool switched = false);

  [[nodiscard]] PairKind kind() const;
  [[nodiscard]] bool switched() const { return switched_; }
  [[nodiscard]] const Parameters& parameters() const { return params_; }

 private:
  Parameters params_;
  bool switched_;
};

struct PolyPair {
  Poly first;
  Poly second;
};

PolyPair materialize(const StandardPair& sp);

/// p(x) = u (x + shift)^q + v
struct PowerForm {
  Rat u;
  Rat v;
  Rat shift;
};
std::optional<PowerForm> detect_power_form(const Poly& p);

/// p(x) = u D_q(inner(x), a) + v. Witnesses are normalized to a monic inner
/// map; any other slope alpha gives the same polynomial with u alpha^(-q)
/// and a alpha^2.
struct DicksonForm {
  Rat u;
  Rat v;
  Rat a;
  Linear inner;
};
std::optional<DicksonForm> detect_dickson_form(const Poly& p);

struct ExtremumReport {
  Rat value;
  std::vector<std::size_t> type;  // ascending root multiplicities of D_k - value
};

/// The two extrema +2a^(k/2), -2a^(k/2) of D_k(x, a), typed by square-free
/// decomposition. Requires k >= 3, a != 0 and a^(k/2) rational.
std::vector<ExtremumReport> dickson_extrema(std::size_t k, const Rat& a);

/// Floating-point check that (x+1)^n - x^n = (2x+1) prod_j (c_j x^2 + c_j x + 1)
/// with every c_j = 2 - 2cos(2 pi j / n) positive. n must be even.
bool lemma_dr_check(std::size_t n);

/// C(k,4) > (t-1) k^2 (k-2)(k-3) / 16, evaluated exactly.
bool coefficient_inequality_holds(std::size_t t, std::size_t k);

}  // namespace eulerdec
