#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "eulerdec/poly.hpp"

namespace eulerdec {

/// Memoized Euler polynomials E_0..E_max and Euler numbers 2^j E_j(1/2).
///
/// E_n is built from E_n(x+1) + E_n(x) = 2x^n solved coefficient by
/// coefficient from the top. Reads are safe from many threads; extension
/// takes the exclusive lock.
class EulerTable {
 public:
  EulerTable() = default;
  EulerTable(const EulerTable&) = delete;
  EulerTable& operator=(const EulerTable&) = delete;

  /// Process-wide table shared by the free functions below.
  static EulerTable& global();

  [[nodiscard]] Poly poly(std::size_t k);
  [[nodiscard]] Rat number(std::size_t j);
  [[nodiscard]] std::size_t max_index() const;

 private:
  void extend_to(std::size_t k);

  mutable std::shared_mutex mutex_;
  std::vector<Poly> polys_;
  std::vector<Rat> numbers_;
};

Poly euler_poly(std::size_t k);
Rat euler_number(std::size_t j);

/// The degree-m polynomial with E_{2m}(x) = e_tilde(m)((x - 1/2)^2).
Poly e_tilde(std::size_t m);

/// Dickson polynomial D_m(x, a); D_0 = 2.
Poly dickson(std::size_t m, const Rat& a);

/// -1^k + 2^k - ... + (-1)^n n^k by direct summation.
Rat alt_power_sum_direct(std::size_t k, std::size_t n);

/// (E_k(0) + (-1)^n E_k(n+1)) / 2.
Rat alt_power_sum_closed(std::size_t k, std::size_t n);
Rat alt_power_sum_closed(std::size_t k, const mpz_class& n);

/// Which parity of the term count n an equation side covers: even-n has
/// n = 2x, odd-n has n = 2x - 1.
enum class Branch { EvenN, OddN };

std::string_view to_string(Branch b);
/// Accepts "even-n" / "odd-n"; throws Error otherwise.
Branch parse_branch(std::string_view text);

/// Number of summands n in the alternating sum for the reduced variable x.
mpz_class terms_for(Branch b, const mpz_class& x);

/// The alternating sum over n terms rewritten as f(E_k(h(x))).
struct EquationSides {
  std::size_t k;
  Branch branch;
  Linear f;  // even-n: (E_k(0) + x)/2, odd-n: (E_k(0) - x)/2
  Linear h;  // even-n: 2x + 1,         odd-n: 2x

  /// F_k = f(E_k(h(x))).
  [[nodiscard]] Poly composed() const;
};

EquationSides equation_sides(std::size_t k, Branch branch);

/// f(x) = sign*x/2 + E_k(0)/2 for sign = +1 (even-n) or -1 (odd-n).
Linear outer_linear(std::size_t k, Branch branch);

}  // namespace eulerdec
