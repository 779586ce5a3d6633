#include "eulerdec/classical.hpp"

#include "eulerdec/error.hpp"

namespace eulerdec {

EulerTable& EulerTable::global() {
  static EulerTable table;
  return table;
}

std::size_t EulerTable::max_index() const {
  std::shared_lock lock(mutex_);
  return polys_.empty() ? 0 : polys_.size() - 1;
}

Poly EulerTable::poly(std::size_t k) {
  {
    std::shared_lock lock(mutex_);
    if (k < polys_.size()) return polys_[k];
  }
  extend_to(k);
  std::shared_lock lock(mutex_);
  return polys_[k];
}

Rat EulerTable::number(std::size_t j) {
  {
    std::shared_lock lock(mutex_);
    if (j < numbers_.size()) return numbers_[j];
  }
  extend_to(j);
  std::shared_lock lock(mutex_);
  return numbers_[j];
}

void EulerTable::extend_to(std::size_t k) {
  std::unique_lock lock(mutex_);
  const Rat half(1, 2);
  for (std::size_t n = polys_.size(); n <= k; ++n) {
    // 2 c_j + sum_{i>j} C(i, j) c_i = [j == n] * 2
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    for (std::size_t j = n; j-- > 0;) {
      mpq_class s = 0;
      for (std::size_t i = j + 1; i <= n; ++i) s += mpq_class(binomial(i, j)) * c[i].raw();
      c[j] = Rat(mpq_class(-s / 2));
    }
    Poly e(std::move(c));
    Rat number = e(half) * Rat(mpz_class(mpz_class(1) << static_cast<mp_bitcnt_t>(n)));
    if (!number.is_integer()) throw Error("internal: Euler number E_" + std::to_string(n) + " is not an integer");
    polys_.push_back(std::move(e));
    numbers_.push_back(std::move(number));
  }
}

Poly euler_poly(std::size_t k) { return EulerTable::global().poly(k); }

Rat euler_number(std::size_t j) { return EulerTable::global().number(j); }

Poly e_tilde(std::size_t m) {
  std::vector<Rat> c(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    const mpz_class four_j(mpz_class(1) << static_cast<mp_bitcnt_t>(2 * j));
    c[m - j] = Rat(binomial(2 * m, 2 * j)) * euler_number(2 * j) / Rat(four_j);
  }
  return Poly(std::move(c));
}

Poly dickson(std::size_t m, const Rat& a) {
  if (m == 0) return Poly::constant(2);
  std::vector<Rat> c(m + 1);
  const Rat minus_a = -a;
  for (std::size_t i = 0; 2 * i <= m; ++i) {
    // m/(m-i) * C(m-i, i) is an integer for 0 <= i <= m/2
    const Rat weight = Rat(static_cast<long>(m)) * Rat(binomial(m - i, i)) / Rat(static_cast<long>(m - i));
    c[m - 2 * i] = weight * minus_a.pow(i);
  }
  return Poly(std::move(c));
}

Rat alt_power_sum_direct(std::size_t k, std::size_t n) {
  mpz_class acc = 0;
  mpz_class term;
  for (std::size_t i = 1; i <= n; ++i) {
    mpz_ui_pow_ui(term.get_mpz_t(), i, k);
    if (i % 2 == 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return Rat(acc);
}

Rat alt_power_sum_closed(std::size_t k, const mpz_class& n) {
  if (n < 0) throw Error("alternating sum needs a nonnegative term count");
  const Poly e = euler_poly(k);
  const Rat tail = e(Rat(mpz_class(n + 1)));
  const Rat signed_tail = mpz_even_p(n.get_mpz_t()) ? tail : -tail;
  return (e(Rat(0)) + signed_tail) / Rat(2);
}

Rat alt_power_sum_closed(std::size_t k, std::size_t n) {
  return alt_power_sum_closed(k, mpz_class(static_cast<unsigned long>(n)));
}

std::string_view to_string(Branch b) { return b == Branch::EvenN ? "even-n" : "odd-n"; }

Branch parse_branch(std::string_view text) {
  if (text == "even-n") return Branch::EvenN;
  if (text == "odd-n") return Branch::OddN;
  throw Error("unknown branch '" + std::string(text) + "' (expected even-n or odd-n)");
}

mpz_class terms_for(Branch b, const mpz_class& x) { return b == Branch::EvenN ? mpz_class(2 * x) : mpz_class(2 * x - 1); }

Linear outer_linear(std::size_t k, Branch branch) {
  const Rat half_e0 = euler_poly(k)(Rat(0)) / Rat(2);
  return {branch == Branch::EvenN ? Rat(1, 2) : Rat(-1, 2), half_e0};
}

EquationSides equation_sides(std::size_t k, Branch branch) {
  if (k < 1) throw Error("equation sides need k >= 1");
  Linear h = branch == Branch::EvenN ? Linear(Rat(2), Rat(1)) : Linear(Rat(2), Rat(0));
  return {k, branch, outer_linear(k, branch), h};
}

Poly EquationSides::composed() const { return compose(f, compose(euler_poly(k), h)); }

}  // namespace eulerdec
