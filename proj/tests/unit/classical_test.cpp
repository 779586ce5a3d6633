#include <gtest/gtest.h>

#include <thread>

#include "eulerdec/classical.hpp"
#include "eulerdec/error.hpp"
#include "eulerdec/poly_text.hpp"
#include "eulerdec/structure.hpp"
#include "oracles.hpp"

namespace eulerdec {
namespace {

Poly P(std::string_view text) { return parse_poly(text); }

TEST(EulerPoly, SmallIndices) {
  EXPECT_EQ(euler_poly(0), P("1"));
  EXPECT_EQ(euler_poly(1), P("x - 1/2"));
  EXPECT_EQ(euler_poly(4), P("x^4 - 2*x^3 + x"));
}

TEST(EulerPoly, MatchesGeneratingFunction) {
  for (std::size_t k = 0; k <= 30; ++k) {
    ASSERT_EQ(euler_poly(k), oracle::euler_by_generating_function(k)) << k;
  }
}

TEST(EulerPoly, Reflection) {
  for (std::size_t n = 0; n <= 30; ++n) {
    const Poly e = euler_poly(n);
    const Poly reflected = compose(e, P("1 - x")) * Rat(n % 2 == 0 ? 1 : -1);
    ASSERT_EQ(e, reflected) << n;
  }
}

TEST(EulerPoly, ShiftRecurrence) {
  for (std::size_t n = 0; n <= 30; ++n) {
    const Poly e = euler_poly(n);
    ASSERT_EQ(compose(e, P("x + 1")) + e, Poly::monomial(2, n)) << n;
  }
}

TEST(EulerPoly, Derivative) {
  for (std::size_t n = 1; n <= 30; ++n) {
    ASSERT_EQ(euler_poly(n).derivative(), euler_poly(n - 1) * Rat(static_cast<long>(n))) << n;
  }
}

TEST(EulerPoly, TopCoefficients) {
  for (std::size_t n = 3; n <= 30; ++n) {
    const Poly e = euler_poly(n);
    const auto nn = static_cast<long>(n);
    ASSERT_EQ(e.coeff(n), Rat(1));
    ASSERT_EQ(e.coeff(n - 1), Rat(-nn, 2));
    ASSERT_EQ(e.coeff(n - 2), Rat(0));
    ASSERT_EQ(e.coeff(n - 3), Rat(binomial(n, 3)) / Rat(4));
  }
}

TEST(EulerPoly, OnlyFiveHasMultipleRoots) {
  for (std::size_t n = 1; n <= 30; ++n) {
    const Poly e = euler_poly(n);
    ASSERT_EQ(gcd(e, e.derivative()).is_constant(), n != 5) << n;
  }
}

TEST(EulerPoly, CoefficientExpansionThroughEulerNumbers) {
  // E_n(x) = sum_k C(n,k) E_k / 2^k (x - 1/2)^(n-k)
  for (std::size_t n = 0; n <= 20; ++n) {
    Poly acc;
    for (std::size_t k = 0; k <= n; ++k) {
      const Rat w = Rat(binomial(n, k)) * euler_number(k) / Rat(2).pow(k);
      acc += P("x - 1/2").pow(n - k) * w;
    }
    ASSERT_EQ(acc, euler_poly(n)) << n;
  }
}

TEST(EulerNumber, Values) {
  EXPECT_EQ(euler_number(0), Rat(1));
  EXPECT_EQ(euler_number(1), Rat(0));
  EXPECT_EQ(euler_number(2), Rat(-1));
  EXPECT_EQ(euler_number(4), Rat(5));
  EXPECT_EQ(euler_number(6), Rat(-61));
  for (std::size_t j = 0; j <= 40; ++j) {
    ASSERT_TRUE(euler_number(j).is_integer());
    if (j % 2 == 1) ASSERT_TRUE(euler_number(j).is_zero());
  }
}

TEST(EulerTable, ConcurrentReadersAgree) {
  EulerTable table;
  std::vector<std::thread> pool;
  std::vector<Poly> results(8);
  for (std::size_t i = 0; i < results.size(); ++i) {
    pool.emplace_back([&, i] { results[i] = table.poly(18 + i % 3); });
  }
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < results.size(); ++i) EXPECT_EQ(results[i], euler_poly(18 + i % 3));
  EXPECT_GE(table.max_index(), 20U);
}

TEST(ETilde, Examples) {
  EXPECT_EQ(e_tilde(1), P("x - 1/4"));
  EXPECT_EQ(compose(P("x - 1/4"), P("x - 1/2").pow(2)), oracle::euler_by_generating_function(2));
  EXPECT_EQ(e_tilde(2), P("x^2 - 3/2*x + 5/16"));
  EXPECT_EQ(compose(e_tilde(3), P("x - 1/2").pow(2)), oracle::euler_by_generating_function(6));
}

TEST(ETilde, ComposesToEvenEuler) {
  const Poly square = P("x^2 - x + 1/4");
  for (std::size_t m = 1; m <= 15; ++m) {
    ASSERT_EQ(compose(e_tilde(m), square), euler_poly(2 * m)) << m;
    ASSERT_TRUE(e_tilde(m).is_monic());
  }
}

TEST(Dickson, Examples) {
  const Rat a(7, 3);
  EXPECT_EQ(dickson(2, a), Poly({Rat(-2) * a, Rat(0), Rat(1)}));
  EXPECT_EQ(dickson(1, a), P("x"));
  EXPECT_EQ(dickson(0, a), P("2"));
  EXPECT_EQ(dickson(3, Rat(1)), P("x^3 - 3*x"));
  for (const Rat c : {Rat(1), Rat(2), Rat(1, 3), Rat(-5, 2)}) {
    const Poly lhs = compose(euler_poly(4), Poly{Rat(1, 2), c});
    const Poly rhs = dickson(4, Rat(3) / (Rat(8) * c * c)) * c.pow(4) + P("1/32");
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(Dickson, FunctionalEquation) {
  // D_m(z + a/z) z^m = z^(2m) + a^m, checked as a polynomial identity in z:
  // sum_i c_i (z^2 + a)^i z^(m-i) with c_i the coefficients of D_m.
  for (const Rat a : {Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(3, 8)}) {
    for (std::size_t m = 0; m <= 12; ++m) {
      const Poly d = dickson(m, a);
      Poly lhs;
      for (std::size_t i = 0; i <= m; ++i) {
        lhs += Poly{a, Rat(0), Rat(1)}.pow(i) * Poly::monomial(d.coeff(i), m - i);
      }
      ASSERT_EQ(lhs, Poly::monomial(1, 2 * m) + Poly::constant(a.pow(m))) << m << " " << a;
      if (m >= 1) ASSERT_TRUE(d.is_monic());
    }
  }
}

TEST(AltPowerSum, Examples) {
  EXPECT_EQ(alt_power_sum_direct(7, 2), Rat(127));
  EXPECT_EQ(alt_power_sum_direct(7, 4), Rat(14324));
  EXPECT_EQ(alt_power_sum_direct(1, 3), Rat(-2));
  EXPECT_EQ(alt_power_sum_closed(7, 2), Rat(127));
  EXPECT_EQ(alt_power_sum_closed(7, 4), Rat(14324));
  EXPECT_EQ(alt_power_sum_closed(2, 1), Rat(-1));
}

TEST(AltPowerSum, ClosedFormMatchesDirect) {
  for (std::size_t k = 1; k <= 12; ++k) {
    for (std::size_t n = 1; n <= 200; ++n) {
      ASSERT_EQ(alt_power_sum_direct(k, n), alt_power_sum_closed(k, n)) << k << " " << n;
    }
  }
}

TEST(EquationSides, EvenBranch) {
  const auto sides = equation_sides(7, Branch::EvenN);
  EXPECT_EQ(sides.h, Linear(Rat(2), Rat(1)));
  EXPECT_EQ(sides.f, Linear(Rat(1, 2), euler_poly(7)(Rat(0)) / Rat(2)));
  EXPECT_EQ(sides.composed()(Rat(2)), Rat(14324));
  EXPECT_EQ(equation_sides(12, Branch::EvenN).h, Linear(Rat(2), Rat(1)));
}

TEST(EquationSides, OddBranch) {
  const auto sides = equation_sides(7, Branch::OddN);
  EXPECT_EQ(sides.h, Linear(Rat(2), Rat(0)));
  EXPECT_EQ(sides.composed()(Rat(1)), Rat(-1));
}

TEST(EquationSides, BranchConsistency) {
  for (std::size_t k = 7; k <= 10; ++k) {
    const Poly even = equation_sides(k, Branch::EvenN).composed();
    const Poly odd = equation_sides(k, Branch::OddN).composed();
    for (std::size_t x = 1; x <= 50; ++x) {
      ASSERT_EQ(even(Rat(static_cast<long>(x))), alt_power_sum_direct(k, 2 * x));
      ASSERT_EQ(odd(Rat(static_cast<long>(x))), alt_power_sum_direct(k, 2 * x - 1));
    }
  }
}

TEST(Branch, Parsing) {
  EXPECT_EQ(parse_branch("even-n"), Branch::EvenN);
  EXPECT_EQ(parse_branch("odd-n"), Branch::OddN);
  EXPECT_THROW(parse_branch("even"), Error);
  EXPECT_EQ(terms_for(Branch::OddN, 7), 13);
  EXPECT_EQ(terms_for(Branch::EvenN, 7), 14);
}

}  // namespace
}  // namespace eulerdec
