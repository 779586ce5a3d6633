#include "verify.hpp"

#include <random>

#include "eulerdec/classical.hpp"
#include "eulerdec/decompose.hpp"
#include "eulerdec/diophantine.hpp"
#include "eulerdec/error.hpp"
#include "eulerdec/recognize.hpp"
#include "eulerdec/structure.hpp"

namespace eulerdec::cli {

namespace {

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  return Rat(mpz_class(num(rng)), mpz_class(den(rng)));
}

bool even_euler_unique(std::size_t k) {
  const auto set = all_decompositions(euler_poly(k));
  if (set.pairs.size() != 1 || set.pairs[0].inner_degree() != 2) return false;
  const Poly half_square{Rat(1, 4), Rat(-1), Rat(1)};
  const auto l = decompositions_equivalent({e_tilde(k / 2), half_square},
                                           {set.pairs[0].scaled_outer(), set.pairs[0].inner});
  return l.has_value();
}

bool extrema_shapes(std::size_t k, const Rat& a) {
  const auto reports = dickson_extrema(k, a);
  auto shape = [](std::size_t ones, std::size_t twos) {
    std::vector<std::size_t> s(ones, 1);
    s.insert(s.end(), twos, 2);
    return s;
  };
  if (k % 2 == 1) return reports[0].type == shape(1, k / 2) && reports[1].type == shape(1, k / 2);
  return reports[0].type == shape(2, k / 2 - 1) && reports[1].type == shape(0, k / 2);
}

bool euler_not_dickson(std::size_t n, const std::vector<Linear>& maps) {
  for (const auto& l : maps) {
    const Poly p = compose(euler_poly(n), l);
    if (detect_power_form(p).has_value()) return false;
    if (detect_dickson_form(p).has_value() != (n == 4)) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckRow> verify_theorems(const VerifyOptions& opts) {
  if (opts.euler_max < 9 || opts.euler_max > kMaxDecomposeDegree) {
    throw Error("--euler-max must lie in [9, " + std::to_string(kMaxDecomposeDegree) + "]");
  }
  if (opts.rak_max < 7 || opts.rak_max > kMaxDecomposeDegree) {
    throw Error("--rak-max must lie in [7, " + std::to_string(kMaxDecomposeDegree) + "]");
  }
  std::mt19937_64 rng(opts.seed);
  std::vector<CheckRow> rows;
  auto add = [&](const char* check, auto index, bool pass) {
    rows.push_back({check, std::to_string(index), pass});
  };

  for (std::size_t k = 9; k <= opts.euler_max; k += 2) add("odd-euler-indecomposable", k, is_indecomposable(euler_poly(k)));
  for (std::size_t k = 4; k <= opts.euler_max; k += 2) add("even-euler-unique", k, even_euler_unique(k));
  for (std::size_t m = 2; m <= 15; ++m) add("etilde-indecomposable", m, is_indecomposable(e_tilde(m)));

  for (std::size_t m = 7; m <= opts.rak_max; ++m) {
    std::vector<Rat> bs = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(17, 3), -euler_poly(m)(Rat(1, 2))};
    for (int i = 0; i < 3; ++i) bs.push_back(random_rat(rng));
    add("simple-roots", m, theorem_rak_check(m, bs));
  }

  for (std::size_t k = 3; k <= 12; ++k) {
    bool ok = true;
    for (const Rat& a : {Rat(1), Rat(4), Rat(9), Rat(1, 4)}) ok = ok && extrema_shapes(k, a);
    add("dickson-extrema", k, ok);
  }

  for (std::size_t n = 2; n <= 40; n += 2) add("dr-factorization", n, lemma_dr_check(n));

  std::vector<Linear> maps = {Linear::identity()};
  for (int i = 0; i < 4; ++i) {
    Rat c;
    do {
      c = random_rat(rng);
    } while (c.is_zero());
    maps.emplace_back(c, random_rat(rng));
  }
  for (std::size_t n = 4; n <= 12; ++n) add("euler-not-dickson", n, euler_not_dickson(n, maps));
  return rows;
}

}  // namespace eulerdec::cli
