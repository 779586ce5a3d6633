#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "eulerdec/classical.hpp"
#include "eulerdec/poly.hpp"

namespace eulerdec {

// The equation  -1^k + 2^k - ... + (-1)^x x^k = g(y)  and the shapes of g
// for which it has infinitely many integer solutions:
//   i)   g = f(E_k(p))
//   ii)  g = f(Et_s(p^2))
//   iii) g = f(Et_s(delta p^2))
//   iv)  g = f(Et_s(gamma delta^t)),       t >= 3 odd
//   v)   g = f(Et_s((a delta^2 + b) p^2))
// with f(x) = +-x/2 + E_k(0)/2, s = k/2, Et_s = e_tilde(s) and delta linear.

enum class CaseTag { I, II, III, IV, V };

std::string_view to_string(CaseTag tag);
/// Accepts "i".."v"; throws Error otherwise.
CaseTag parse_case_tag(std::string_view text);

struct CaseI {
  Poly p;
};
struct CaseII {
  Poly p;
};
struct CaseIII {
  Linear delta;
  Poly p;
};
struct CaseIV {
  Rat gamma;
  Linear delta;
  std::size_t t;
};
struct CaseV {
  Rat a;
  Rat b;
  Linear delta;
  Poly p;
};

struct ExceptionalForm {
  using Witness = std::variant<CaseI, CaseII, CaseIII, CaseIV, CaseV>;

  std::size_t k;
  Linear f;
  Witness witness;

  [[nodiscard]] CaseTag tag() const { return static_cast<CaseTag>(witness.index()); }
  /// Argument fed to E_k (case i) or to Et_s (cases ii-v).
  [[nodiscard]] Poly argument() const;
  /// g rebuilt from the witness.
  [[nodiscard]] Poly recompose() const;
};

struct ClassificationReport {
  std::vector<ExceptionalForm> matches;  // priority order i, ii, iv, iii, v
  std::vector<std::string> splits_examined;
};

/// Every exceptional shape g matches. Shapes overlap: for even k, case i
/// and case ii describe the same polynomials (E_k(p) = Et_s((p - 1/2)^2)),
/// and every case iv polynomial is also case iii. All matches are listed.
ClassificationReport classify(std::size_t k, const Poly& g);

/// Highest-priority match of classify(), if any.
std::optional<ExceptionalForm> classify_g(std::size_t k, const Poly& g);

/// -1^k + ... + (-1)^x x^k == g(y), exactly. Throws Error for x < 1.
bool verify_solution(std::size_t k, const Poly& g, const mpz_class& x, const mpz_class& y);

/// (a_n + b_n sqrt 2) = (3 + 2 sqrt 2)^n.
struct PellState {
  mpz_class a{3};
  mpz_class b{2};
  std::size_t n = 1;

  void advance();
};

/// One emitted solution. x and y solve f(E_k(h(x))) = g(y) for the family's
/// branch; terms = 2x (even-n) or 2x - 1 (odd-n) is the number of summands,
/// so (terms, y) solves the alternating-sum equation itself.
struct FamilyPair {
  std::size_t index;
  mpz_class x;
  mpz_class y;
  mpz_class terms;
};

/// Explicit infinite solution families. Every pair handed out by next() has
/// been checked with verify_solution; precondition failures on the
/// polynomial parameter raise Error naming the offending index.
class SolutionFamily {
 public:
  struct ParamsI {
    Poly r;
  };
  struct ParamsII {
    Poly r;
  };
  struct ParamsIII {
    Poly r;
  };
  struct ParamsIV {
    std::size_t t;
  };
  struct ParamsV {
    Poly r;
    PellState pell;
  };
  using Params = std::variant<ParamsI, ParamsII, ParamsIII, ParamsIV, ParamsV>;

  SolutionFamily(std::size_t k, Branch branch, Params params);

  [[nodiscard]] CaseTag tag() const { return static_cast<CaseTag>(params_.index()); }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] Branch branch() const { return branch_; }
  [[nodiscard]] const Poly& g() const { return form_g_; }
  [[nodiscard]] const ExceptionalForm& form() const { return form_; }
  [[nodiscard]] std::size_t next_index() const { return index_; }

  FamilyPair next();
  std::vector<FamilyPair> take(std::size_t count);

 private:
  std::pair<mpz_class, mpz_class> candidate(std::size_t m);

  std::size_t k_;
  Branch branch_;
  Params params_;
  ExceptionalForm form_;
  Poly form_g_;
  std::size_t index_ = 1;
};

/// p = h(r) with h the branch's inner map; pairs (r(m), m).
SolutionFamily family_case_i(std::size_t k, const Poly& r, Branch branch);
/// p = 2r - 1/2 (odd-n) or 2r + 1/2 (even-n); pairs (r(m), m).
SolutionFamily family_case_ii(std::size_t k, const Poly& r, Branch branch);
/// delta = x, p = r - 1/2 with r odd-valued; y = w^2 for w = 4m+3 (odd-n)
/// or w = 4m+1 (even-n).
SolutionFamily family_case_iii(std::size_t k, const Poly& r, Branch branch);
/// gamma = 1/4, delta = x; y = (4m-1)^2 (odd-n) or (4m+1)^2 (even-n).
SolutionFamily family_case_iv(std::size_t k, std::size_t t, Branch branch);
/// a = 1/2, b = 1/4, delta = x, p = 4r + 1; y = b_(2n+1) (odd-n) or
/// b_(2n) (even-n) from the Pell sequence.
SolutionFamily family_case_v(std::size_t k, const Poly& r, Branch branch);

enum class LhsMode { Running, Closed };

/// All (x, y) with 1 <= x <= x_max, y_lo <= y <= y_hi solving the equation,
/// sorted by (x, y).
std::vector<std::pair<long, long>> brute_search(std::size_t k, const Poly& g, long x_max, long y_lo, long y_hi,
                                                LhsMode mode = LhsMode::Running);

/// Largest y-range brute_search accepts.
inline constexpr long kMaxSearchSpan = 20'000'000;

/// count_simple_roots(E_m + b) >= 3 for every sampled b. Requires m >= 7.
bool theorem_rak_check(std::size_t m, const std::vector<Rat>& b_values);

}  // namespace eulerdec
