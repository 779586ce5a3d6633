#include "eulerdec/diophantine.hpp"

#include <algorithm>
#include <unordered_map>

#include "eulerdec/decompose.hpp"
#include "eulerdec/error.hpp"
#include "eulerdec/recognize.hpp"
#include "eulerdec/structure.hpp"

namespace eulerdec {

namespace {

Poly x_poly() { return Poly::x(); }

Poly delta_poly(const Linear& d) { return d.to_poly(); }

// Every p of degree d with target(p) == G.
std::vector<Poly> right_factors_through(const Poly& G, const Poly& target, std::size_t d) {
  std::vector<Poly> out;
  if (d == 1) {
    for (const auto& l : find_right_linears(G, target)) out.push_back(l.to_poly());
    return out;
  }
  auto nd = try_decompose(G, d);
  if (!nd) return out;
  for (const auto& l : find_right_linears(nd->scaled_outer(), target)) {
    Poly p = compose(l, nd->inner);
    if (compose(target, p) == G) out.push_back(std::move(p));
  }
  return out;
}

// Q = content * K * S^2 with K the product of odd-multiplicity factors.
struct SquareSplit {
  Rat content;
  Poly kernel;
  Poly square_root;
};

SquareSplit split_square(const Poly& q) {
  const auto sf = squarefree_decompose(q);
  SquareSplit s{sf.content, Poly::constant(1), Poly::constant(1)};
  for (const auto& part : sf.parts) {
    if (part.multiplicity % 2 == 1) s.kernel *= part.factor;
    s.square_root *= part.factor.pow(part.multiplicity / 2);
  }
  return s;
}

// Shapes ii-v for the argument Q of Et_s, in priority order ii, iv, iii, v.
std::vector<ExceptionalForm::Witness> classify_argument(const Poly& q) {
  std::vector<ExceptionalForm::Witness> out;
  if (q.is_constant()) return out;
  const std::size_t e = q.deg();
  const SquareSplit s = split_square(q);
  const std::size_t kernel_degree = s.kernel.deg();
  if (kernel_degree == 0) {
    if (auto root = s.content.sign() > 0 ? rational_root(s.content, 2) : std::nullopt) {
      out.emplace_back(CaseII{s.square_root * *root});
    }
  }
  if (e >= 3 && e % 2 == 1) {
    if (auto pf = detect_power_form(q); pf && pf->v.is_zero()) {
      out.emplace_back(CaseIV{pf->u, Linear(Rat(1), pf->shift), e});
    }
  }
  if (kernel_degree == 1) {
    out.emplace_back(CaseIII{Linear::from_poly(s.kernel * s.content), s.square_root});
  }
  if (kernel_degree == 2) {
    const Poly quad = s.kernel * s.content;
    const Rat a = quad.coeff(2);
    const Rat centre = quad.coeff(1) / (Rat(2) * a);
    const Rat b = quad.coeff(0) - a * centre * centre;
    if (!b.is_zero()) out.emplace_back(CaseV{a, b, Linear(Rat(1), centre), s.square_root});
  }
  return out;
}

std::string describe_split(std::string_view outer, std::size_t degree, Branch branch) {
  return std::string(outer) + " of a degree-" + std::to_string(degree) + " argument, f for " +
         std::string(to_string(branch));
}

void require_even_k(std::size_t k, CaseTag tag) {
  if (k < 2 || k % 2 != 0) {
    throw Error("case " + std::string(to_string(tag)) + " families need an even k, got " + std::to_string(k));
  }
}

mpz_class integer_value(const Poly& r, const mpz_class& at, CaseTag tag, std::size_t m) {
  const Rat v = r(Rat(at));
  if (!v.is_integer()) {
    throw Error("case " + std::string(to_string(tag)) + " family: r(" + at.get_str() + ") = " + v.str() +
                " is not an integer at index " + std::to_string(m));
  }
  return v.num();
}

[[noreturn]] void precondition_failure(CaseTag tag, std::size_t m, const std::string& what) {
  throw Error("case " + std::string(to_string(tag)) + " family: " + what + " at index " + std::to_string(m));
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I:
      return "i";
    case CaseTag::II:
      return "ii";
    case CaseTag::III:
      return "iii";
    case CaseTag::IV:
      return "iv";
    case CaseTag::V:
      return "v";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view text) {
  if (text == "i") return CaseTag::I;
  if (text == "ii") return CaseTag::II;
  if (text == "iii") return CaseTag::III;
  if (text == "iv") return CaseTag::IV;
  if (text == "v") return CaseTag::V;
  throw Error("unknown case tag '" + std::string(text) + "' (expected i, ii, iii, iv or v)");
}

Poly ExceptionalForm::argument() const {
  struct Visitor {
    Poly operator()(const CaseI& w) const { return w.p; }
    Poly operator()(const CaseII& w) const { return w.p.pow(2); }
    Poly operator()(const CaseIII& w) const { return delta_poly(w.delta) * w.p.pow(2); }
    Poly operator()(const CaseIV& w) const { return delta_poly(w.delta).pow(w.t) * w.gamma; }
    Poly operator()(const CaseV& w) const {
      return (delta_poly(w.delta).pow(2) * w.a + Poly::constant(w.b)) * w.p.pow(2);
    }
  };
  return std::visit(Visitor{}, witness);
}

Poly ExceptionalForm::recompose() const {
  const Poly outer = tag() == CaseTag::I ? euler_poly(k) : e_tilde(k / 2);
  return compose(f, compose(outer, argument()));
}

ClassificationReport classify(std::size_t k, const Poly& g) {
  if (k < 7) throw Error("classification needs k >= 7");
  if (g.is_constant() || g.deg() < 2) throw Error("classification needs deg g >= 2");
  ClassificationReport report;
  const std::size_t n = g.deg();
  std::vector<ExceptionalForm> later;  // ii-v collected after every case i
  for (const Branch branch : {Branch::EvenN, Branch::OddN}) {
    const Linear f = outer_linear(k, branch);
    const Poly G = compose(f.inverse(), g);
    if (n % k == 0) {
      report.splits_examined.push_back(describe_split("E_k", n / k, branch));
      for (auto& p : right_factors_through(G, euler_poly(k), n / k)) {
        ExceptionalForm form{k, f, CaseI{std::move(p)}};
        if (form.recompose() == g) report.matches.push_back(std::move(form));
      }
    }
    const std::size_t s = k / 2;
    if (k % 2 == 0 && n % s == 0) {
      report.splits_examined.push_back(describe_split("Et_s", n / s, branch));
      for (const auto& q : right_factors_through(G, e_tilde(s), n / s)) {
        for (auto& w : classify_argument(q)) {
          ExceptionalForm form{k, f, std::move(w)};
          if (form.recompose() == g) later.push_back(std::move(form));
        }
      }
    }
  }
  // Stable order: all ii, then iv, iii, v.
  for (const CaseTag tag : {CaseTag::II, CaseTag::IV, CaseTag::III, CaseTag::V}) {
    for (const auto& form : later) {
      if (form.tag() == tag) report.matches.push_back(form);
    }
  }
  return report;
}

std::optional<ExceptionalForm> classify_g(std::size_t k, const Poly& g) {
  auto report = classify(k, g);
  if (report.matches.empty()) return std::nullopt;
  return std::move(report.matches.front());
}

bool verify_solution(std::size_t k, const Poly& g, const mpz_class& x, const mpz_class& y) {
  if (x < 1) throw Error("verify_solution needs x >= 1, got " + x.get_str());
  return alt_power_sum_closed(k, x) == g(Rat(y));
}

void PellState::advance() {
  mpz_class next_a = 3 * a + 4 * b;
  mpz_class next_b = 2 * a + 3 * b;
  a = std::move(next_a);
  b = std::move(next_b);
  ++n;
}

SolutionFamily::SolutionFamily(std::size_t k, Branch branch, Params params)
    : k_(k), branch_(branch), params_(std::move(params)), form_{k, outer_linear(k, branch), CaseI{Poly{}}} {
  if (k < 1) throw Error("families need k >= 1");
  const Linear f = form_.f;
  const Poly x = x_poly();
  const bool odd_branch = branch == Branch::OddN;
  struct Builder {
    std::size_t k;
    bool odd_branch;
    const Poly& x;
    ExceptionalForm::Witness operator()(const ParamsI& p) const {
      const Poly h = odd_branch ? Poly{Rat(0), Rat(2)} : Poly{Rat(1), Rat(2)};
      return CaseI{compose(h, p.r)};
    }
    ExceptionalForm::Witness operator()(const ParamsII& p) const {
      require_even_k(k, CaseTag::II);
      return CaseII{p.r * Rat(2) + Poly::constant(odd_branch ? Rat(-1, 2) : Rat(1, 2))};
    }
    ExceptionalForm::Witness operator()(const ParamsIII& p) const {
      require_even_k(k, CaseTag::III);
      return CaseIII{Linear::identity(), p.r - Poly::constant(Rat(1, 2))};
    }
    ExceptionalForm::Witness operator()(const ParamsIV& p) const {
      require_even_k(k, CaseTag::IV);
      if (p.t < 3 || p.t % 2 == 0) throw Error("case iv families need an odd t >= 3");
      return CaseIV{Rat(1, 4), Linear::identity(), p.t};
    }
    ExceptionalForm::Witness operator()(const ParamsV& p) const {
      require_even_k(k, CaseTag::V);
      return CaseV{Rat(1, 2), Rat(1, 4), Linear::identity(), p.r * Rat(4) + Poly::constant(1)};
    }
  };
  form_ = ExceptionalForm{k, f, std::visit(Builder{k, odd_branch, x}, params_)};
  form_g_ = form_.recompose();
}

std::pair<mpz_class, mpz_class> SolutionFamily::candidate(std::size_t m) {
  const bool odd_branch = branch_ == Branch::OddN;
  const mpz_class mm(static_cast<unsigned long>(m));
  const CaseTag t = tag();
  if (auto* p = std::get_if<ParamsI>(&params_)) {
    return {integer_value(p->r, mm, t, m), mm};
  }
  if (auto* p = std::get_if<ParamsII>(&params_)) {
    return {integer_value(p->r, mm, t, m), mm};
  }
  if (auto* p = std::get_if<ParamsIII>(&params_)) {
    const mpz_class w = odd_branch ? mpz_class(4 * mm + 3) : mpz_class(4 * mm + 1);
    const mpz_class y = w * w;
    const mpz_class r = integer_value(p->r, y, t, m);
    if (r < 1 || mpz_even_p(r.get_mpz_t())) precondition_failure(t, m, "r(y) = " + r.get_str() + " is not odd and positive");
    // 2x -+ 1/2 = w (r - 1/2)
    const mpz_class twice = odd_branch ? mpz_class(w * r - (w - 1) / 2) : mpz_class(w * r - (w + 1) / 2);
    if (mpz_odd_p(twice.get_mpz_t())) precondition_failure(t, m, "x is not an integer");
    return {twice / 2, y};
  }
  if (auto* p = std::get_if<ParamsIV>(&params_)) {
    const mpz_class w = odd_branch ? mpz_class(4 * mm - 1) : mpz_class(4 * mm + 1);
    mpz_class wt;
    mpz_pow_ui(wt.get_mpz_t(), w.get_mpz_t(), p->t);
    const mpz_class numer = odd_branch ? mpz_class(wt + 1) : mpz_class(wt - 1);
    return {numer / 4, w * w};
  }
  auto& p = std::get<ParamsV>(params_);
  const std::size_t target = odd_branch ? 2 * m + 1 : 2 * m;
  if (p.pell.n > target) p.pell = PellState{};
  while (p.pell.n < target) p.pell.advance();
  const mpz_class y = p.pell.b;
  const mpz_class r = integer_value(p.r, y, t, m);
  if (r < 1) precondition_failure(t, m, "r(y) = " + r.get_str() + " is not positive");
  const mpz_class scaled = p.pell.a * (4 * r + 1);
  const mpz_class numer = odd_branch ? mpz_class(scaled + 1) : mpz_class(scaled - 1);
  if (!mpz_divisible_ui_p(numer.get_mpz_t(), 4)) precondition_failure(t, m, "x is not an integer");
  return {numer / 4, y};
}

FamilyPair SolutionFamily::next() {
  const std::size_t m = index_;
  auto [x, y] = candidate(m);
  if (x < 1) precondition_failure(tag(), m, "x = " + x.get_str() + " is not positive");
  mpz_class terms = terms_for(branch_, x);
  if (!verify_solution(k_, form_g_, terms, y)) {
    throw Error("case " + std::string(to_string(tag())) + " family: pair (" + x.get_str() + ", " + y.get_str() +
                ") failed verification at index " + std::to_string(m));
  }
  ++index_;
  return {m, std::move(x), std::move(y), std::move(terms)};
}

std::vector<FamilyPair> SolutionFamily::take(std::size_t count) {
  std::vector<FamilyPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

SolutionFamily family_case_i(std::size_t k, const Poly& r, Branch branch) {
  return {k, branch, SolutionFamily::ParamsI{r}};
}
SolutionFamily family_case_ii(std::size_t k, const Poly& r, Branch branch) {
  return {k, branch, SolutionFamily::ParamsII{r}};
}
SolutionFamily family_case_iii(std::size_t k, const Poly& r, Branch branch) {
  return {k, branch, SolutionFamily::ParamsIII{r}};
}
SolutionFamily family_case_iv(std::size_t k, std::size_t t, Branch branch) {
  return {k, branch, SolutionFamily::ParamsIV{t}};
}
SolutionFamily family_case_v(std::size_t k, const Poly& r, Branch branch) {
  return {k, branch, SolutionFamily::ParamsV{r, PellState{}}};
}

std::vector<std::pair<long, long>> brute_search(std::size_t k, const Poly& g, long x_max, long y_lo, long y_hi,
                                                LhsMode mode) {
  std::vector<std::pair<long, long>> found;
  if (x_max < 1 || y_lo > y_hi) return found;
  if (y_hi - y_lo >= kMaxSearchSpan) throw Error("search y-range exceeds " + std::to_string(kMaxSearchSpan) + " values");
  std::unordered_map<Rat, std::vector<long>, RatHash> values;
  values.reserve(static_cast<std::size_t>(y_hi - y_lo + 1));
  for (long y = y_lo; y <= y_hi; ++y) {
    Rat v = g(Rat(y));
    if (v.is_integer()) values[std::move(v)].push_back(y);
  }
  mpz_class running = 0;
  mpz_class term;
  for (long x = 1; x <= x_max; ++x) {
    Rat lhs;
    if (mode == LhsMode::Running) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(x), k);
      if (x % 2 == 1) {
        running -= term;
      } else {
        running += term;
      }
      lhs = Rat(running);
    } else {
      lhs = alt_power_sum_closed(k, static_cast<std::size_t>(x));
    }
    if (auto it = values.find(lhs); it != values.end()) {
      for (long y : it->second) found.emplace_back(x, y);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool theorem_rak_check(std::size_t m, const std::vector<Rat>& b_values) {
  if (m < 7) throw Error("the simple-root check needs m >= 7");
  const Poly e = euler_poly(m);
  return std::all_of(b_values.begin(), b_values.end(),
                     [&](const Rat& b) { return count_simple_roots(e + Poly::constant(b)) >= 3; });
}

}  // namespace eulerdec
