#include "eulerdec/recognize.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "eulerdec/classical.hpp"
#include "eulerdec/error.hpp"
#include "eulerdec/structure.hpp"

namespace eulerdec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_nonzero(const Rat& v, const char* what) {
  if (v.is_zero()) throw Error(std::string("standard pair parameter ") + what + " must be nonzero");
}

void validate(const FirstKind& s) {
  require_nonzero(s.a, "a");
  if (s.p.is_zero()) throw Error("first kind: p must be a nonzero polynomial");
  if (s.m == 0 || s.r >= s.m) throw Error("first kind: need 0 <= r < m");
  if (std::gcd(s.r, s.m) != 1) throw Error("first kind: need gcd(r, m) = 1");
  if (s.r + s.p.deg() == 0) throw Error("first kind: need r + deg p > 0");
}

void validate(const SecondKind& s) {
  require_nonzero(s.a, "a");
  require_nonzero(s.b, "b");
  if (s.p.is_zero()) throw Error("second kind: p must be a nonzero polynomial");
}

void validate(const ThirdKind& s) {
  require_nonzero(s.a, "a");
  if (s.m == 0 || s.n == 0) throw Error("third kind: degrees must be positive");
  if (std::gcd(s.m, s.n) != 1) throw Error("third kind: need gcd(m, n) = 1");
}

void validate(const FourthKind& s) {
  require_nonzero(s.a, "a");
  require_nonzero(s.b, "b");
  if (s.m == 0 || s.n == 0) throw Error("fourth kind: degrees must be positive");
  if (std::gcd(s.m, s.n) != 2) throw Error("fourth kind: need gcd(m, n) = 2");
}

void validate(const FifthKind& s) { require_nonzero(s.a, "a"); }

}  // namespace

StandardPair::StandardPair(Parameters params, bool switched) : params_(std::move(params)), switched_(switched) {
  std::visit([](const auto& s) { validate(s); }, params_);
}

PairKind StandardPair::kind() const { return static_cast<PairKind>(params_.index()); }

PolyPair materialize(const StandardPair& sp) {
  const Poly x = Poly::x();
  PolyPair pair = std::visit(
      Overloaded{
          [&](const FirstKind& s) {
            return PolyPair{x.pow(s.m), Poly::monomial(s.a, s.r) * s.p.pow(s.m)};
          },
          [&](const SecondKind& s) {
            return PolyPair{x.pow(2), Poly{s.b, Rat(0), s.a} * s.p.pow(2)};
          },
          [&](const ThirdKind& s) {
            return PolyPair{dickson(s.m, s.a.pow(s.n)), dickson(s.n, s.a.pow(s.m))};
          },
          [&](const FourthKind& s) {
            // gcd(m, n) = 2 makes both exponents integral
            return PolyPair{dickson(s.m, s.a) * s.a.pow(s.m / 2).inverse(),
                            dickson(s.n, s.b) * -s.b.pow(s.n / 2).inverse()};
          },
          [&](const FifthKind& s) {
            return PolyPair{Poly{Rat(-1), Rat(0), s.a}.pow(3), Poly{Rat(0), Rat(0), Rat(0), Rat(-4), Rat(3)}};
          },
      },
      sp.parameters());
  if (sp.switched()) std::swap(pair.first, pair.second);
  return pair;
}

std::optional<PowerForm> detect_power_form(const Poly& p) {
  if (p.is_constant() || p.deg() < 2) throw Error("detect_power_form needs degree >= 2");
  const auto [shift, dep] = depress(p);
  const std::size_t q = dep.deg();
  for (std::size_t i = 1; i < q; ++i) {
    if (!dep.coeff(i).is_zero()) return std::nullopt;
  }
  PowerForm form{dep.leading(), dep.coeff(0), -shift};
  const Poly rebuilt = Poly{form.shift, Rat(1)}.pow(q) * form.u + Poly::constant(form.v);
  if (rebuilt != p) throw Error("internal: power form witness does not recompose");
  return form;
}

std::optional<DicksonForm> detect_dickson_form(const Poly& p) {
  if (p.is_constant() || p.deg() < 3) throw Error("detect_dickson_form needs degree >= 3");
  const auto [shift, dep] = depress(p);
  const std::size_t q = dep.deg();
  const Rat u = dep.leading();
  // [x^(q-2)] D_q(x, a) = -q a
  const Rat a = -dep.coeff(q - 2) / (u * Rat(static_cast<long>(q)));
  if (a.is_zero()) return std::nullopt;
  const Poly d = dickson(q, a) * u;
  const Rat v = dep.coeff(0) - d.coeff(0);
  if (d + Poly::constant(v) != dep) return std::nullopt;
  DicksonForm form{u, v, a, Linear(Rat(1), -shift)};
  if (compose(dickson(q, a), form.inner) * u + Poly::constant(v) != p) {
    throw Error("internal: Dickson form witness does not recompose");
  }
  return form;
}

std::vector<ExtremumReport> dickson_extrema(std::size_t k, const Rat& a) {
  if (k < 3) throw Error("dickson_extrema needs k >= 3");
  if (a.is_zero()) throw Error("dickson_extrema needs a nonzero parameter");
  Rat half_power;
  if (k % 2 == 0) {
    half_power = a.pow(k / 2);
  } else {
    const auto root = a.sign() > 0 ? rational_root(a, 2) : std::nullopt;
    if (!root) {
      throw Error("a^(k/2) is irrational for odd k = " + std::to_string(k) + " and a = " + a.str() +
                  "; a must be the square of a rational");
    }
    half_power = root->pow(k);
  }
  const Poly d = dickson(k, a);
  std::vector<ExtremumReport> reports;
  for (const Rat& value : {Rat(2) * half_power, Rat(-2) * half_power}) {
    const auto sf = squarefree_decompose(d - Poly::constant(value));
    reports.push_back({value, sf.root_multiplicities()});
  }
  return reports;
}

bool lemma_dr_check(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw Error("lemma_dr_check needs an even n >= 2");
  constexpr double kPositivity = 1e-12;
  constexpr double kRelative = 1e-9;
  std::vector<double> product{1.0, 2.0};  // 2x + 1, ascending
  for (std::size_t j = 1; j < n / 2; ++j) {
    const double c = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    if (!(c > kPositivity)) return false;
    std::vector<double> next(product.size() + 2, 0.0);
    for (std::size_t i = 0; i < product.size(); ++i) {
      next[i] += product[i];
      next[i + 1] += c * product[i];
      next[i + 2] += c * product[i];
    }
    product = std::move(next);
  }
  // (x+1)^n - x^n has coefficients C(n, i) for i < n.
  if (product.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const double exact = binomial(n, i).get_d();
    if (std::abs(product[i] - exact) > kRelative * std::abs(exact)) return false;
  }
  return true;
}

bool coefficient_inequality_holds(std::size_t t, std::size_t k) {
  const Rat lhs(binomial(k, 4));
  const auto kk = static_cast<long>(k);
  const Rat rhs = Rat(static_cast<long>(t) - 1) * Rat(kk * kk) * Rat(kk - 2) * Rat(kk - 3) / Rat(16);
  return lhs > rhs;
}

}  // namespace eulerdec
