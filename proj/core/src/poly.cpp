#include "eulerdec/poly.hpp"

#include <algorithm>
#include <ostream>

#include "eulerdec/error.hpp"

namespace eulerdec {

std::size_t Degree::value() const {
  if (is_neg_infinity()) throw Error("degree of the zero polynomial is -infinity");
  return static_cast<std::size_t>(value_);
}

Degree operator+(const Degree& a, const Degree& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) return Degree::neg_infinity();
  return Degree(a.value_ + b.value_);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly{c}; }

Poly Poly::x() { return Poly{Rat(0), Rat(1)}; }

Poly Poly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const {
  return coeffs_.empty() ? Degree::neg_infinity() : Degree::of(coeffs_.size() - 1);
}

std::size_t Poly::deg() const { return degree().value(); }

Rat Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat Poly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

Poly Poly::monic() const {
  if (is_zero()) throw Error("the zero polynomial has no monic associate");
  return *this * leading().inverse();
}

Rat Poly::operator()(const Rat& at) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::pow(std::size_t e) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
    }
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(q);
  return Poly(std::move(out));
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (i > 0) os << ',';
    os << p.coeffs_[i];
  }
  return os;
}

Poly compose(const Poly& outer, const Poly& inner) {
  Poly acc;
  const auto c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

DivRem divrem(const Poly& f, const Poly& d) {
  if (d.is_zero()) throw Error("polynomial division by zero");
  if (f.is_zero() || f.deg() < d.deg()) return {Poly{}, f};
  const std::size_t n = f.deg();
  const std::size_t m = d.deg();
  std::vector<Rat> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Rat> quot(n - m + 1);
  const Rat inv_lead = d.leading().inverse();
  const auto dc = d.coeffs();
  for (std::size_t k = n - m + 1; k-- > 0;) {
    const Rat q = rem[k + m] * inv_lead;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= m; ++j) rem[k + j] -= q * dc[j];
  }
  rem.resize(m);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly primitive_part(ZPoly p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return p;
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

ZPoly clear_denominators(const Poly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  ZPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.num() * (l / c.den()));
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t m = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= m; ++j) a[shift + j] -= la * b[j];
    ztrim(a);
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw Error("gcd of two zero polynomials is undefined");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  ZPoly a = primitive_part(clear_denominators(f));
  ZPoly b = primitive_part(clear_denominators(g));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? ZPoly{} : primitive_part(std::move(r));
  }
  std::vector<Rat> out;
  out.reserve(a.size());
  for (const auto& c : a) out.emplace_back(c, a.back());
  return Poly(std::move(out));
}

Linear::Linear(Rat slope, Rat intercept) : slope_(std::move(slope)), intercept_(std::move(intercept)) {
  if (slope_.is_zero()) throw Error("linear map with zero slope is not invertible");
}

Linear Linear::inverse() const {
  const Rat inv = slope_.inverse();
  return {inv, -intercept_ * inv};
}

Linear Linear::from_poly(const Poly& p) {
  if (p.degree() != Degree::of(1)) throw Error("expected a degree-1 polynomial");
  return {p.coeff(1), p.coeff(0)};
}

Linear compose(const Linear& a, const Linear& b) {
  return {a.slope() * b.slope(), a.slope() * b.intercept() + a.intercept()};
}

Poly compose(const Poly& outer, const Linear& inner) { return compose(outer, inner.to_poly()); }

Poly compose(const Linear& outer, const Poly& inner) {
  return inner * outer.slope() + Poly::constant(outer.intercept());
}

}  // namespace eulerdec
