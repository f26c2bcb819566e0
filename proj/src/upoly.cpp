#include "rsf/upoly.hpp"

#include <algorithm>

#include "rsf/error.hpp"

namespace rsf {

UPoly::UPoly(std::vector<Rational> coefs) : c_(std::move(coefs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::cyclotomic(int n) {
  if (n < 1) throw_internal("cyclotomic index", std::to_string(n));
  // u^n - 1 divided by every Phi_d, d | n, d < n.
  UPoly p = monomial(n) - constant(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divmod(p, cyclotomic(d)).first;
  return p;
}

Rational UPoly::coef(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::pow(int k) const {
  UPoly r = constant(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw_internal("division by zero", "univariate divisor is 0");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / b.leading();
    q[static_cast<std::size_t>(i - db)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

void UPoly::extended_gcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0 = constant(1), s1, t0, t1 = constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) throw_internal("gcd of zero polynomials", "");
  Rational lc = r0.leading();
  UPoly inv = constant(Rational(1) / lc);
  g = r0 * inv;
  s = s0 * inv;
  t = t0 * inv;
}

Poly UPoly::to_poly(VarId v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) terms.push_back(Term{Monomial::of(v, static_cast<int>(i)), c_[i]});
  return Poly::from_terms(std::move(terms));
}

UPoly UPoly::from_poly(const Poly& p, VarId v) {
  std::vector<Rational> c;
  for (const Term& t : p.terms()) {
    int e = t.mono[v];
    if (e < 0 || !(t.mono == Monomial::of(v, e)))
      throw_precondition("not univariate", p.to_string() + " is not a polynomial in " + v.name());
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1, Rational(0));
    c[static_cast<std::size_t>(e)] += t.coef;
  }
  return UPoly(std::move(c));
}

}  // namespace rsf
