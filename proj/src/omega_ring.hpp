#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rsf/nice_rational.hpp"

namespace rsf::detail {

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) < 0; }
};

/// prod (1 - m)^k over z-free Laurent monomials m, kept unoriented.
using BinomialDen = std::map<Monomial, int, MonomialLess>;

/// Generalized binomial coefficient q(q-1)...(q-j+1)/j! for any integer q.
Rational binomial_coefficient(int q, int j);

/// Dense polynomial in one variable whose coefficients are Laurent polynomials
/// in the remaining variables; index = exponent.
using ZPoly = std::vector<Poly>;

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
/// Division by a polynomial whose leading coefficient is a single term.
std::pair<ZPoly, ZPoly> zpoly_divmod(const ZPoly& a, const ZPoly& b);
/// z^n - rho, raised to e.
ZPoly zpoly_binomial_power(int n, const Monomial& rho, int e);
/// Reads a polynomial in z after multiplying by z^shift; throws if a negative
/// exponent remains.
ZPoly zpoly_from(const Poly& p, VarId z, int shift = 0);
/// sum c_i z^(i - shift)
Poly zpoly_to_poly(const ZPoly& p, VarId z, int shift = 0);
bool zpoly_is_zero(const ZPoly& p);

/// K[z]/((z^n - rho)^E) in the basis z^i s^j (i < n, j < E), s = z^n - rho,
/// with coefficients over a common denominator of monomial binomials.
class BinomialRing {
 public:
  struct Elem {
    std::vector<Poly> c;  // index j * n + i
    BinomialDen den;
  };

  BinomialRing(VarId z, int n, Monomial rho, int e);

  int n() const { return n_; }
  int e() const { return e_; }
  const Monomial& rho() const { return rho_; }

  Elem zero() const;
  Elem one() const;
  /// coef * z^exp for any integer exponent.
  Elem z_power(int exp, const Poly& coef) const;
  Elem from_z_poly(const std::map<int, Poly>& coeffs) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, int k) const;
  Elem scale(Elem a, const Poly& c) const;
  /// (1 - m z^k)^-1 for a z-free monomial m and k != 0.
  Elem inverse_one_minus(const Monomial& m, int k) const;

  /// r(1) / (1 - rho)^E, where r is the representative of degree < nE.
  NiceRational value_at_one(const Elem& r) const;
  /// The representative of degree < nE (numerator only; denominator is r.den).
  ZPoly representative(const Elem& r) const;

 private:
  Poly& at(Elem& a, int j, int i) const { return a.c[static_cast<std::size_t>(j * n_ + i)]; }

  VarId z_;
  int n_;
  Monomial rho_;
  int e_;
};

/// Converts a BinomialDen to nice-rational factors.
std::vector<std::pair<Monomial, int>> to_factor_list(const BinomialDen& den);

}  // namespace rsf::detail
