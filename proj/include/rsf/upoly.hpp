#pragma once

#include <utility>
#include <vector>

#include "rsf/poly.hpp"

namespace rsf {

/// Dense univariate polynomial over Q, coefficient i at u^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefs);
  static UPoly constant(const Rational& c);
  /// c * u^k
  static UPoly monomial(int k, const Rational& c = 1);
  /// The n-th cyclotomic polynomial.
  static UPoly cyclotomic(int n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational coef(int i) const;
  const Rational& leading() const { return c_.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  UPoly pow(int k) const;

  /// Quotient and remainder.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd g with s*a + t*b = g.
  static void extended_gcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t);

  /// Embeds as a polynomial in `v`.
  Poly to_poly(VarId v) const;
  /// Reads a polynomial in a single variable `v` (nonnegative exponents).
  static UPoly from_poly(const Poly& p, VarId v);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace rsf
