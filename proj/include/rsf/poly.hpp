#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsf/monomial.hpp"

namespace rsf {

using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coef;
};

/// Image of a variable under a monomial substitution: scale * mono.
struct MonomialImage {
  Monomial mono;
  Rational scale{1};
};

/// Variable -> image map. Variables without an entry are left unchanged.
class Substitution {
 public:
  Substitution() = default;
  Substitution& set(VarId v, Monomial mono, Rational scale = 1);
  Substitution& set_constant(VarId v, Rational value);
  const MonomialImage* find(VarId v) const;
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<VarId, MonomialImage>>& entries() const { return entries_; }

  /// Image of a monomial as scale * monomial. Throws a precondition error on
  /// a negative power of a variable mapped to zero.
  std::pair<Rational, Monomial> apply(const Monomial& m) const;

 private:
  std::vector<std::pair<VarId, MonomialImage>> entries_;
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients
/// (the MvPoly of the data model). Terms are kept strictly descending in
/// Monomial::compare order with no zero coefficients, so equal polynomials
/// have identical representations.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly monomial(const Monomial& m, const Rational& c = 1);
  static Poly var(VarId v, int e = 1);
  /// Builds from arbitrary terms (unsorted, possibly repeated or zero).
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  /// Constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int k) const;
  /// c * x^m * this.
  Poly mul_term(const Monomial& m, const Rational& c = 1) const;
  /// this * (1 - m), by a single merge.
  Poly mul_one_minus(const Monomial& m) const;
  /// this * (1 - m)^k.
  Poly mul_one_minus(const Monomial& m, int k) const;
  /// Exact quotient by (1 - m) in the Laurent ring, or nullopt.
  std::optional<Poly> div_one_minus(const Monomial& m) const;
  /// Exact quotient in the Laurent ring, or nullopt when `d` does not divide.
  std::optional<Poly> try_divide(const Poly& d) const;
  /// Exact quotient; throws "not divisible" on a nonzero remainder.
  Poly divide_exact(const Poly& d) const;

  /// Ring homomorphism induced by a monomial substitution (no exponent checks).
  Poly substitute(const Substitution& s) const;
  /// Renames variables: from[i] -> to[i] simultaneously.
  Poly rename(const std::vector<VarId>& from, const std::vector<VarId>& to) const;

  int max_degree(VarId v) const;
  int min_degree(VarId v) const;
  int max_nonz_degree() const;
  int min_nonz_degree() const;
  bool involves(VarId v) const;
  bool has_negative_nonz() const;
  /// Componentwise minimum of all exponent vectors (zero polynomial -> 1).
  Monomial min_exponents() const;
  /// Variables that occur with a nonzero exponent.
  std::vector<VarId> variables() const;

  /// Groups terms by the exponent of `v`: result[e] is the coefficient of v^e.
  std::map<int, Poly> coefficients_in(VarId v) const;
  /// Terms with total non-elimination degree <= n.
  Poly truncate_nonz(int n) const;
  /// Product truncated to total non-elimination degree <= n.
  static Poly mul_truncated(const Poly& a, const Poly& b, int n);

  /// Canonical text form (terms in display order, '^' powers, explicit '*').
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

/// Rational power with integer exponent (negative allowed for nonzero base).
Rational rational_pow(const Rational& base, int e);

/// Checked monomial substitution: throws "negative exponent on non-Z variable"
/// when the image leaves the Laurent-in-Z-only class.
Poly substitute_monomials(const Poly& p, const Substitution& s);

/// prod_{1<=i<j<=d} (x_i - x_j).
Poly vandermonde_product(int d);

/// Canonical text for a monomial without coefficient ("1" for the unit).
std::string monomial_to_string(const Monomial& m);

}  // namespace rsf
