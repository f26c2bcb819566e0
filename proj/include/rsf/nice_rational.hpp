#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsf/poly.hpp"

namespace rsf {

/// One denominator binomial: standard (1 - X^mono) or pivoted (z^zexp - C)
/// with C = mono. Powers live in the NiceRational denominator map.
struct BinomialFactor {
  enum class Kind : std::uint8_t { Standard, Pivoted };

  Kind kind = Kind::Standard;
  Monomial mono;
  VarId zvar{};
  int zexp = 0;

  static BinomialFactor standard(const Monomial& m);
  static BinomialFactor pivoted(VarId z, int zexp, const Monomial& c);

  bool is_standard() const { return kind == Kind::Standard; }
  /// The factor as a polynomial.
  Poly expand() const;
  std::string to_string() const;

  friend bool operator==(const BinomialFactor& a, const BinomialFactor& b);
  friend bool operator<(const BinomialFactor& a, const BinomialFactor& b);
};

using Denominator = std::map<BinomialFactor, int>;

/// num / prod(factor^power). Every constructor normalizes: standard factors
/// are oriented canonically (non-Z part of positive degree), equal factors
/// are merged, and factors dividing the numerator are cancelled.
class NiceRational {
 public:
  NiceRational() = default;
  NiceRational(Poly num);  // NOLINT(google-explicit-constructor)
  NiceRational(long c);    // NOLINT(google-explicit-constructor)
  NiceRational(Poly num, const Denominator& den);
  /// num / prod (1 - m)^power for the listed standard factors.
  static NiceRational over_binomials(Poly num, const std::vector<std::pair<Monomial, int>>& den);

  const Poly& num() const { return num_; }
  const Denominator& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// Product of the denominator factors as a polynomial.
  Poly expanded_den() const;
  /// Total number of binomial factors counted with multiplicity.
  int den_size() const;
  bool involves(VarId v) const;
  std::vector<VarId> variables() const;

  /// True when every standard factor is (1 - X^a) with X^a free of negative
  /// non-elimination exponents and of positive non-elimination degree, and the
  /// numerator has no negative non-elimination exponents.
  bool is_nice() const;

  NiceRational operator-() const;
  friend NiceRational operator+(const NiceRational& a, const NiceRational& b);
  friend NiceRational operator-(const NiceRational& a, const NiceRational& b);
  friend NiceRational operator*(const NiceRational& a, const NiceRational& b);
  NiceRational& operator+=(const NiceRational& o) { return *this = *this + o; }
  NiceRational& operator-=(const NiceRational& o) { return *this = *this - o; }
  NiceRational& operator*=(const NiceRational& o) { return *this = *this * o; }

  /// Structural equality of the normalized representation.
  friend bool operator==(const NiceRational& a, const NiceRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  void absorb_factor(const BinomialFactor& f, int power);

  Poly num_;
  Denominator den_;
};

/// Exact equality of rational functions by cross-multiplication.
bool nr_equal(const NiceRational& f, const NiceRational& g);

/// Terms of the power-series expansion of f with non-elimination degree <= n.
Poly series_truncate(const NiceRational& f, int n);

/// Substitution of constants or monomials (scale * monomial) for variables,
/// renormalized. Factors that become 1 are dropped; a vanishing factor is a
/// "pole under specialization"; a factor that stops being a binomial is rejected.
NiceRational specialize(const NiceRational& f, const Substitution& s);

/// Lowers factors (1 - r^g) to (1 - r^h), h | g, while the numerator absorbs
/// the quotient; a display-oriented reduction of the same value.
NiceRational reduce_binomials(const NiceRational& f);

/// Sum of many terms, added pairwise in a balanced tree.
NiceRational sum_all(std::vector<NiceRational> terms);

/// The canonical-text rendering of a single denominator factor, with power.
std::string factor_to_string(const BinomialFactor& f, int power);

}  // namespace rsf
