#pragma once

#include <vector>

#include "rsf/nice_rational.hpp"

namespace rsf {

enum class OmegaStrategy { PartialFractions, Elliott };

struct OmegaOptions {
  OmegaStrategy strategy = OmegaStrategy::PartialFractions;
  /// Compares every result against the truncated-series oracle; a mismatch
  /// raises an internal error.
  bool oracle_check = false;
  int oracle_degree = 8;
  /// Elliott rewrite budget; 0 selects default_rewrite_budget().
  long rewrite_budget = 0;
};

/// One summand of the partial-fraction decomposition in a single z.
struct ZPartialFractionTerm {
  enum class Kind { PolynomialPart, PureNegativePower, ContributingFraction, DiscardedFraction };

  Kind kind = Kind::PolynomialPart;
  /// The summand as a rational function.
  NiceRational value;
  /// Basis polynomial in z (1 for the polynomial and negative-power parts).
  Poly basis{1};
  int power = 0;
  /// value * basis^power, a polynomial in z over the z-free coefficient field.
  NiceRational numerator;
};

/// Rewrites every denominator factor (1 - B z^-b) as z^b / (z^b - B).
NiceRational pivot_z_form(const NiceRational& f, VarId z);

/// Partial fractions of f in z over a pairwise coprime basis. The sum of the
/// returned values is checked to reconstruct f.
std::vector<ZPartialFractionTerm> partial_fractions_z(const NiceRational& f, VarId z);

/// Nonnegative part in each z of `zs` (eliminated in order), evaluated at z = 1.
NiceRational omega_geq(const NiceRational& f, const std::vector<VarId>& zs, const OmegaOptions& opt = {});

/// Single-variable elimination by repeated Elliott rewriting.
NiceRational elliott_reduce(const NiceRational& f, VarId z, long budget = 0);

/// Eliminates each z of `zs` in order, keeping the intermediate sum split by
/// denominator; `budget` bounds the rewrites per variable.
NiceRational elliott_reduce(const NiceRational& f, const std::vector<VarId>& zs, long budget = 0);

/// Constant term in z.
NiceRational omega_eq0(const NiceRational& f, VarId z, const OmegaOptions& opt = {});

/// Series oracle: truncate f to non-elimination degree `degree`, keep terms
/// with every z in `zs` nonnegative, set those z to 1.
Poly omega_series_oracle(const NiceRational& f, const std::vector<VarId>& zs, int degree);

/// 10^5, or the value of RSF_REWRITE_BUDGET when set.
long default_rewrite_budget();

}  // namespace rsf
