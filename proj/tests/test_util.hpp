#pragma once

#include <random>
#include <vector>

#include "rsf/nice_rational.hpp"
#include "rsf/poly.hpp"

namespace rsf::test {

inline Poly random_poly(std::mt19937& rng, const std::vector<VarId>& vars, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::vector<Term> terms;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    int budget = exp(rng);
    for (VarId v : vars) {
      std::uniform_int_distribution<int> e(0, budget);
      int k = e(rng);
      m.set(v, k);
      budget -= k;
    }
    terms.push_back(Term{m, Rational(coef(rng))});
  }
  return Poly::from_terms(std::move(terms));
}

/// A monomial of positive degree in `vars`, every exponent in [0, max_exp].
inline Monomial random_positive_monomial(std::mt19937& rng, const std::vector<VarId>& vars, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  for (;;) {
    Monomial m;
    for (VarId v : vars) m.set(v, e(rng));
    if (m.nonz_degree() > 0) return m;
  }
}

/// num / prod (1 - m_i) with up to `factors` factors over `vars`.
inline NiceRational random_nice(std::mt19937& rng, const std::vector<VarId>& vars, int factors) {
  std::uniform_int_distribution<int> count(0, factors);
  std::vector<std::pair<Monomial, int>> den;
  int n = count(rng);
  for (int i = 0; i < n; ++i) den.emplace_back(random_positive_monomial(rng, vars, 2), 1);
  return NiceRational::over_binomials(random_poly(rng, vars, 3, 3), den);
}

inline VarId x(int i) { return VarId::x(i); }
inline VarId v(int i) { return VarId::v(i); }
inline VarId z(int i) { return VarId::z(i); }

}  // namespace rsf::test
