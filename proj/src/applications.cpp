#include "rsf/applications.hpp"

#include <algorithm>
#include <numeric>

#include "rsf/error.hpp"
#include "rsf/upoly.hpp"

namespace rsf {

std::string ModuleSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i > 0) s += " + ";
    if (summands[i].second != 1) s += std::to_string(summands[i].second) + "*";
    s += "W" + summands[i].first.to_string();
  }
  return s.empty() ? "0" : s;
}

int JordanShape::total() const { return std::accumulate(cells.begin(), cells.end(), 0); }

std::string JordanShape::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(cells[i]);
  }
  return s + ")";
}

WeightList weights_of_module(const ModuleSpec& w) {
  if (w.d < 1) throw_precondition("invalid dimension", "d must be positive");
  WeightList out;
  for (const auto& [mu, k] : w.summands) {
    if (k < 1) throw_precondition("invalid module", "summand multiplicity must be positive");
    Poly s = schur_poly(mu, w.d);
    for (const Term& t : s.terms()) {
      if (t.coef.get_den() != 1 || sgn(t.coef) <= 0)
        throw_internal("non-integral weight multiplicity", s.to_string());
      long c = t.coef.get_num().get_si() * k;
      for (long i = 0; i < c; ++i) out.push_back(t.mono);
    }
  }
  return out;
}

NiceRational hilbert_symmetric_algebra(const ModuleSpec& w, bool graded) {
  if (!graded)
    for (const auto& [mu, k] : w.summands)
      if (mu.size() == 0) throw_precondition("zero-weight summand in ungraded mode", w.to_string());
  Monomial t = graded ? Monomial::of(VarId::t()) : Monomial();
  std::vector<std::pair<Monomial, int>> den;
  for (const Monomial& a : weights_of_module(w)) den.emplace_back(a * t, 1);
  return NiceRational::over_binomials(1, den);
}

NiceRational specialize_for_group(const NiceRational& m_prime, int d, Group g) {
  Substitution s;
  for (int i = 1; i <= d; ++i) s.set_constant(VarId::v(i), g == Group::UT || i == d ? 1 : 0);
  return reduce_binomials(specialize(m_prime, s));
}

NiceRational invariants_hilbert(const ModuleSpec& w, Group g, const OmegaOptions& opt) {
  NiceRational h = hilbert_symmetric_algebra(w, true);
  return specialize_for_group(multiplicity_series(h, w.d, true, opt).m_prime, w.d, g);
}

WeightList weitzenbock_weights(const JordanShape& shape) {
  WeightList out;
  for (int c : shape.cells) {
    if (c < 1) throw_precondition("invalid Jordan shape", "cell sizes must be positive");
    for (int j = 0; j < c; ++j) out.push_back(Monomial::of({{VarId::x(1), c - 1 - j}, {VarId::x(2), j}}));
  }
  return out;
}

NiceRational weitzenbock_generating_function(const JordanShape& shape) {
  Monomial t = Monomial::of(VarId::t());
  std::vector<std::pair<Monomial, int>> den;
  for (const Monomial& a : weitzenbock_weights(shape)) den.emplace_back(a * t, 1);
  return NiceRational::over_binomials(1, den);
}

namespace {

NiceRational at_x_one(const NiceRational& m) {
  Substitution s;
  s.set_constant(VarId::x(1), 1);
  s.set_constant(VarId::x(2), 1);
  return reduce_binomials(specialize(m, s));
}

}  // namespace

NiceRational weitzenbock_hilbert(const JordanShape& shape, const OmegaOptions& opt) {
  if (shape.cells.empty()) throw_precondition("invalid Jordan shape", "no cells");
  return at_x_one(multiplicity_series(weitzenbock_generating_function(shape), 2, true, opt).m);
}

CyclotomicCheck cyclotomic_numerator_check(const NiceRational& f, int bound) {
  VarId t = VarId::t();
  Poly n = f.num();
  for (VarId v : n.variables())
    if (v != t) throw_precondition("numerator not univariate", n.to_string());
  CyclotomicCheck r;
  if (n.is_zero()) return r;
  n = n.mul_term(Monomial::of(t, -n.min_degree(t)));
  UPoly u = UPoly::from_poly(n, t);
  r.bound = bound > 0 ? bound : 2 * u.degree() + 4;
  for (int k = 1; k <= r.bound && u.degree() > 0; ++k) {
    UPoly phi = UPoly::cyclotomic(k);
    while (u.degree() >= phi.degree()) {
      auto [q, rem] = UPoly::divmod(u, phi);
      if (!rem.is_zero()) break;
      u = q;
    }
  }
  r.cyclotomic = u.degree() == 0;
  if (!r.cyclotomic) {
    // Products of cyclotomic polynomials are palindromic up to sign.
    bool pal = true, anti = true;
    for (int i = 0; i <= u.degree(); ++i) {
      pal = pal && u[i] == u[u.degree() - i];
      anti = anti && u[i] == -u[u.degree() - i];
    }
    r.bound_limited = pal || anti;
  }
  return r;
}

NiceRational tideal_product_hilbert(const NiceRational& h1, const NiceRational& h2, int d) {
  Poly s = -1;
  for (int i = 1; i <= d; ++i) s += Poly::var(VarId::x(i));
  return h1 + h2 + NiceRational(s) * h1 * h2;
}

NiceRational substitute_weights(const NiceRational& hfp, const WeightList& weights, int d) {
  int p = static_cast<int>(weights.size());
  for (VarId v : hfp.variables()) {
    bool ok = false;
    for (int j = 1; j <= p && !ok; ++j) ok = v == VarId::x(j);
    if (!ok) throw_precondition("weight count mismatch", v.name() + " has no weight among " + std::to_string(p));
  }
  Monomial t = Monomial::of(VarId::t());
  Substitution s;
  for (int j = 1; j <= p; ++j) {
    const Monomial& w = weights[static_cast<std::size_t>(j - 1)];
    for (const auto& [v, e] : w.entries()) {
      bool ok = false;
      for (int i = 1; i <= d && !ok; ++i) ok = v == VarId::x(i);
      if (!ok || e < 0) throw_precondition("invalid weight", monomial_to_string(w));
    }
    s.set(VarId::x(j), w * t);
  }
  return specialize(hfp, s);
}

NiceRational noncommutative_invariants(const NiceRational& hfp, const WeightList& weights, int d, Group g,
                                       const OmegaOptions& opt) {
  NiceRational f = substitute_weights(hfp, weights, d);
  if (!is_symmetric(f, d)) throw_precondition("substituted series not symmetric", f.to_string());
  return specialize_for_group(multiplicity_series(f, d, true, opt).m_prime, d, g);
}

NiceRational noncommutative_weitzenbock(const NiceRational& hf, const JordanShape& shape, const OmegaOptions& opt) {
  NiceRational f = substitute_weights(hf, weitzenbock_weights(shape), 2);
  if (!is_symmetric(f, 2)) throw_precondition("substituted series not symmetric", f.to_string());
  return at_x_one(multiplicity_series(f, 2, true, opt).m);
}

}  // namespace rsf
