#include "rsf/error.hpp"
#include "rsf/schur.hpp"

namespace rsf {

namespace {

Substitution swap_sub(VarId a, VarId b) {
  Substitution s;
  s.set(a, Monomial::of(b));
  s.set(b, Monomial::of(a));
  return s;
}

Monomial staircase(int d) {
  Monomial m;
  for (int i = 1; i < d; ++i) m.set(VarId::x(i), d - i);
  return m;
}

}  // namespace

bool is_symmetric(const NiceRational& f, int d) {
  for (int i = 1; i < d; ++i)
    if (!nr_equal(f, specialize(f, swap_sub(VarId::x(i), VarId::x(i + 1))))) return false;
  return true;
}

NiceRational to_v_variables(const NiceRational& m, int d) {
  Substitution s;
  for (int i = 1; i <= d; ++i) {
    Monomial img = Monomial::of(VarId::v(i));
    if (i > 1) img *= Monomial::of(VarId::v(i - 1), -1);
    s.set(VarId::x(i), img);
  }
  return specialize(m, s);
}

NiceRational to_x_variables(const NiceRational& mp, int d) {
  Substitution s;
  Monomial acc;
  for (int i = 1; i <= d; ++i) {
    acc *= Monomial::of(VarId::x(i));
    s.set(VarId::v(i), acc);
  }
  return specialize(mp, s);
}

MultiplicitySeries multiplicity_series(const NiceRational& f, int d, bool graded, const OmegaOptions& opt) {
  if (d < 1) throw_precondition("invalid dimension", "d must be positive");
  for (VarId v : f.variables()) {
    bool is_x = false;
    for (int i = 1; i <= d && !is_x; ++i) is_x = v == VarId::x(i);
    if (is_x) continue;
    if (graded && v == VarId::t()) continue;
    throw_precondition("unexpected variable", v.name() + " in a series over x1..x" + std::to_string(d) +
                                                  (graded ? " and t" : ""));
  }
  if (!is_symmetric(f, d)) throw_precondition("input not symmetric", f.to_string());

  MultiplicitySeries out;
  if (d == 1) {
    out.m = f;
    out.m_prime = to_v_variables(f, 1);
    return out;
  }
  NiceRational g = f * NiceRational(vandermonde_product(d));
  Substitution s;
  std::vector<VarId> zs;
  for (int i = 1; i <= d; ++i) {
    Monomial img = Monomial::of(VarId::x(i));
    if (i > 1) img *= Monomial::of(VarId::z(i - 1), -1);
    if (i < d) img *= Monomial::of(VarId::z(i));
    s.set(VarId::x(i), img);
    if (i < d) zs.push_back(VarId::z(i));
  }
  NiceRational h = omega_geq(specialize(g, s), zs, opt);
  NiceRational m = h * NiceRational(Poly::monomial(staircase(d).inverse()));
  if (!m.is_nice()) throw_internal("staircase division failed", m.to_string());
  out.m = m;
  out.m_prime = to_v_variables(m, d);
  if (!out.m_prime.is_nice()) throw_internal("non-nice multiplicity series", out.m_prime.to_string());
  return out;
}

bool verify_multiplicity(const NiceRational& f, const NiceRational& h, int d) {
  if (d < 1) throw_precondition("invalid dimension", "d must be positive");
  NiceRational lhs = f * NiceRational(vandermonde_product(d));
  // sum over S_d of sign * permuted(x^delta h), built as T_2 ... T_d with
  // T_j = 1 - sum_{i<j} (i j)
  NiceRational acc = h * NiceRational(Poly::monomial(staircase(d)));
  for (int j = d; j >= 2; --j) {
    std::vector<NiceRational> parts{acc};
    for (int i = 1; i < j; ++i) parts.push_back(-specialize(acc, swap_sub(VarId::x(i), VarId::x(j))));
    acc = sum_all(std::move(parts));
  }
  return nr_equal(lhs, acc);
}

}  // namespace rsf
