#include "rsf/omega.hpp"

#include <cstdlib>
#include <numeric>

#include "omega_ring.hpp"
#include "rsf/error.hpp"
#include "rsf/upoly.hpp"

namespace rsf {

using detail::BinomialRing;
using detail::ZPoly;

namespace {

// Factors sharing the primitive monomial u, combined into (z^n - rho)^E.
// The members (g, e) stand for (1 - v^g)^e up to units, where v = B z^k with
// k > 0 (v = u for contributing groups, v = 1/u otherwise).
struct Group {
  Monomial v;
  bool contributing = false;
  int k = 0;
  int n = 0;
  int e = 0;
  int lcm = 1;
  Monomial rho;
  std::vector<std::pair<int, int>> members;
};

// f = num / (d0 * prod (z^n - rho)^E), num Laurent in z.
struct ZDecomposition {
  VarId z;
  Poly num;
  Denominator d0;
  std::vector<Group> groups;
};

ZDecomposition decompose(const NiceRational& f, VarId z) {
  ZDecomposition dec;
  dec.z = z;
  dec.num = f.num();
  std::map<Monomial, std::vector<std::pair<int, int>>, detail::MonomialLess> by_root;
  for (const auto& [fac, e] : f.den()) {
    Monomial w = fac.mono;
    if (!fac.is_standard()) {
      // 1/(zv^c - C)^e = zv^(-ce) / (1 - C zv^-c)^e
      dec.num = dec.num.mul_term(Monomial::of(fac.zvar, -fac.zexp * e));
      w = fac.mono / Monomial::of(fac.zvar, fac.zexp);
    }
    if (w[z] == 0) {
      if (fac.is_standard())
        dec.d0[fac] += e;
      else
        dec.d0[BinomialFactor::standard(w)] += e;
      continue;
    }
    if (w.nonz_degree() <= 0)
      throw_precondition("ambiguous factor",
                         "(1-" + monomial_to_string(w) + ") carries " + z.name() + " but no non-elimination growth");
    int g = w.content_gcd();
    by_root[w.root(g)].emplace_back(g, e);
  }
  for (auto& [u, members] : by_root) {
    Group grp;
    grp.members = members;
    grp.contributing = u[z] > 0;
    grp.k = std::abs(u[z]);
    Monomial a = u.without(z);
    Poly cof(1);
    for (const auto& [g, e] : members) {
      grp.lcm = std::lcm(grp.lcm, g);
      grp.e += e;
    }
    for (const auto& [g, e] : members) {
      std::vector<Term> terms;
      for (int j = 0; j < grp.lcm / g; ++j) terms.push_back(Term{u.pow(g * j), Rational(1)});
      cof *= Poly::from_terms(std::move(terms)).pow(e);
    }
    grp.n = grp.k * grp.lcm;
    int big_l = grp.lcm;
    if (grp.contributing) {
      // 1 - u^L = -A^L (z^n - A^-L)
      grp.v = u;
      grp.rho = a.pow(-big_l);
      cof = cof.mul_term(a.pow(-big_l * grp.e), grp.e % 2 == 0 ? Rational(1) : Rational(-1));
    } else {
      // 1 - u^L = z^-n (z^n - A^L)
      grp.v = a.inverse() * Monomial::of(z, grp.k);
      grp.rho = a.pow(big_l);
      cof = cof.mul_term(Monomial::of(z, grp.n * grp.e));
    }
    dec.num *= cof;
    dec.groups.push_back(std::move(grp));
  }
  return dec;
}

// Quotient and remainder of num * z^a by prod (z^n - rho)^E.
struct PolynomialSplit {
  int shift = 0;
  ZPoly quotient;
  ZPoly remainder;
  ZPoly den;
};

PolynomialSplit split_polynomial_part(const ZDecomposition& dec) {
  PolynomialSplit ps;
  ps.shift = std::max(0, -dec.num.min_degree(dec.z));
  ps.den = ZPoly{Poly(1)};
  for (const Group& g : dec.groups) ps.den = detail::zpoly_mul(ps.den, detail::zpoly_binomial_power(g.n, g.rho, g.e));
  ZPoly m = detail::zpoly_from(dec.num, dec.z, ps.shift);
  auto [q, r] = detail::zpoly_divmod(m, ps.den);
  ps.quotient = std::move(q);
  ps.remainder = std::move(r);
  return ps;
}

// Sum of the coefficients of the quotient terms with nonnegative z-exponent.
Poly polynomial_part_at_one(const ZDecomposition& dec) {
  std::map<int, Poly> coeffs = dec.num.coefficients_in(dec.z);
  if (coeffs.empty()) return Poly();
  int shift = std::max(0, -coeffs.begin()->first);
  int top = coeffs.rbegin()->first + shift;
  int dd = 0;
  for (const Group& g : dec.groups) dd += g.n * g.e;
  if (top < dd || coeffs.rbegin()->first < 0) return Poly();
  PolynomialSplit ps = split_polynomial_part(dec);
  Poly r;
  for (std::size_t t = static_cast<std::size_t>(ps.shift); t < ps.quotient.size(); ++t) r += ps.quotient[t];
  return r;
}

// Principal part of the decomposition at group `gi`, as a ring element.
BinomialRing::Elem group_part(const ZDecomposition& dec, std::size_t gi, const BinomialRing& ring) {
  BinomialRing::Elem inv = ring.one();
  for (std::size_t h = 0; h < dec.groups.size(); ++h) {
    if (h == gi) continue;
    const Group& o = dec.groups[h];
    // 1/(z^n - rho) = -rho^-1 / (1 - rho^-1 z^n)
    Monomial rinv = o.rho.inverse();
    BinomialRing::Elem x = ring.scale(ring.inverse_one_minus(rinv, o.n), Poly::monomial(rinv, -1));
    inv = ring.mul(inv, ring.pow(x, o.e));
  }
  return ring.mul(ring.from_z_poly(dec.num.coefficients_in(dec.z)), inv);
}

NiceRational divide_by(const NiceRational& f, const Denominator& d0) {
  if (d0.empty()) return f;
  return f * NiceRational(Poly(1), d0);
}

void check_eliminated(const NiceRational& r, VarId z) {
  if (r.involves(z)) throw_internal("z in numerator after elimination", z.name() + " remains in " + r.to_string());
  if (!r.is_nice()) throw_internal("non-nice elimination result", r.to_string());
}

NiceRational omega_single_pf(const NiceRational& f, VarId z) {
  if (!f.involves(z)) return f;
  ZDecomposition dec = decompose(f, z);
  std::vector<NiceRational> parts;
  parts.emplace_back(polynomial_part_at_one(dec));
  for (std::size_t gi = 0; gi < dec.groups.size(); ++gi) {
    const Group& g = dec.groups[gi];
    if (!g.contributing) continue;
    BinomialRing ring(z, g.n, g.rho, g.e);
    parts.push_back(ring.value_at_one(group_part(dec, gi, ring)));
  }
  NiceRational r = divide_by(sum_all(std::move(parts)), dec.d0);
  check_eliminated(r, z);
  return r;
}

UPoly psi(int j) {
  // Psi_1 = 1 - v, Psi_j = Phi_j otherwise, so that prod_{j | L} Psi_j = 1 - v^L.
  if (j == 1) return UPoly(std::vector<Rational>{Rational(1), Rational(-1)});
  return UPoly::cyclotomic(j);
}

// u(v) as a polynomial in z, with v = b z^k.
ZPoly substitute_v(const UPoly& p, const Monomial& b, int k) {
  ZPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (sgn(p[i]) == 0) continue;
    std::size_t idx = static_cast<std::size_t>(i * k);
    if (r.size() <= idx) r.resize(idx + 1);
    r[idx] += Poly::monomial(b.pow(i), p[i]);
  }
  return r;
}

Denominator to_denominator(const detail::BinomialDen& den) {
  Denominator d;
  for (const auto& [m, k] : den) d[BinomialFactor::standard(m)] += k;
  return d;
}

}  // namespace

long default_rewrite_budget() {
  if (const char* s = std::getenv("RSF_REWRITE_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

NiceRational pivot_z_form(const NiceRational& f, VarId z) {
  Poly num = f.num();
  Denominator den;
  for (const auto& [fac, e] : f.den()) {
    if (fac.is_standard() && fac.mono[z] < 0) {
      // 1/(1 - B z^-b) = z^b / (z^b - B)
      int b = -fac.mono[z];
      num = num.mul_term(Monomial::of(z, b * e));
      den[BinomialFactor::pivoted(z, b, fac.mono.without(z))] += e;
    } else {
      den[fac] += e;
    }
  }
  return NiceRational(std::move(num), den);
}

std::vector<ZPartialFractionTerm> partial_fractions_z(const NiceRational& f, VarId z) {
  using Kind = ZPartialFractionTerm::Kind;
  std::vector<ZPartialFractionTerm> out;
  if (f.is_zero()) return out;
  NiceRational pf = pivot_z_form(f, z);
  ZDecomposition dec = decompose(pf, z);
  NiceRational inv_d0 = NiceRational(Poly(1), dec.d0);

  PolynomialSplit ps = split_polynomial_part(dec);
  // Nonnegative and negative powers of quotient * z^-shift.
  Poly poly_part, neg_part;
  for (std::size_t t = 0; t < ps.quotient.size(); ++t) {
    Poly term = ps.quotient[t].mul_term(Monomial::of(z, static_cast<int>(t) - ps.shift));
    if (static_cast<int>(t) >= ps.shift)
      poly_part += term;
    else
      neg_part += term;
  }
  // Principal part at z = 0 of remainder * z^-shift / den.
  if (ps.shift > 0 && !detail::zpoly_is_zero(ps.remainder)) {
    const Poly& d0c = ps.den[0];
    Monomial c0inv = d0c.leading().mono.inverse();
    Rational c0 = Rational(1) / d0c.leading().coef;
    std::size_t a = static_cast<std::size_t>(ps.shift);
    ZPoly inv(a);
    inv[0] = Poly::monomial(c0inv, c0);
    for (std::size_t t = 1; t < a; ++t) {
      Poly acc;
      for (std::size_t l = 1; l <= t && l < ps.den.size(); ++l) acc += ps.den[l] * inv[t - l];
      inv[t] = -acc.mul_term(c0inv, c0);
    }
    ZPoly series = detail::zpoly_mul(ps.remainder, inv);
    for (std::size_t t = 0; t < a && t < series.size(); ++t)
      neg_part += series[t].mul_term(Monomial::of(z, static_cast<int>(t) - ps.shift));
  }
  if (!poly_part.is_zero()) {
    ZPartialFractionTerm t;
    t.kind = Kind::PolynomialPart;
    t.value = NiceRational(poly_part) * inv_d0;
    t.numerator = t.value;
    out.push_back(std::move(t));
  }
  if (!neg_part.is_zero()) {
    ZPartialFractionTerm t;
    t.kind = Kind::PureNegativePower;
    t.value = NiceRational(neg_part) * inv_d0;
    t.numerator = t.value;
    out.push_back(std::move(t));
  }

  for (std::size_t gi = 0; gi < dec.groups.size(); ++gi) {
    const Group& g = dec.groups[gi];
    BinomialRing ring(z, g.n, g.rho, g.e);
    BinomialRing::Elem part = group_part(dec, gi, ring);
    ZPoly rep = ring.representative(part);
    ZPoly q = detail::zpoly_binomial_power(g.n, g.rho, g.e);
    Monomial b = g.v.without(z);

    // Exponent of each Psi_j(v) in the group denominator.
    std::map<int, int> exps;
    for (int j = 1; j <= g.lcm; ++j) {
      if (g.lcm % j != 0) continue;
      int ej = 0;
      for (const auto& [gg, e] : g.members)
        if (gg % j == 0) ej += e;
      if (ej > 0) exps[j] = ej;
    }
    for (const auto& [j, ej] : exps) {
      UPoly others = UPoly::constant(1);
      for (const auto& [l, el] : exps)
        if (l != j) others = others * psi(l).pow(el);
      UPoly piece = psi(j).pow(ej);
      UPoly gcd, s, tt;
      UPoly::extended_gcd(others, piece, gcd, s, tt);
      UPoly idem = s * others;
      ZPoly x = detail::zpoly_divmod(detail::zpoly_mul(rep, substitute_v(idem, b, g.k)), q).second;
      auto [pj, rem] = detail::zpoly_divmod(detail::zpoly_mul(x, substitute_v(piece, b, g.k)), q);
      if (!detail::zpoly_is_zero(rem)) throw_internal("partial fraction refinement failed", "inexact piece");

      // 1/Psi_j^e = (prod_{l | j, l < j} Psi_l)^e / (1 - v^j)^e
      UPoly lower = UPoly::constant(1);
      for (int l = 1; l < j; ++l)
        if (j % l == 0) lower = lower * psi(l);
      Poly num = detail::zpoly_to_poly(detail::zpoly_mul(pj, substitute_v(lower.pow(ej), b, g.k)), z);
      Denominator den = to_denominator(part.den);
      den[BinomialFactor::standard(g.v.pow(j))] += ej;

      ZPartialFractionTerm t;
      t.kind = g.contributing ? Kind::ContributingFraction : Kind::DiscardedFraction;
      t.value = NiceRational(std::move(num), den) * inv_d0;
      if (g.contributing) {
        t.basis = detail::zpoly_to_poly(substitute_v(psi(j), b, g.k), z);
      } else {
        // b^-deg Phi_j(v) with v = b z^k is a polynomial in z with monic top term.
        UPoly phi = UPoly::cyclotomic(j);
        t.basis = detail::zpoly_to_poly(substitute_v(phi, b, g.k), z).mul_term(b.pow(-phi.degree()));
      }
      t.power = ej;
      t.numerator = t.value * NiceRational(t.basis.pow(ej));
      if (!t.value.is_zero()) out.push_back(std::move(t));
    }
  }

  std::vector<NiceRational> values;
  for (const auto& t : out) values.push_back(t.value);
  if (!nr_equal(sum_all(std::move(values)), f))
    throw_internal("partial fraction reconstruction failed", f.to_string());
  return out;
}

Poly omega_series_oracle(const NiceRational& f, const std::vector<VarId>& zs, int degree) {
  Poly s = series_truncate(f, degree);
  std::vector<Term> kept;
  Substitution ones;
  for (VarId z : zs) ones.set_constant(z, 1);
  for (const Term& t : s.terms()) {
    bool ok = true;
    for (VarId z : zs)
      if (t.mono[z] < 0) ok = false;
    if (ok) kept.push_back(t);
  }
  return Poly::from_terms(std::move(kept)).substitute(ones);
}

NiceRational omega_geq(const NiceRational& f, const std::vector<VarId>& zs, const OmegaOptions& opt) {
  NiceRational r = f;
  if (opt.strategy == OmegaStrategy::Elliott)
    r = elliott_reduce(f, zs, opt.rewrite_budget);
  else
    for (VarId z : zs) r = omega_single_pf(r, z);
  if (opt.oracle_check) {
    Poly expect = omega_series_oracle(f, zs, opt.oracle_degree);
    Poly got = series_truncate(r, opt.oracle_degree);
    if (expect != got)
      throw_internal("series oracle mismatch", "Omega result disagrees with the truncated expansion to degree " +
                                                   std::to_string(opt.oracle_degree));
  }
  return r;
}

NiceRational omega_eq0(const NiceRational& f, VarId z, const OmegaOptions& opt) {
  NiceRational shifted = f * NiceRational(Poly::monomial(Monomial::of(z, -1)));
  return omega_geq(f, {z}, opt) - omega_geq(shifted, {z}, opt);
}

}  // namespace rsf
