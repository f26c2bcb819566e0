#include "omega_ring.hpp"

#include <algorithm>

#include "rsf/error.hpp"

namespace rsf::detail {

Rational binomial_coefficient(int q, int j) {
  Rational r = 1;
  for (int t = 0; t < j; ++t) {
    r *= Rational(q - t);
    r /= Rational(t + 1);
  }
  return r;
}

bool zpoly_is_zero(const ZPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const Poly& c) { return c.is_zero(); });
}

namespace {

void trim(ZPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

std::pair<ZPoly, ZPoly> zpoly_divmod(const ZPoly& a, const ZPoly& b) {
  ZPoly rem = a;
  trim(rem);
  ZPoly den = b;
  trim(den);
  if (den.empty()) throw_internal("division by zero", "zero divisor in z");
  const Poly& lead = den.back();
  if (!lead.is_monomial()) throw_internal("bad divisor", "leading coefficient in z is not a single term");
  Monomial lead_inv = lead.leading().mono.inverse();
  Rational lead_c = Rational(1) / lead.leading().coef;
  std::size_t db = den.size() - 1;
  if (rem.size() <= db) return {ZPoly{}, rem};
  ZPoly q(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    Poly c = rem[i].mul_term(lead_inv, lead_c);
    for (std::size_t j = 0; j <= db; ++j)
      if (!den[j].is_zero()) rem[i - db + j] -= c * den[j];
    q[i - db] = std::move(c);
  }
  trim(q);
  trim(rem);
  return {q, rem};
}

ZPoly zpoly_binomial_power(int n, const Monomial& rho, int e) {
  ZPoly base(static_cast<std::size_t>(n) + 1);
  base[0] = -Poly::monomial(rho);
  base[static_cast<std::size_t>(n)] = Poly(1);
  ZPoly r{Poly(1)};
  for (int i = 0; i < e; ++i) r = zpoly_mul(r, base);
  return r;
}

ZPoly zpoly_from(const Poly& p, VarId z, int shift) {
  ZPoly r;
  for (const auto& [e, c] : p.coefficients_in(z)) {
    int idx = e + shift;
    if (idx < 0) throw_internal("negative power of " + z.name(), p.to_string());
    if (r.size() <= static_cast<std::size_t>(idx)) r.resize(static_cast<std::size_t>(idx) + 1);
    r[static_cast<std::size_t>(idx)] = c;
  }
  return r;
}

Poly zpoly_to_poly(const ZPoly& p, VarId z, int shift) {
  Poly r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) r += p[i].mul_term(Monomial::of(z, static_cast<int>(i) - shift));
  return r;
}

std::vector<std::pair<Monomial, int>> to_factor_list(const BinomialDen& den) {
  return {den.begin(), den.end()};
}

BinomialRing::BinomialRing(VarId z, int n, Monomial rho, int e) : z_(z), n_(n), rho_(std::move(rho)), e_(e) {
  if (n <= 0 || e <= 0) throw_internal("bad ring", "n and E must be positive");
}

BinomialRing::Elem BinomialRing::zero() const {
  Elem r;
  r.c.resize(static_cast<std::size_t>(n_ * e_));
  return r;
}

BinomialRing::Elem BinomialRing::one() const { return z_power(0, Poly(1)); }

BinomialRing::Elem BinomialRing::z_power(int exp, const Poly& coef) const {
  Elem r = zero();
  if (coef.is_zero()) return r;
  // z^exp = z^i (rho + s)^q, exp = q n + i
  int i = ((exp % n_) + n_) % n_;
  int q = (exp - i) / n_;
  for (int j = 0; j < e_; ++j) {
    Rational b = binomial_coefficient(q, j);
    if (sgn(b) == 0) continue;
    at(r, j, i) = coef.mul_term(rho_.pow(q - j), b);
  }
  return r;
}

BinomialRing::Elem BinomialRing::from_z_poly(const std::map<int, Poly>& coeffs) const {
  Elem r = zero();
  for (const auto& [exp, coef] : coeffs) {
    int i = ((exp % n_) + n_) % n_;
    int q = (exp - i) / n_;
    for (int j = 0; j < e_; ++j) {
      Rational b = binomial_coefficient(q, j);
      if (sgn(b) == 0) continue;
      at(r, j, i) += coef.mul_term(rho_.pow(q - j), b);
    }
  }
  return r;
}

BinomialRing::Elem BinomialRing::mul(const Elem& a, const Elem& b) const {
  Elem r = zero();
  r.den = a.den;
  for (const auto& [m, k] : b.den) r.den[m] += k;
  const Poly rho = Poly::monomial(rho_);
  for (int j1 = 0; j1 < e_; ++j1)
    for (int i1 = 0; i1 < n_; ++i1) {
      const Poly& x = a.c[static_cast<std::size_t>(j1 * n_ + i1)];
      if (x.is_zero()) continue;
      for (int j2 = 0; j1 + j2 < e_; ++j2)
        for (int i2 = 0; i2 < n_; ++i2) {
          const Poly& y = b.c[static_cast<std::size_t>(j2 * n_ + i2)];
          if (y.is_zero()) continue;
          Poly p = x * y;
          int j = j1 + j2;
          int i = i1 + i2;
          if (i < n_) {
            at(r, j, i) += p;
          } else {
            // z^n = rho + s
            i -= n_;
            if (j + 1 < e_) at(r, j + 1, i) += p;
            at(r, j, i) += p.mul_term(rho_);
          }
        }
    }
  return r;
}

BinomialRing::Elem BinomialRing::add(const Elem& a, const Elem& b) const {
  BinomialDen lcm = a.den;
  for (const auto& [m, k] : b.den) lcm[m] = std::max(lcm[m], k);
  auto lift = [&lcm](const Elem& x, std::size_t idx) {
    Poly p = x.c[idx];
    if (p.is_zero()) return p;
    for (const auto& [m, k] : lcm) {
      auto it = x.den.find(m);
      int have = it == x.den.end() ? 0 : it->second;
      if (k > have) p = p.mul_one_minus(m, k - have);
    }
    return p;
  };
  Elem r = zero();
  r.den = lcm;
  for (std::size_t idx = 0; idx < r.c.size(); ++idx) r.c[idx] = lift(a, idx) + lift(b, idx);
  return r;
}

BinomialRing::Elem BinomialRing::pow(const Elem& a, int k) const {
  Elem r = one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

BinomialRing::Elem BinomialRing::scale(Elem a, const Poly& c) const {
  for (Poly& p : a.c)
    if (!p.is_zero()) p *= c;
  return a;
}

BinomialRing::Elem BinomialRing::inverse_one_minus(const Monomial& m, int k) const {
  if (k == 0) throw_internal("bad inverse", "factor is free of " + z_.name());
  // y = m z^k, y^n = kappa (1 + s/rho)^k
  Monomial kappa = m.pow(n_) * rho_.pow(k);
  if (kappa.is_one())
    throw_precondition("ambiguous factor", "factor (1-" + monomial_to_string(m * Monomial::of(z_, k)) +
                                               ") shares a root with the group of " + z_.name() + "^" +
                                               std::to_string(n_) + "-" + monomial_to_string(rho_));
  // delta = (1 + s/rho)^k - 1 as a series in s
  std::vector<Poly> delta(static_cast<std::size_t>(e_));
  for (int j = 1; j < e_; ++j)
    delta[static_cast<std::size_t>(j)] = Poly::monomial(rho_.pow(-j), binomial_coefficient(k, j));
  // 1/(1 - y^n) = sum_j kappa^j delta^j / (1 - kappa)^(j + 1)
  std::vector<Poly> acc(static_cast<std::size_t>(e_));
  std::vector<Poly> dpow(static_cast<std::size_t>(e_));
  dpow[0] = Poly(1);
  for (int j = 0; j < e_; ++j) {
    if (j > 0) {
      std::vector<Poly> next(static_cast<std::size_t>(e_));
      for (int a = 0; a < e_; ++a) {
        if (dpow[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 1; a + b < e_; ++b)
          next[static_cast<std::size_t>(a + b)] += dpow[static_cast<std::size_t>(a)] * delta[static_cast<std::size_t>(b)];
      }
      dpow = std::move(next);
    }
    Poly w = Poly::monomial(kappa.pow(j)).mul_one_minus(kappa, e_ - 1 - j);
    for (int a = 0; a < e_; ++a)
      if (!dpow[static_cast<std::size_t>(a)].is_zero()) acc[static_cast<std::size_t>(a)] += dpow[static_cast<std::size_t>(a)] * w;
  }
  Elem inv_n = zero();
  for (int j = 0; j < e_; ++j) at(inv_n, j, 0) = acc[static_cast<std::size_t>(j)];
  inv_n.den[kappa] = e_;
  // 1/(1 - y) = (1 + y + ... + y^(n-1)) / (1 - y^n)
  std::map<int, Poly> geo;
  for (int l = 0; l < n_; ++l) geo[k * l] += Poly::monomial(m.pow(l));
  return mul(from_z_poly(geo), inv_n);
}

NiceRational BinomialRing::value_at_one(const Elem& r) const {
  Poly num;
  for (int j = 0; j < e_; ++j) {
    Poly cj;
    for (int i = 0; i < n_; ++i) cj += r.c[static_cast<std::size_t>(j * n_ + i)];
    if (!cj.is_zero()) num += cj.mul_one_minus(rho_, j);
  }
  BinomialDen den = r.den;
  den[rho_] += e_;
  return NiceRational::over_binomials(std::move(num), to_factor_list(den));
}

ZPoly BinomialRing::representative(const Elem& r) const {
  ZPoly out;
  ZPoly spow{Poly(1)};
  ZPoly s = zpoly_binomial_power(n_, rho_, 1);
  for (int j = 0; j < e_; ++j) {
    ZPoly cj(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) cj[static_cast<std::size_t>(i)] = r.c[static_cast<std::size_t>(j * n_ + i)];
    out = zpoly_add(out, zpoly_mul(cj, spow));
    spow = zpoly_mul(spow, s);
  }
  return out;
}

}  // namespace rsf::detail
