#include "rsf/nice_rational.hpp"

#include <algorithm>
#include <optional>

#include "rsf/error.hpp"

namespace rsf {

namespace {

// Sign of the first nonzero exponent among variables selected by `want_z`,
// scanned in display order.
int first_sign(const Monomial& m, bool want_z) {
  for (VarId v : display_order()) {
    if (v.is_z() != want_z) continue;
    int e = m[v];
    if (e != 0) return e > 0 ? 1 : -1;
  }
  return 0;
}

// True when (1 - m) should be rewritten as -m (1 - m^-1).
bool needs_flip(const Monomial& m) {
  int d = m.nonz_degree();
  if (d != 0) return d < 0;
  int s = first_sign(m, false);
  if (s != 0) return s < 0;
  return first_sign(m, true) < 0;
}

Poly multiply_by_factor(const Poly& p, const BinomialFactor& f, int power) {
  if (power <= 0 || p.is_zero()) return p;
  if (f.is_standard()) return p.mul_one_minus(f.mono, power);
  return p * f.expand().pow(power);
}

Poly multiply_by_den(Poly p, const Denominator& den) {
  for (const auto& [f, k] : den) p = multiply_by_factor(p, f, k);
  return p;
}

// Truncated 1/(1-m) = sum of m^k with k * nonz_degree(m) <= bound.
Poly geometric(const Monomial& m, int bound) {
  int d = m.nonz_degree();
  std::vector<Term> terms;
  Monomial cur;
  for (int k = 0; k * d <= bound; ++k) {
    terms.push_back(Term{cur, Rational(1)});
    cur *= m;
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace

BinomialFactor BinomialFactor::standard(const Monomial& m) {
  if (m.is_one()) throw_precondition("degenerate binomial", "factor (1-1) is identically zero");
  BinomialFactor f;
  f.kind = Kind::Standard;
  f.mono = m;
  return f;
}

BinomialFactor BinomialFactor::pivoted(VarId z, int zexp, const Monomial& c) {
  if (zexp <= 0) throw_internal("bad pivoted factor", "z exponent must be positive");
  if (c.involves(z)) throw_internal("bad pivoted factor", "constant part involves " + z.name());
  BinomialFactor f;
  f.kind = Kind::Pivoted;
  f.mono = c;
  f.zvar = z;
  f.zexp = zexp;
  return f;
}

Poly BinomialFactor::expand() const {
  if (is_standard()) return Poly(1) - Poly::monomial(mono);
  return Poly::monomial(Monomial::of(zvar, zexp)) - Poly::monomial(mono);
}

std::string BinomialFactor::to_string() const { return factor_to_string(*this, 1); }

bool operator==(const BinomialFactor& a, const BinomialFactor& b) {
  return a.kind == b.kind && a.mono == b.mono && a.zvar == b.zvar && a.zexp == b.zexp;
}

bool operator<(const BinomialFactor& a, const BinomialFactor& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  int c = Monomial::compare(a.mono, b.mono);
  if (c != 0) return c < 0;
  if (a.zvar != b.zvar) return a.zvar < b.zvar;
  return a.zexp < b.zexp;
}

NiceRational::NiceRational(Poly num) : num_(std::move(num)) {}

NiceRational::NiceRational(long c) : num_(c) {}

NiceRational::NiceRational(Poly num, const Denominator& den) : num_(std::move(num)) {
  for (const auto& [f, k] : den) absorb_factor(f, k);
  normalize();
}

NiceRational NiceRational::over_binomials(Poly num, const std::vector<std::pair<Monomial, int>>& den) {
  NiceRational r;
  r.num_ = std::move(num);
  for (const auto& [m, k] : den) r.absorb_factor(BinomialFactor::standard(m), k);
  r.normalize();
  return r;
}

void NiceRational::absorb_factor(const BinomialFactor& f, int power) {
  if (power == 0) return;
  if (power < 0) {
    num_ = multiply_by_factor(num_, f, -power);
    return;
  }
  if (f.is_standard()) {
    if (f.mono.is_one()) throw_precondition("degenerate binomial", "factor (1-1) is identically zero");
    if (needs_flip(f.mono)) {
      // 1/(1-m)^k = (-1)^k m^-k / (1-m^-1)^k
      num_ = num_.mul_term(f.mono.pow(-power), (power % 2 == 0) ? Rational(1) : Rational(-1));
      den_[BinomialFactor::standard(f.mono.inverse())] += power;
      return;
    }
  }
  den_[f] += power;
}

void NiceRational::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    auto& [f, k] = *it;
    while (k > 0) {
      std::optional<Poly> q;
      if (f.is_standard()) {
        q = num_.div_one_minus(f.mono);
      } else {
        // z^c - C = z^c (1 - C z^-c)
        Monomial m = f.mono / Monomial::of(f.zvar, f.zexp);
        q = num_.div_one_minus(m);
        if (q) *q = q->mul_term(Monomial::of(f.zvar, -f.zexp));
      }
      if (!q) break;
      num_ = std::move(*q);
      --k;
    }
    if (k == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

Poly NiceRational::expanded_den() const { return multiply_by_den(Poly(1), den_); }

int NiceRational::den_size() const {
  int n = 0;
  for (const auto& [f, k] : den_) n += k;
  return n;
}

bool NiceRational::involves(VarId v) const {
  if (num_.involves(v)) return true;
  for (const auto& [f, k] : den_)
    if (f.mono.involves(v) || (!f.is_standard() && f.zvar == v)) return true;
  return false;
}

std::vector<VarId> NiceRational::variables() const {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < var_count(); ++i) {
    VarId v = var_from_index(i);
    if (involves(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), display_less);
  return out;
}

bool NiceRational::is_nice() const {
  if (num_.has_negative_nonz()) return false;
  for (const auto& [f, k] : den_) {
    if (!f.is_standard()) return false;
    if (f.mono.has_negative_nonz() || f.mono.nonz_degree() <= 0) return false;
  }
  return true;
}

NiceRational NiceRational::operator-() const {
  NiceRational r = *this;
  r.num_ = -r.num_;
  return r;
}

NiceRational operator*(const NiceRational& a, const NiceRational& b) {
  if (a.is_zero() || b.is_zero()) return NiceRational();
  NiceRational r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& [f, k] : b.den_) r.den_[f] += k;
  r.normalize();
  return r;
}

NiceRational operator+(const NiceRational& a, const NiceRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Denominator lcm = a.den_;
  for (const auto& [f, k] : b.den_) {
    int& cur = lcm[f];
    cur = std::max(cur, k);
  }
  auto cofactor = [&lcm](const Denominator& d) {
    Denominator c;
    for (const auto& [f, k] : lcm) {
      auto it = d.find(f);
      int have = it == d.end() ? 0 : it->second;
      if (k > have) c[f] = k - have;
    }
    return c;
  };
  NiceRational r;
  r.num_ = multiply_by_den(a.num_, cofactor(a.den_)) + multiply_by_den(b.num_, cofactor(b.den_));
  r.den_ = std::move(lcm);
  r.normalize();
  return r;
}

NiceRational operator-(const NiceRational& a, const NiceRational& b) { return a + (-b); }

NiceRational reduce_binomials(const NiceRational& f) {
  Poly num = f.num();
  Denominator den = f.den();
  for (;;) {
    std::optional<std::pair<BinomialFactor, Monomial>> step;
    for (const auto& [fac, k] : den) {
      if (!fac.is_standard()) continue;
      int g = fac.mono.content_gcd();
      for (int h = 1; h < g && !step; ++h) {
        if (g % h != 0) continue;
        // (1 - r^g) / (1 - r^h) divides num iff (1 - r^g) divides num * (1 - r^h).
        Monomial low = fac.mono.root(g).pow(h);
        auto q = num.mul_one_minus(low).div_one_minus(fac.mono);
        if (!q) continue;
        num = std::move(*q);
        step.emplace(fac, low);
      }
      if (step) break;
    }
    if (!step) break;
    if (--den[step->first] == 0) den.erase(step->first);
    den[BinomialFactor::standard(step->second)] += 1;
  }
  return NiceRational(std::move(num), den);
}

NiceRational sum_all(std::vector<NiceRational> terms) {
  if (terms.empty()) return NiceRational();
  while (terms.size() > 1) {
    std::vector<NiceRational> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return std::move(terms.front());
}

bool nr_equal(const NiceRational& f, const NiceRational& g) {
  if (f.den() == g.den()) return f.num() == g.num();
  Denominator only_f, only_g;
  for (const auto& [fac, k] : f.den()) {
    auto it = g.den().find(fac);
    int other = it == g.den().end() ? 0 : it->second;
    if (k > other) only_f[fac] = k - other;
  }
  for (const auto& [fac, k] : g.den()) {
    auto it = f.den().find(fac);
    int other = it == f.den().end() ? 0 : it->second;
    if (k > other) only_g[fac] = k - other;
  }
  return multiply_by_den(f.num(), only_g) == multiply_by_den(g.num(), only_f);
}

Poly series_truncate(const NiceRational& f, int n) {
  if (n < 0) throw_precondition("negative truncation degree", std::to_string(n));
  if (f.is_zero()) return Poly();
  // 1/(z^c - C) = z^-c / (1 - C z^-c), so pivoted factors contribute a z-shift.
  Monomial shift;
  for (const auto& [fac, k] : f.den())
    if (!fac.is_standard()) shift *= Monomial::of(fac.zvar, -fac.zexp * k);
  int bound = n - f.num().min_nonz_degree();
  if (bound < 0) return Poly();
  Poly s(1);
  for (const auto& [fac, k] : f.den()) {
    Monomial ratio = fac.is_standard() ? fac.mono : fac.mono / Monomial::of(fac.zvar, fac.zexp);
    if (ratio.nonz_degree() <= 0) throw_precondition("non-expandable factor", factor_to_string(fac, k));
    Poly g = geometric(ratio, bound);
    for (int i = 0; i < k; ++i) s = Poly::mul_truncated(s, g, bound);
  }
  s = s.mul_term(shift);
  return Poly::mul_truncated(f.num(), s, n);
}

NiceRational specialize(const NiceRational& f, const Substitution& s) {
  Poly num = f.num().substitute(s);
  Denominator den;
  Rational scale = 1;
  for (const auto& [fac, k] : f.den()) {
    auto pole = [&] { throw_precondition("pole under specialization", factor_to_string(fac, k) + " vanishes"); };
    auto non_binomial = [&] {
      throw_precondition("non-binomial factor under specialization", factor_to_string(fac, k));
    };
    if (fac.is_standard()) {
      auto [c, m] = s.apply(fac.mono);
      if (sgn(c) == 0) continue;
      if (m.is_one()) {
        Rational v = 1 - c;
        if (sgn(v) == 0) pole();
        scale /= rational_pow(v, k);
        continue;
      }
      if (c != 1) non_binomial();
      den[BinomialFactor::standard(m)] += k;
      continue;
    }
    auto [c1, m1] = s.apply(Monomial::of(fac.zvar, fac.zexp));
    auto [c2, m2] = s.apply(fac.mono);
    bool z1 = sgn(c1) == 0, z2 = sgn(c2) == 0;
    if (z1 && z2) pole();
    if (z1 || z2 || m1 == m2) {
      // The factor is a single term.
      Rational c = z1 ? Rational(-c2) : z2 ? c1 : Rational(c1 - c2);
      Monomial m = z1 ? m2 : m1;
      if (sgn(c) == 0) pole();
      scale /= rational_pow(c, k);
      num = num.mul_term(m.pow(-k));
      continue;
    }
    if (c1 != c2) non_binomial();
    // c1 m1 - c1 m2 = c1 m1 (1 - m2/m1)
    scale /= rational_pow(c1, k);
    num = num.mul_term(m1.pow(-k));
    den[BinomialFactor::standard(m2 / m1)] += k;
  }
  num *= scale;
  return NiceRational(std::move(num), den);
}

}  // namespace rsf
