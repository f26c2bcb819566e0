#include "rsf/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "rsf/error.hpp"

namespace rsf {

namespace {

bool term_before(const Term& a, const Term& b) { return Monomial::compare(a.mono, b.mono) > 0; }

/// Merges two canonical term lists, adding coefficients of equal monomials.
std::vector<Term> merge_add(std::vector<Term>&& a, std::vector<Term>&& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = Monomial::compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(std::move(a[i++]));
    } else if (c < 0) {
      out.push_back(std::move(b[j++]));
    } else {
      a[i].coef += b[j].coef;
      if (sgn(a[i].coef) != 0) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

std::vector<Term> shifted(const std::vector<Term>& src, const Monomial& m, const Rational& c) {
  std::vector<Term> out;
  out.reserve(src.size());
  for (const Term& t : src) out.push_back(Term{t.mono * m, t.coef * c});
  return out;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Substitution

Substitution& Substitution::set(VarId v, Monomial mono, Rational scale) {
  for (auto& [w, img] : entries_) {
    if (w == v) {
      img = MonomialImage{std::move(mono), std::move(scale)};
      return *this;
    }
  }
  entries_.emplace_back(v, MonomialImage{std::move(mono), std::move(scale)});
  return *this;
}

Substitution& Substitution::set_constant(VarId v, Rational value) {
  return set(v, Monomial(), std::move(value));
}

const MonomialImage* Substitution::find(VarId v) const {
  for (const auto& [w, img] : entries_)
    if (w == v) return &img;
  return nullptr;
}

std::pair<Rational, Monomial> Substitution::apply(const Monomial& m) const {
  Rational scale = 1;
  Monomial mono = m;
  for (const auto& [v, img] : entries_) {
    int e = m[v];
    if (e == 0) continue;
    mono.set(v, mono[v] - e);
    if (!img.mono.is_one()) mono *= img.mono.pow(e);
    if (img.scale != 1) {
      if (sgn(img.scale) == 0 && e < 0)
        throw_precondition("division by zero", "negative power of " + v.name() + " mapped to 0");
      scale *= rational_pow(img.scale, e);
    }
  }
  return {scale, mono};
}

// ---------------------------------------------------------------------------
// Poly basics

Poly::Poly(long c) {
  if (c != 0) terms_.push_back(Term{Monomial(), Rational(c)});
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial(), c});
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Poly Poly::var(VarId v, int e) { return monomial(Monomial::of(v, e)); }

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_term() const { return coefficient(Monomial()); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) {
    return Monomial::compare(t.mono, k) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> b = o.terms_;
  terms_ = merge_add(std::move(terms_), std::move(b));
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> b = o.terms_;
  for (auto& t : b) t.coef = -t.coef;
  terms_ = merge_add(std::move(terms_), std::move(b));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.mul_term(small.terms_[0].mono, small.terms_[0].coef);
  // Tree merge of the shifted copies of the larger operand.
  std::vector<std::vector<Term>> lists;
  lists.reserve(small.size());
  for (const Term& t : small.terms_) lists.push_back(shifted(big.terms_, t.mono, t.coef));
  while (lists.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((lists.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < lists.size(); i += 2)
      next.push_back(merge_add(std::move(lists[i]), std::move(lists[i + 1])));
    if (lists.size() % 2 == 1) next.push_back(std::move(lists.back()));
    lists = std::move(next);
  }
  Poly r;
  r.terms_ = std::move(lists.front());
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw_internal("negative polynomial power", std::to_string(k));
  Poly result(1L), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly r;
  if (sgn(c) == 0) return r;
  r.terms_ = shifted(terms_, m, c);
  return r;
}

Poly Poly::mul_one_minus(const Monomial& m) const {
  if (m.is_one()) throw_precondition("degenerate binomial", "1 - 1");
  std::vector<Term> a = terms_;
  std::vector<Term> b = shifted(terms_, m, Rational(-1));
  Poly r;
  r.terms_ = merge_add(std::move(a), std::move(b));
  return r;
}

Poly Poly::mul_one_minus(const Monomial& m, int k) const {
  Poly r = *this;
  for (int i = 0; i < k; ++i) r = r.mul_one_minus(m);
  return r;
}

std::optional<Poly> Poly::div_one_minus(const Monomial& m) const {
  if (m.is_one()) throw_precondition("degenerate binomial", "1 - 1");
  if (terms_.empty()) return Poly();
  // The Laurent ring modulo (1 - m) is the group algebra of Z^n / <m>, so
  // divisibility holds iff every coset of <m> has zero coefficient sum; the
  // quotient on a coset is given by partial sums along the progression.
  std::size_t pivot = 0;
  while (m.at(pivot) == 0) ++pivot;
  const long mp = m.at(pivot);
  struct Entry {
    long k;
    const Rational* coef;
  };
  std::unordered_map<Monomial, std::vector<Entry>, MonomialHash> cosets;
  cosets.reserve(terms_.size());
  for (const Term& t : terms_) {
    long k = floor_div(t.mono.at(pivot), mp);
    Monomial rep = t.mono / m.pow(static_cast<int>(k));
    cosets[rep].push_back(Entry{k, &t.coef});
  }
  std::vector<Term> out;
  for (auto& [rep, entries] : cosets) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.k < b.k; });
    Rational running = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      running += *entries[i].coef;
      long next = (i + 1 < entries.size()) ? entries[i + 1].k : entries[i].k + 1;
      if (sgn(running) == 0) continue;
      if (i + 1 == entries.size()) return std::nullopt;
      for (long k = entries[i].k; k < next; ++k)
        out.push_back(Term{rep * m.pow(static_cast<int>(k)), running});
    }
  }
  return from_terms(std::move(out));
}

std::optional<Poly> Poly::try_divide(const Poly& d) const {
  if (d.is_zero()) throw_precondition("division by zero", "polynomial divisor is 0");
  if (is_zero()) return Poly();
  if (d.size() == 1) {
    const Term& t = d.terms_[0];
    return mul_term(t.mono.inverse(), Rational(1) / t.coef);
  }
  if (d.size() == 2) {
    // a*m1 + b*m2 with b = -a is a*m1*(1 - m2/m1).
    const Term& t1 = d.terms_[0];
    const Term& t2 = d.terms_[1];
    if (t1.coef == -t2.coef) {
      auto q = div_one_minus(t2.mono / t1.mono);
      if (!q) return std::nullopt;
      return q->mul_term(t1.mono.inverse(), Rational(1) / t1.coef);
    }
  }
  // Shift both operands to content-free polynomials, then divide in the
  // polynomial ring (the Laurent quotient is then necessarily polynomial).
  Monomial dshift = d.min_exponents();
  Monomial pshift = min_exponents();
  Poly dd = d.mul_term(dshift.inverse());
  Poly pp = mul_term(pshift.inverse());
  auto cmp = [](const Monomial& a, const Monomial& b) { return Monomial::compare(a, b) > 0; };
  std::map<Monomial, Rational, decltype(cmp)> rem(cmp);
  for (const Term& t : pp.terms_) rem.emplace(t.mono, t.coef);
  const Term& lead = dd.terms_.front();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    Monomial qm = it->first / lead.mono;
    if (qm.has_negative()) return std::nullopt;
    Rational qc = it->second / lead.coef;
    for (const Term& t : dd.terms_) {
      Monomial mm = t.mono * qm;
      auto [pos, inserted] = rem.try_emplace(mm, 0);
      pos->second -= t.coef * qc;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    quotient.push_back(Term{qm, qc});
  }
  Poly q = from_terms(std::move(quotient));
  return q.mul_term(pshift / dshift);
}

Poly Poly::divide_exact(const Poly& d) const {
  auto q = try_divide(d);
  if (!q) throw_precondition("not divisible", "nonzero remainder in exact division");
  return *q;
}

Poly Poly::substitute(const Substitution& s) const {
  if (s.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    auto [scale, mono] = s.apply(t.mono);
    if (sgn(scale) == 0) continue;
    out.push_back(Term{std::move(mono), t.coef * scale});
  }
  return from_terms(std::move(out));
}

Poly Poly::rename(const std::vector<VarId>& from, const std::vector<VarId>& to) const {
  Substitution s;
  for (std::size_t i = 0; i < from.size(); ++i) s.set(from[i], Monomial::of(to[i]));
  return substitute(s);
}

int Poly::max_degree(VarId v) const {
  int r = std::numeric_limits<int>::min();
  for (const Term& t : terms_) r = std::max(r, t.mono[v]);
  return terms_.empty() ? 0 : r;
}

int Poly::min_degree(VarId v) const {
  int r = std::numeric_limits<int>::max();
  for (const Term& t : terms_) r = std::min(r, t.mono[v]);
  return terms_.empty() ? 0 : r;
}

int Poly::max_nonz_degree() const {
  int r = std::numeric_limits<int>::min();
  for (const Term& t : terms_) r = std::max(r, t.mono.nonz_degree());
  return terms_.empty() ? 0 : r;
}

int Poly::min_nonz_degree() const {
  int r = std::numeric_limits<int>::max();
  for (const Term& t : terms_) r = std::min(r, t.mono.nonz_degree());
  return terms_.empty() ? 0 : r;
}

bool Poly::involves(VarId v) const {
  for (const Term& t : terms_)
    if (t.mono[v] != 0) return true;
  return false;
}

bool Poly::has_negative_nonz() const {
  for (const Term& t : terms_)
    if (t.mono.has_negative_nonz()) return true;
  return false;
}

Monomial Poly::min_exponents() const {
  if (terms_.empty()) return Monomial();
  Monomial r = terms_.front().mono;
  for (const Term& t : terms_) r = Monomial::min(r, t.mono);
  return r;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < var_count(); ++i) {
    VarId v = var_from_index(i);
    if (involves(v)) out.push_back(v);
  }
  return out;
}

std::map<int, Poly> Poly::coefficients_in(VarId v) const {
  std::map<int, std::vector<Term>> groups;
  for (const Term& t : terms_) groups[t.mono[v]].push_back(Term{t.mono.without(v), t.coef});
  std::map<int, Poly> out;
  for (auto& [e, ts] : groups) {
    Poly p;
    p.terms_ = std::move(ts);  // removing one variable keeps relative order only per degree
    p.canonicalize();
    out.emplace(e, std::move(p));
  }
  return out;
}

Poly Poly::truncate_nonz(int n) const {
  Poly r;
  for (const Term& t : terms_)
    if (t.mono.nonz_degree() <= n) r.terms_.push_back(t);
  return r;
}

Poly Poly::mul_truncated(const Poly& a, const Poly& b, int n) {
  std::vector<int> db;
  db.reserve(b.size());
  for (const Term& t : b.terms_) db.push_back(t.mono.nonz_degree());
  std::vector<Term> out;
  for (const Term& ta : a.terms_) {
    int da = ta.mono.nonz_degree();
    for (std::size_t j = 0; j < b.terms_.size(); ++j)
      if (da + db[j] <= n) out.push_back(Term{ta.mono * b.terms_[j].mono, ta.coef * b.terms_[j].coef});
  }
  return from_terms(std::move(out));
}

std::string monomial_to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.entries()) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const Term& t : terms_) order.push_back(&t);
  std::vector<VarId> vars = display_order();
  // Ascending degree, lexicographic within a degree.
  std::stable_sort(order.begin(), order.end(), [&](const Term* a, const Term* b) {
    if (a->mono.degree() != b->mono.degree()) return a->mono.degree() < b->mono.degree();
    return display_greater(a->mono, b->mono, vars);
  });
  std::string s;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? '-' : '+';
    }
    first = false;
    if (t->mono.is_one()) {
      s += c.get_str();
    } else if (c == 1) {
      s += monomial_to_string(t->mono);
    } else {
      s += c.get_str() + '*' + monomial_to_string(t->mono);
    }
  }
  return s;
}

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (sgn(base) == 0) throw_precondition("division by zero", "0 raised to a negative power");
    return rational_pow(Rational(1) / base, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Poly substitute_monomials(const Poly& p, const Substitution& s) {
  Poly r = p.substitute(s);
  if (r.has_negative_nonz())
    throw_precondition("negative exponent on non-Z variable", r.to_string());
  return r;
}

Poly vandermonde_product(int d) {
  if (d < 1) throw_precondition("invalid dimension", "d must be positive");
  Poly r(1L);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) r *= Poly::var(VarId::x(i)) - Poly::var(VarId::x(j));
  return r;
}

}  // namespace rsf
