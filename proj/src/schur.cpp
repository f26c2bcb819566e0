#include <algorithm>
#include <numeric>

#include "rsf/error.hpp"
#include "rsf/schur.hpp"

namespace rsf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw_precondition("invalid partition", "negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw_precondition("invalid partition", "parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Monomial partition_monomial(const Partition& lambda) {
  Monomial m;
  for (int i = 0; i < lambda.length(); ++i) m.set(VarId::x(i + 1), lambda[i]);
  return m;
}

namespace {

// det(x_i^alpha_j) for i, j = 1..d.
Poly alternant(const std::vector<int>& alpha) {
  int d = static_cast<int>(alpha.size());
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    int inversions = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Monomial m;
    for (int i = 0; i < d; ++i) m.set(VarId::x(i + 1), alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    terms.push_back(Term{m, Rational(inversions % 2 == 0 ? 1 : -1)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Poly::from_terms(std::move(terms));
}

void young_rec(const Partition& mu, int d, int row, int remaining, std::vector<int>& cur, std::vector<Partition>& out) {
  if (row == d) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  // nu_row in [mu_row, mu_(row-1)] (no upper bound in the first row)
  int lo = mu[row];
  int hi = row == 0 ? mu[0] + remaining : mu[row - 1];
  for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
    cur.push_back(v);
    young_rec(mu, d, row + 1, remaining - (v - lo), cur, out);
    cur.pop_back();
  }
}

}  // namespace

Poly schur_poly(const Partition& lambda, int d) {
  if (d < 1) throw_precondition("invalid dimension", "d must be positive");
  if (lambda.length() > d)
    throw_precondition("partition too long", lambda.to_string() + " has more than " + std::to_string(d) + " parts");
  std::vector<int> alpha(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) alpha[static_cast<std::size_t>(i)] = lambda[i] + d - 1 - i;
  return alternant(alpha).divide_exact(vandermonde_product(d));
}

std::vector<Partition> young_rule(int m, const Partition& mu, int d) {
  if (mu.length() > d)
    throw_precondition("partition too long", mu.to_string() + " has more than " + std::to_string(d) + " parts");
  std::vector<Partition> out;
  std::vector<int> cur;
  young_rec(mu, d, 0, m, cur, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SchurExpansion schur_expand(const NiceRational& f, int d, int n) {
  SchurExpansion ex;
  ex.n = n;
  Poly p = series_truncate(f, n);
  std::vector<VarId> xs;
  for (int i = 1; i <= d; ++i) xs.push_back(VarId::x(i));
  while (!p.is_zero()) {
    const Term* best = nullptr;
    for (const Term& t : p.terms()) {
      if (!best) {
        best = &t;
        continue;
      }
      for (VarId x : xs) {
        if (t.mono[x] != best->mono[x]) {
          if (t.mono[x] > best->mono[x]) best = &t;
          break;
        }
      }
    }
    std::vector<int> parts;
    for (VarId x : xs) parts.push_back(best->mono[x]);
    Monomial rest = best->mono;
    for (VarId x : xs) rest.set(x, 0);
    bool ok = rest.is_one();
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1]) ok = false;
    if (!ok) throw_precondition("non-partition leading term", monomial_to_string(best->mono));
    Partition lambda(parts);
    Rational c = best->coef;
    ex.entries[lambda] = c;
    p -= schur_poly(lambda, d) * c;
  }
  return ex;
}

}  // namespace rsf
