#include <optional>
#include <cstdlib>
#include <string>

#include "omega_ring.hpp"
#include "rsf/error.hpp"
#include "rsf/omega.hpp"

namespace rsf {

namespace {

// Exponents of the denominator binomials (1 - m) that carry the current z.
using Key = detail::BinomialDen;

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      int c = Monomial::compare(ia->first, ib->first);
      if (c != 0) return c < 0;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.end() && ib != b.end();
  }
};

// Coefficient of one z-key: numerators indexed by their z-free denominator.
using Coeff = std::map<Key, Poly, KeyLess>;

struct Node {
  long rank;
  Key key;
};

struct NodeLess {
  bool operator()(const Node& a, const Node& b) const { return a.rank < b.rank; }
};

using Worklist = std::map<Node, Coeff, NodeLess>;

// Topological position of every key reachable during one elimination.
using Ranks = std::map<Key, long, KeyLess>;

// Exponents by which b exceeds a, or nullopt when a does not divide b.
std::optional<Key> quotient(const Key& b, const Key& a) {
  Key q = b;
  for (const auto& [m, e] : a) {
    auto it = q.find(m);
    if (it == q.end() || it->second < e) return std::nullopt;
    if ((it->second -= e) == 0) q.erase(it);
  }
  return q;
}

int total(const Key& k) {
  int n = 0;
  for (const auto& [m, e] : k) n += e;
  return n;
}

Poly times(Poly p, const Key& q) {
  for (const auto& [m, e] : q) p = p.mul_one_minus(m, e);
  return p;
}

// Adds p/den to c. A denominator dividing an existing one is folded into it,
// and existing entries dividing den are folded into the new entry, so no
// entry of c divides another.
void add_poly(Coeff& c, const Key& den, const Poly& p) {
  if (p.is_zero()) return;
  auto exact = c.find(den);
  if (exact != c.end()) {
    exact->second += p;
    if (exact->second.is_zero()) c.erase(exact);
    return;
  }
  Coeff::iterator host = c.end();
  std::optional<Key> host_q;
  for (auto it = c.begin(); it != c.end(); ++it) {
    auto q = quotient(it->first, den);
    if (q && (!host_q || total(*q) < total(*host_q))) {
      host = it;
      host_q = std::move(q);
    }
  }
  if (host != c.end()) {
    host->second += times(p, *host_q);
    if (host->second.is_zero()) c.erase(host);
    return;
  }
  Poly sum = p;
  for (auto it = c.begin(); it != c.end();) {
    auto q = quotient(den, it->first);
    if (!q) {
      ++it;
      continue;
    }
    sum += times(std::move(it->second), *q);
    it = c.erase(it);
  }
  if (!sum.is_zero()) c.emplace(den, std::move(sum));
}

// Adds num/den to the node for key k, after moving factor extra (if any)
// into the key when it carries z or into den otherwise.
void accumulate(Worklist& w, const Ranks& ranks, VarId z, Key k, Key den, const Poly& num,
                const Monomial* extra = nullptr) {
  if (num.is_zero()) return;
  if (extra) (((*extra)[z] != 0) ? k : den)[*extra] += 1;
  long r = ranks.at(k);
  add_poly(w[Node{r, std::move(k)}], den, num);
}

Key without(Key k, const Monomial& m) {
  if (--k[m] == 0) k.erase(m);
  return k;
}

// Standard-factor form of f: the pivoted factors are turned back into
// (1 - m) with the z-power moved to the numerator.
std::pair<Poly, std::vector<std::pair<Monomial, int>>> standard_form(const NiceRational& f,
                                                                    const std::vector<VarId>& zs) {
  Poly num = f.num();
  std::vector<std::pair<Monomial, int>> den;
  for (const auto& [fac, e] : f.den()) {
    Monomial w = fac.mono;
    if (!fac.is_standard()) {
      num = num.mul_term(Monomial::of(fac.zvar, -fac.zexp * e));
      w = fac.mono / Monomial::of(fac.zvar, fac.zexp);
    }
    bool has_z = false;
    for (VarId z : zs) has_z = has_z || w[z] != 0;
    if (has_z && w.nonz_degree() <= 0)
      throw_precondition("ambiguous factor",
                         "(1-" + monomial_to_string(w) + ") carries an elimination variable but no non-elimination growth");
    den.emplace_back(w, e);
  }
  return {num, den};
}

using Split = std::map<Key, Coeff, KeyLess>;

Split split_on(const std::vector<NiceRational>& parts, VarId z) {
  Split out;
  for (const NiceRational& f : parts) {
    Key key, den;
    for (const auto& [fac, e] : f.den()) (fac.mono[z] != 0 ? key : den)[fac.mono] += e;
    add_poly(out[key], den, f.num());
  }
  return out;
}

// Picks the positive and negative z-factors whose z-exponents are closest in
// size, so the combined factor XY carries as little z as possible.
std::pair<const Monomial*, const Monomial*> pick_pair(const Key& key, VarId z) {
  const Monomial* pos = nullptr;
  const Monomial* neg = nullptr;
  int best = 0;
  for (const auto& [a, ka] : key) {
    if (a[z] <= 0) continue;
    if (!pos) pos = &a;
    for (const auto& [b, kb] : key) {
      if (b[z] >= 0) continue;
      int gap = std::abs(a[z] + b[z]);
      if (!neg || gap < best) {
        pos = &a;
        neg = &b;
        best = gap;
      }
    }
  }
  if (!pos)
    for (const auto& [b, kb] : key)
      if (b[z] < 0) {
        neg = &b;
        break;
      }
  return {pos, neg};
}

Key with_factor(Key k, const Monomial& m, VarId z) {
  if (m[z] != 0) k[m] += 1;
  return k;
}

// Keys a rewrite of `key` sends terms to.
std::vector<Key> successors(const Key& key, VarId z) {
  auto [pos, neg] = pick_pair(key, z);
  if (pos && neg) {
    Monomial xy = *pos * *neg;
    Key k1 = without(key, *neg);
    return {with_factor(k1, xy, z), with_factor(without(key, *pos), xy, z), with_factor(without(k1, *pos), xy, z)};
  }
  if (pos || neg) return {without(key, pos ? *pos : *neg)};
  return {};
}

// Reverse postorder of the rewrite graph, so every key is rewritten once,
// after all of its inflow has arrived.
Ranks rank_keys(const Split& roots, VarId z, long budget) {
  Ranks post;
  long n = 0;
  struct Frame {
    Key key;
    std::vector<Key> next;
    std::size_t i = 0;
  };
  for (const auto& root : roots) {
    if (post.count(root.first)) continue;
    std::vector<Frame> stack;
    post.emplace(root.first, -1);
    stack.push_back({root.first, successors(root.first, z)});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.i < top.next.size()) {
        Key k = top.next[top.i++];
        if (post.emplace(k, -1).second) {
          if (static_cast<long>(post.size()) > budget)
            throw_internal("reduction did not terminate", "rewrite budget of " + std::to_string(budget) + " exhausted");
          auto next = successors(k, z);
          stack.push_back({std::move(k), std::move(next)});
        }
        continue;
      }
      post[top.key] = n++;
      stack.pop_back();
    }
  }
  for (auto& [k, r] : post) r = n - 1 - r;
  return post;
}

std::vector<NiceRational> eliminate(const Split& start, VarId z, long budget) {
  Ranks ranks = rank_keys(start, z, budget);
  Worklist pending;
  for (const auto& [key, c] : start) pending.emplace(Node{ranks.at(key), key}, c);
  Coeff finished;
  long steps = 0;
  Substitution at_one;
  at_one.set_constant(z, 1);
  auto finish = [&](const Key& key, Key den, const Poly& num) {
    for (const auto& [m, e] : key) den[m.without(z)] += e;
    add_poly(finished, den, num.substitute(at_one));
  };

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Key& key = node.key().key;
    auto [pos, neg] = pick_pair(key, z);

    if (++steps > budget)
      throw_internal("reduction did not terminate", "rewrite budget of " + std::to_string(budget) + " exhausted");
    for (const auto& [den, num] : node.mapped()) {

      if (pos && neg) {
        // 1/((1-X)(1-Y)) = 1/(1-XY) * (1/(1-X) + 1/(1-Y) - 1)
        Monomial xy = *pos * *neg;
        Key k1 = without(key, *neg);
        accumulate(pending, ranks, z, k1, den, num, &xy);
        accumulate(pending, ranks, z, without(key, *pos), den, num, &xy);
        accumulate(pending, ranks, z, without(k1, *pos), den, -num, &xy);
        continue;
      }

      // One-signed keys: 1/(1-X) = 1 + X/(1-X) moves the numerator terms
      // that need rewriting one factor at a time. With only negative factors
      // the negative z-powers vanish; otherwise the nonnegative ones are final.
      const Monomial* f = pos ? pos : neg;
      Poly rest = num;
      while (!rest.is_zero()) {
        std::vector<Term> low, high;
        for (const Term& t : rest.terms()) (t.mono[z] < 0 ? low : high).push_back(t);
        Poly lo = Poly::from_terms(std::move(low)), hi = Poly::from_terms(std::move(high));
        if (!neg && !hi.is_zero()) finish(key, den, hi);
        const Poly& s = neg ? hi : lo;
        if (!f || s.is_zero()) break;
        accumulate(pending, ranks, z, without(key, *f), den, s);
        rest = s.mul_term(*f);
      }
    }
  }
  std::vector<NiceRational> done;
  for (const auto& [den, num] : finished) done.push_back(NiceRational::over_binomials(num, detail::to_factor_list(den)));
  return done;
}

}  // namespace

NiceRational elliott_reduce(const NiceRational& f, const std::vector<VarId>& zs, long budget) {
  if (budget <= 0) budget = default_rewrite_budget();
  auto [num, den] = standard_form(f, zs);
  std::vector<NiceRational> parts{NiceRational::over_binomials(num, den)};
  for (VarId z : zs) parts = eliminate(split_on({sum_all(std::move(parts))}, z), z, budget);

  NiceRational r = sum_all(std::move(parts));
  for (VarId z : zs)
    if (r.involves(z)) throw_internal("z in numerator after elimination", z.name() + " remains in " + r.to_string());
  if (!r.is_nice()) throw_internal("non-nice elimination result", r.to_string());
  return r;
}

NiceRational elliott_reduce(const NiceRational& f, VarId z, long budget) {
  if (!f.involves(z)) return f;
  return elliott_reduce(f, std::vector<VarId>{z}, budget);
}

}  // namespace rsf
