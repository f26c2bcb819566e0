#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rsf/nice_rational.hpp"
#include "rsf/omega.hpp"

namespace rsf {

/// Weakly decreasing sequence of positive parts (trailing zeros trimmed).
class Partition {
 public:
  Partition() = default;
  /// Throws a precondition error unless `parts` is weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// Part i (0-based), 0 beyond the length.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  /// "(3,1)"; the empty partition is "()".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Truncated Schur expansion: entries with |lambda| <= n.
struct SchurExpansion {
  int n = 0;
  std::map<Partition, Rational> entries;
};

/// Multiplicity series in x_1..x_d and its rewriting in v_1..v_d.
struct MultiplicitySeries {
  NiceRational m;
  NiceRational m_prime;
};

/// S_lambda(x_1..x_d) as a quotient of alternants.
Poly schur_poly(const Partition& lambda, int d);

/// x^lambda.
Monomial partition_monomial(const Partition& lambda);

/// True when f is invariant under every adjacent transposition of x_1..x_d.
bool is_symmetric(const NiceRational& f, int d);

/// M(f) and M'(f) for f symmetric in x_1..x_d. When `graded`, t stays an
/// inert parameter.
MultiplicitySeries multiplicity_series(const NiceRational& f, int d, bool graded,
                                       const OmegaOptions& opt = {});

/// M(x_1..x_d) -> M'(v_1..v_d), x_1 -> v_1, x_i -> v_i / v_(i-1).
NiceRational to_v_variables(const NiceRational& m, int d);
/// M'(v_1..v_d) -> M(x_1..x_d), v_i -> x_1 ... x_i.
NiceRational to_x_variables(const NiceRational& mp, int d);

/// Checks f * prod_{i<j}(x_i - x_j) = sum_sigma sign(sigma) sigma(x^delta h).
bool verify_multiplicity(const NiceRational& f, const NiceRational& h, int d);

/// Greedy peel-off of Schur polynomials from the degree <= n truncation of f.
SchurExpansion schur_expand(const NiceRational& f, int d, int n);

/// Partitions nu of |mu| + m with at most d parts such that nu / mu is a horizontal strip.
std::vector<Partition> young_rule(int m, const Partition& mu, int d);

}  // namespace rsf
