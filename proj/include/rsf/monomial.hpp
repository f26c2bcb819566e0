#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rsf/var.hpp"

namespace rsf {

/// Laurent monomial stored densely over the interned variable indices
/// (the ExponentVector of the data model).
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(VarId v, int e = 1);
  static Monomial of(std::initializer_list<std::pair<VarId, int>> entries);

  int operator[](VarId v) const { return e_[v.index()]; }
  int at(std::size_t idx) const { return e_[idx]; }
  void set(VarId v, int e);

  /// Total degree over all variables.
  int degree() const { return deg_; }
  /// Total degree over the variables that are not elimination variables.
  int nonz_degree() const;
  bool is_one() const { return deg_ == 0 && all_zero(); }
  bool has_negative() const;
  /// True when some non-elimination variable has a negative exponent.
  bool has_negative_nonz() const;
  bool involves(VarId v) const { return e_[v.index()] != 0; }
  bool involves_nonz() const;

  Monomial& operator*=(const Monomial& o);
  Monomial& operator/=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }
  Monomial inverse() const;
  Monomial pow(int k) const;
  /// Componentwise minimum / maximum.
  static Monomial min(const Monomial& a, const Monomial& b);
  static Monomial max(const Monomial& a, const Monomial& b);
  /// The monomial with `v` removed.
  Monomial without(VarId v) const;
  /// Largest g such that this monomial is a g-th power (0 for the unit monomial).
  int content_gcd() const;
  /// Exact root for a divisor of content_gcd().
  Monomial root(int g) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  /// Storage order: graded, then lexicographic with lower variable index
  /// more significant. Returns <0, 0, >0.
  static int compare(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  /// Nonzero entries in display order.
  std::vector<std::pair<VarId, int>> entries() const;

 private:
  bool all_zero() const;
  void check_range(int value) const;

  std::array<std::int16_t, kMaxVars> e_{};
  std::int32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Canonical display comparison: graded, then lexicographic in display order.
/// Returns true when `a` precedes `b` in printed output (higher terms first).
/// `order` is the result of display_order().
bool display_greater(const Monomial& a, const Monomial& b, const std::vector<VarId>& order);

}  // namespace rsf
