#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rsf {

/// Role of a variable. Only elimination variables may carry negative
/// exponents in values that leave the library.
enum class Role : std::uint8_t { SymmetricX, MultiplicityV, EliminationZ, Inert };

/// Upper bound on the number of distinct variable names in one process.
inline constexpr std::size_t kMaxVars = 30;

/// Interned variable handle. Interning is thread-safe; the name and role of
/// a variable never change once created.
class VarId {
 public:
  VarId() = default;

  /// Interns `name`, inferring the role from its shape: x<n> symmetric,
  /// v<n> multiplicity, z or z<n> elimination, anything else inert.
  static VarId named(std::string_view name);
  /// Interns `name` with an explicit role; conflicts with an existing role throw.
  static VarId named(std::string_view name, Role role);

  static VarId x(int i);
  static VarId v(int i);
  static VarId z(int i);
  static VarId t();

  const std::string& name() const;
  Role role() const;
  bool is_z() const { return role() == Role::EliminationZ; }
  std::uint16_t index() const { return idx_; }

  friend bool operator==(VarId a, VarId b) { return a.idx_ == b.idx_; }
  friend auto operator<=>(VarId a, VarId b) { return a.idx_ <=> b.idx_; }

 private:
  explicit VarId(std::uint16_t idx) : idx_(idx) {}
  std::uint16_t idx_ = 0;

  friend VarId var_from_index(std::size_t);
};

/// Handle for an already interned index.
VarId var_from_index(std::size_t idx);
/// Number of variables interned so far.
std::size_t var_count();

/// Bit i is set when variable index i is an elimination variable.
std::uint32_t elimination_mask();

/// All interned variables sorted by display_less.
std::vector<VarId> display_order();

/// Global display order x1<x2<...<v1<...<z1<...<inert, used for canonical output.
bool display_less(VarId a, VarId b);

}  // namespace rsf
