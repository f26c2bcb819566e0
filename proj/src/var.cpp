#include "rsf/var.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <mutex>
#include <tuple>

#include "rsf/error.hpp"

namespace rsf {

namespace {

struct VarInfo {
  std::string name;
  Role role = Role::Inert;
  long suffix = -1;  // numeric suffix for x<n>, v<n>, z<n>
};

struct Registry {
  std::mutex mu;
  std::array<VarInfo, kMaxVars> info;
  std::atomic<std::size_t> count{0};
  std::atomic<std::uint32_t> zmask{0};
};

Registry& registry() {
  static Registry r;
  return r;
}

long numeric_suffix(std::string_view name) {
  if (name.size() < 2) return -1;
  long value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    value = value * 10 + (name[i] - '0');
    if (value > 1000000) return -1;
  }
  return value;
}

Role infer_role(std::string_view name) {
  if (name == "z") return Role::EliminationZ;
  if (numeric_suffix(name) >= 0) {
    switch (name[0]) {
      case 'x': return Role::SymmetricX;
      case 'v': return Role::MultiplicityV;
      case 'z': return Role::EliminationZ;
      default: break;
    }
  }
  return Role::Inert;
}

VarId intern(std::string_view name, Role role, bool explicit_role);

}  // namespace

VarId var_from_index(std::size_t idx) {
  if (idx >= registry().count.load()) throw_internal("unknown variable index", std::to_string(idx));
  return VarId(static_cast<std::uint16_t>(idx));
}

std::size_t var_count() { return registry().count.load(); }

std::uint32_t elimination_mask() { return registry().zmask.load(std::memory_order_relaxed); }

std::vector<VarId> display_order() {
  std::vector<VarId> vars;
  for (std::size_t i = 0; i < var_count(); ++i) vars.push_back(var_from_index(i));
  std::sort(vars.begin(), vars.end(), display_less);
  return vars;
}

namespace {

VarId intern(std::string_view name, Role role, bool explicit_role) {
  if (name.empty()) throw_parse("invalid variable name", "empty name");
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  std::size_t n = r.count.load();
  for (std::size_t i = 0; i < n; ++i) {
    if (r.info[i].name == name) {
      if (explicit_role && r.info[i].role != role)
        throw_precondition("variable role conflict", std::string(name));
      return var_from_index(i);
    }
  }
  if (n == kMaxVars)
    throw_precondition("too many variables",
                       "at most " + std::to_string(kMaxVars) + " distinct names per process");
  VarInfo& slot = r.info[n];
  slot.name = std::string(name);
  slot.role = role;
  slot.suffix = numeric_suffix(name);
  if (role == Role::EliminationZ) r.zmask.fetch_or(std::uint32_t{1} << n);
  r.count.store(n + 1);
  return var_from_index(n);
}

}  // namespace

VarId VarId::named(std::string_view name) { return intern(name, infer_role(name), false); }

VarId VarId::named(std::string_view name, Role role) { return intern(name, role, true); }

VarId VarId::x(int i) { return named("x" + std::to_string(i)); }
VarId VarId::v(int i) { return named("v" + std::to_string(i)); }
VarId VarId::z(int i) { return named("z" + std::to_string(i)); }
VarId VarId::t() { return named("t"); }

const std::string& VarId::name() const { return registry().info[idx_].name; }

Role VarId::role() const { return registry().info[idx_].role; }

bool display_less(VarId a, VarId b) {
  if (a == b) return false;
  const VarInfo& ia = registry().info[a.index()];
  const VarInfo& ib = registry().info[b.index()];
  auto key = [](const VarInfo& i) {
    // Inert names sort by name; indexed names by (letter, number).
    return std::make_tuple(static_cast<int>(i.role), i.role == Role::Inert ? 0L : i.suffix,
                           std::string_view(i.name));
  };
  return key(ia) < key(ib);
}

}  // namespace rsf
