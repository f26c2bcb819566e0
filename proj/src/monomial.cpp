#include "rsf/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "rsf/error.hpp"

namespace rsf {

namespace {

constexpr int kExpMax = 32000;

}  // namespace

void Monomial::check_range(int value) const {
  if (value > kExpMax || value < -kExpMax) throw_internal("exponent overflow", std::to_string(value));
}

Monomial Monomial::of(VarId v, int e) {
  Monomial m;
  m.set(v, e);
  return m;
}

Monomial Monomial::of(std::initializer_list<std::pair<VarId, int>> entries) {
  Monomial m;
  for (const auto& [v, e] : entries) m.set(v, m[v] + e);
  return m;
}

void Monomial::set(VarId v, int e) {
  check_range(e);
  deg_ += e - e_[v.index()];
  e_[v.index()] = static_cast<std::int16_t>(e);
}

bool Monomial::all_zero() const {
  for (auto x : e_)
    if (x != 0) return false;
  return true;
}

int Monomial::nonz_degree() const {
  std::uint32_t mask = elimination_mask();
  int d = deg_;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) d -= e_[i];
  return d;
}

bool Monomial::has_negative() const {
  for (auto x : e_)
    if (x < 0) return true;
  return false;
}

bool Monomial::has_negative_nonz() const {
  std::uint32_t mask = elimination_mask();
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] < 0 && !((mask >> i) & 1U)) return true;
  return false;
}

bool Monomial::involves_nonz() const {
  std::uint32_t mask = elimination_mask();
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] != 0 && !((mask >> i) & 1U)) return true;
  return false;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int s = e_[i] + o.e_[i];
    overflow |= (s > kExpMax) | (s < -kExpMax);
    e_[i] = static_cast<std::int16_t>(s);
  }
  if (overflow) throw_internal("exponent overflow", "monomial product");
  deg_ += o.deg_;
  return *this;
}

Monomial& Monomial::operator/=(const Monomial& o) {
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int s = e_[i] - o.e_[i];
    overflow |= (s > kExpMax) | (s < -kExpMax);
    e_[i] = static_cast<std::int16_t>(s);
  }
  if (overflow) throw_internal("exponent overflow", "monomial quotient");
  deg_ -= o.deg_;
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::int16_t>(-e_[i]);
  r.deg_ = -deg_;
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int s = e_[i] * k;
    check_range(s);
    r.e_[i] = static_cast<std::int16_t>(s);
  }
  r.deg_ = deg_ * k;
  return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::max(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r = *this;
  r.set(v, 0);
  return r;
}

int Monomial::content_gcd() const {
  int g = 0;
  for (auto x : e_) g = std::gcd(g, static_cast<int>(x));
  return g;
}

Monomial Monomial::root(int g) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] % g != 0) throw_internal("monomial root", "exponent not divisible");
    r.e_[i] = static_cast<std::int16_t>(e_[i] / g);
  }
  r.deg_ = deg_ / g;
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
  return 0;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the raw exponent bytes.
  std::uint64_t h = 1469598103934665603ULL;
  const auto* p = reinterpret_cast<const unsigned char*>(e_.data());
  for (std::size_t i = 0; i < sizeof(e_); ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::vector<std::pair<VarId, int>> Monomial::entries() const {
  std::vector<std::pair<VarId, int>> out;
  for (std::size_t i = 0; i < var_count(); ++i)
    if (e_[i] != 0) out.emplace_back(var_from_index(i), e_[i]);
  std::sort(out.begin(), out.end(),
            [](const auto& p, const auto& q) { return display_less(p.first, q.first); });
  return out;
}

bool display_greater(const Monomial& a, const Monomial& b, const std::vector<VarId>& order) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (VarId v : order)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

}  // namespace rsf
