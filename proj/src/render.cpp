#include <algorithm>

#include "rsf/nice_rational.hpp"

namespace rsf {

std::string factor_to_string(const BinomialFactor& f, int power) {
  std::string s;
  if (f.is_standard()) {
    s = "(1-" + monomial_to_string(f.mono) + ")";
  } else {
    std::string zpart = f.zvar.name();
    if (f.zexp != 1) zpart += "^" + std::to_string(f.zexp);
    std::string c = f.mono.is_one() ? "1" : monomial_to_string(f.mono);
    s = "(" + zpart + "-" + c + ")";
  }
  if (power != 1) s += "^" + std::to_string(power);
  return s;
}

std::string NiceRational::to_string() const {
  std::string num = num_.to_string();
  if (den_.empty()) return num;
  if (num_.size() > 1 || (num_.is_monomial() && sgn(num_.leading().coef) < 0 && !num_.is_constant()))
    num = "(" + num + ")";

  std::vector<std::pair<const BinomialFactor*, int>> factors;
  for (const auto& [f, k] : den_) factors.emplace_back(&f, k);
  const std::vector<VarId> order = display_order();
  std::stable_sort(factors.begin(), factors.end(), [&order](const auto& a, const auto& b) {
    const BinomialFactor& fa = *a.first;
    const BinomialFactor& fb = *b.first;
    if (fa.kind != fb.kind) return fa.kind < fb.kind;
    if (!fa.is_standard() && fa.zvar != fb.zvar) return display_less(fa.zvar, fb.zvar);
    if (fa.mono.degree() != fb.mono.degree()) return fa.mono.degree() < fb.mono.degree();
    return display_greater(fa.mono, fb.mono, order);
  });

  std::string den;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) den += "*";
    den += factor_to_string(*factors[i].first, factors[i].second);
  }
  if (factors.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace rsf
