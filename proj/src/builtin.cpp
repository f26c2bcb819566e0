#include <algorithm>

#include "rsf/applications.hpp"
#include "rsf/error.hpp"

namespace rsf {

namespace {

Monomial xs(std::initializer_list<std::pair<int, int>> e) {
  Monomial m;
  for (auto [i, k] : e) m.set(VarId::x(i), k);
  return m;
}

NiceRational polynomial_algebra(int d) {
  std::vector<std::pair<Monomial, int>> den;
  for (int i = 1; i <= d; ++i) den.emplace_back(Monomial::of(VarId::x(i)), 1);
  return NiceRational::over_binomials(1, den);
}

// prod_i 1/(1-x_i)^2 prod_{i<j} 1/(1-x_i x_j), times `num`.
NiceRational trace_shape(int d, Poly num) {
  std::vector<std::pair<Monomial, int>> den;
  for (int i = 1; i <= d; ++i) den.emplace_back(xs({{i, 1}}), 2);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) den.emplace_back(xs({{i, 1}, {j, 1}}), 1);
  return NiceRational::over_binomials(std::move(num), den);
}

NiceRational m2_multiplicity_series() {
  auto v = [](int i) { return Monomial::of(VarId::v(i)); };
  Poly v1 = Poly::var(VarId::v(1)), v2 = Poly::var(VarId::v(2));
  Poly v3 = Poly::var(VarId::v(3)), v4 = Poly::var(VarId::v(4));
  NiceRational a = NiceRational::over_binomials(1, {{v(1), 2}, {v(2), 2}, {v(3), 2}, {v(4), 1}});
  NiceRational b = NiceRational::over_binomials(v2 + v1 * (Poly(1) - v2), {{v(1), 2}, {v(2), 1}});
  NiceRational c = NiceRational::over_binomials(v3 + v4, {{v(1), 1}});
  return a - b - c;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"polynomial-algebra", "F-U2K", "T32", "T23", "T24",
                                              "M2-multiplicity-series"};
  return names;
}

bool is_builtin(const std::string& name) {
  const auto& n = builtin_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

int builtin_arity(const std::string& name, int d) {
  if (name == "polynomial-algebra" || name == "F-U2K") return d;
  if (name == "T32") return 2;
  if (name == "T23") return 3;
  if (name == "T24" || name == "M2-multiplicity-series") return 4;
  throw_precondition("unknown builtin", name);
}

NiceRational builtin_series(const std::string& name, int d) {
  if (name == "polynomial-algebra" || name == "F-U2K") {
    if (d < 1) throw_precondition("invalid dimension", name + " needs d >= 1");
    NiceRational k = polynomial_algebra(d);
    return name == "F-U2K" ? tideal_product_hilbert(k, k, d) : k;
  }
  if (name == "T32")
    return NiceRational::over_binomials(1, {{xs({{1, 1}}), 2},
                                            {xs({{2, 1}}), 2},
                                            {xs({{1, 2}}), 1},
                                            {xs({{2, 2}}), 1},
                                            {xs({{1, 1}, {2, 1}}), 2},
                                            {xs({{1, 2}, {2, 1}}), 1},
                                            {xs({{1, 1}, {2, 2}}), 1}});
  if (name == "T23") return trace_shape(3, 1);
  if (name == "T24") return trace_shape(4, Poly(1) - Poly::monomial(xs({{1, 1}, {2, 1}, {3, 1}, {4, 1}})));
  if (name == "M2-multiplicity-series") return m2_multiplicity_series();
  throw_precondition("unknown builtin", name);
}

}  // namespace rsf
