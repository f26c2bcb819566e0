#include <doctest.h>

#include <algorithm>

#include "rsf/error.hpp"
#include "rsf/omega.hpp"
#include "rsf/parse.hpp"
#include "test_util.hpp"

using namespace rsf;
using rsf::test::x;
using rsf::test::z;

namespace {

NiceRational E(const std::string& s) { return parse_expr(s); }

const std::vector<VarId> Z1{VarId::z(1)};

// g(x1 z, x2 / z) for g = (x1 - x2) H(K[W(3)]; x1, x2).
NiceRational w3_substituted() {
  return E("(x1*z1-x2*z1^-1)/((1-x1^3*z1^3)*(1-x1^2*x2*z1)*(1-x1*x2^2*z1^-1)*(1-x2^3*z1^-3))");
}

OmegaOptions with(OmegaStrategy s) {
  OmegaOptions o;
  o.strategy = s;
  o.oracle_check = true;
  return o;
}

// Random input whose z-carrying factors also carry x1 or x2.
NiceRational random_z_input(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 4), zexp(-2, 2), xexp(0, 2), coef(-3, 3);
  std::vector<std::pair<Monomial, int>> den;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m = test::random_positive_monomial(rng, {x(1), x(2)}, 2);
    m.set(z(1), zexp(rng));
    den.emplace_back(m, 1);
  }
  std::vector<Term> num;
  for (int i = 0; i < 2; ++i) {
    Monomial m;
    m.set(x(1), xexp(rng));
    m.set(x(2), xexp(rng));
    m.set(z(1), zexp(rng));
    num.push_back(Term{m, Rational(coef(rng))});
  }
  Poly p = Poly::from_terms(std::move(num));
  if (p.is_zero()) p = Poly(1);
  return NiceRational::over_binomials(p, den);
}

}  // namespace

TEST_CASE("pivoted z-form") {
  NiceRational f = E("1/(1-x2*z1^-1)");
  NiceRational p = pivot_z_form(f, z(1));
  REQUIRE(p.den().size() == 1);
  const BinomialFactor& fac = p.den().begin()->first;
  CHECK_FALSE(fac.is_standard());
  CHECK(fac.zexp == 1);
  CHECK(nr_equal(p, f));

  NiceRational g = E("1/((1-x1*z1)*(1-x2))");
  CHECK(pivot_z_form(g, z(1)) == g);

  NiceRational w = w3_substituted();
  CHECK(series_truncate(pivot_z_form(w, z(1)), 6) == series_truncate(w, 6));
}

TEST_CASE("partial fractions of the two-variable W(3) case") {
  auto terms = partial_fractions_z(pivot_z_form(w3_substituted(), z(1)), z(1));
  CHECK(terms.size() == 6);
  std::vector<Poly> contributing;
  NiceRational sum;
  for (const auto& t : terms) {
    sum += t.value;
    if (t.kind == ZPartialFractionTerm::Kind::ContributingFraction) contributing.push_back(t.basis);
  }
  CHECK(nr_equal(sum, w3_substituted()));
  REQUIRE(contributing.size() == 3);
  // Each basis factor is one of the expected ones up to a constant multiple.
  std::vector<Poly> expected{E("1-x1*z1").num(), E("1+x1*z1+x1^2*z1^2").num(), E("1-x1^2*x2*z1").num()};
  for (const Poly& e : expected) {
    bool found = std::any_of(contributing.begin(), contributing.end(), [&](const Poly& b) {
      auto q = b.try_divide(e);
      return q && q->is_monomial() && !q->leading().mono.involves_nonz();
    });
    CHECK_MESSAGE(found, e.to_string());
  }
}

TEST_CASE("partial fractions of a single factor") {
  NiceRational f = E("1/(1-x1*z1)");
  auto terms = partial_fractions_z(f, z(1));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].kind == ZPartialFractionTerm::Kind::ContributingFraction);
  CHECK(nr_equal(terms[0].value, f));
}

TEST_CASE("partial fractions reconstruct random inputs") {
  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) {
    NiceRational f = random_z_input(rng);
    NiceRational sum;
    for (const auto& t : partial_fractions_z(pivot_z_form(f, z(1)), z(1))) sum += t.value;
    CHECK(nr_equal(sum, f));
  }
}

TEST_CASE("nonnegative part") {
  for (OmegaStrategy s : {OmegaStrategy::PartialFractions, OmegaStrategy::Elliott}) {
    CHECK(nr_equal(omega_geq(E("1/(1-x1*z1)"), Z1, with(s)), E("1/(1-x1)")));
    CHECK(nr_equal(omega_geq(w3_substituted(), Z1, with(s)),
                   E("x1*(1-x1^2*x2+x1^4*x2^2)/((1-x1^3)*(1-x1^2*x2)*(1-x1^6*x2^6))")));
    CHECK(nr_equal(omega_geq(E("1/((1-x1*z1)*(1-x2*z1^-1))"), Z1, with(s)), E("1/((1-x1*x2)*(1-x1))")));
  }
}

TEST_CASE("Elliott reduction") {
  NiceRational f = E("1/((1-x1*z1)*(1-x2*z1^-1))");
  NiceRational r = elliott_reduce(f, z(1));
  CHECK(nr_equal(r, E("1/((1-x1*x2)*(1-x1))")));
  CHECK(series_truncate(r, 8) == omega_series_oracle(f, Z1, 8));
  NiceRational free = E("1/((1-x1)*(1-x2))");
  CHECK(elliott_reduce(free, z(1)) == free);
  try {
    (void)elliott_reduce(w3_substituted(), z(1), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "reduction did not terminate");
    CHECK(e.kind() == ErrorKind::Internal);
  }
}

TEST_CASE("strategies agree on random inputs") {
  std::mt19937 rng(47);
  for (int i = 0; i < 50; ++i) {
    NiceRational f = random_z_input(rng);
    NiceRational pf = omega_geq(f, Z1, with(OmegaStrategy::PartialFractions));
    NiceRational el = omega_geq(f, Z1, with(OmegaStrategy::Elliott));
    CHECK_MESSAGE(nr_equal(pf, el), f.to_string());
    CHECK(series_truncate(pf, 8) == omega_series_oracle(f, Z1, 8));
  }
}

TEST_CASE("linearity and idempotence") {
  std::mt19937 rng(53);
  for (int i = 0; i < 20; ++i) {
    NiceRational f = random_z_input(rng);
    NiceRational g = random_z_input(rng);
    CHECK(nr_equal(omega_geq(f + g, Z1), omega_geq(f, Z1) + omega_geq(g, Z1)));
    NiceRational free = test::random_nice(rng, {x(1), x(2)}, 3);
    CHECK(nr_equal(omega_geq(free, Z1), free));
  }
}

TEST_CASE("constant term") {
  CHECK(nr_equal(omega_eq0(E("1/(1-x1*z1)"), z(1)), 1));
  NiceRational free = E("x2/(1-x1)");
  CHECK(nr_equal(omega_eq0(free, z(1)), free));
  std::mt19937 rng(59);
  for (int i = 0; i < 20; ++i) {
    NiceRational f = random_z_input(rng);
    Poly s = series_truncate(f, 8);
    Poly expected = s.coefficients_in(z(1))[0];
    CHECK(series_truncate(omega_eq0(f, z(1)), 8) == expected);
  }
}

TEST_CASE("two elimination variables") {
  NiceRational f = E("(x1*z1-x2*z1^-1*z2)/((1-x1*z1)*(1-x2*z1^-1*z2)*(1-x3*z2^-1))");
  std::vector<VarId> zs{z(1), z(2)};
  NiceRational pf = omega_geq(f, zs, with(OmegaStrategy::PartialFractions));
  NiceRational el = omega_geq(f, zs, with(OmegaStrategy::Elliott));
  CHECK(nr_equal(pf, el));
  CHECK(series_truncate(pf, 8) == omega_series_oracle(f, zs, 8));
}

TEST_CASE("ambiguous factor is rejected") {
  try {
    (void)omega_geq(NiceRational::over_binomials(1, {{Monomial::of({{x(1), 1}, {z(1), 1}}), 1},
                                                      {Monomial::of({{x(1), -1}, {x(2), 1}, {z(1), 1}}), 1}}),
                    Z1, with(OmegaStrategy::Elliott));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "ambiguous factor");
  }
}
