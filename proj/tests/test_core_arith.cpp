#include <doctest.h>

#include "rsf/error.hpp"
#include "rsf/parse.hpp"
#include "rsf/poly.hpp"
#include "test_util.hpp"

using namespace rsf;
using rsf::test::x;
using rsf::test::z;

namespace {

Poly P(const char* s) {
  NiceRational f = parse_expr(s);
  REQUIRE(f.is_polynomial());
  return f.num();
}

// Swaps x_i and x_j.
Substitution swap(int i, int j) {
  Substitution s;
  s.set(x(i), Monomial::of(x(j)));
  s.set(x(j), Monomial::of(x(i)));
  return s;
}

}  // namespace

TEST_CASE("products and exact division") {
  CHECK(P("x1-x2") * P("x1+x2") == P("x1^2-x2^2"));
  CHECK(P("x1^2-x2^2").divide_exact(P("x1-x2")) == P("x1+x2"));
  CHECK_FALSE(P("x1^2+x2^2").try_divide(P("x1-x2")).has_value());
  try {
    (void)P("x1^2+1").divide_exact(P("x1-1"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "not divisible");
  }
}

TEST_CASE("division round trip on random inputs") {
  std::mt19937 rng(11);
  std::vector<VarId> vars{x(1), x(2), x(3)};
  for (int i = 0; i < 40; ++i) {
    Poly p = test::random_poly(rng, vars, 6, 6);
    Poly q = test::random_poly(rng, vars, 6, 4);
    if (q.is_zero()) continue;
    CHECK((p * q).divide_exact(q) == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(7);
  std::vector<VarId> vars{x(1), x(2), x(3)};
  for (int i = 0; i < 40; ++i) {
    Poly a = test::random_poly(rng, vars, 6, 5);
    Poly b = test::random_poly(rng, vars, 6, 5);
    Poly c = test::random_poly(rng, vars, 6, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Poly());
  }
}

TEST_CASE("one-minus helpers") {
  Monomial m = Monomial::of({{x(1), 2}, {x(2), 1}});
  Poly p = P("3 + x1*x2 - x2^4");
  CHECK(p.mul_one_minus(m) == p * (Poly(1) - Poly::monomial(m)));
  CHECK(p.mul_one_minus(m, 3) == p * (Poly(1) - Poly::monomial(m)).pow(3));
  CHECK(*p.mul_one_minus(m).div_one_minus(m) == p);
  CHECK_FALSE(p.div_one_minus(m).has_value());
}

TEST_CASE("monomial substitution") {
  Substitution s;
  s.set(x(1), Monomial::of({{x(1), 1}, {z(1), 1}}));
  s.set(x(2), Monomial::of({{x(2), 1}, {z(1), -1}}));
  CHECK(substitute_monomials(P("x1*x2"), s) == P("x1*x2"));
  CHECK(substitute_monomials(P("x1^2*x2"), s) == P("x1^2*x2*z1"));

  Substitution bad;
  bad.set(x(1), Monomial::of(x(2), -1));
  try {
    (void)substitute_monomials(P("x1"), bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "negative exponent on non-Z variable");
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(3);
  std::vector<VarId> vars{x(1), x(2), x(3)};
  Substitution s;
  s.set(x(1), Monomial::of({{x(1), 1}, {z(1), 1}}));
  s.set(x(2), Monomial::of({{x(2), 1}, {z(1), -1}, {z(2), 1}}));
  s.set(x(3), Monomial::of({{x(3), 1}, {z(2), -1}}), Rational(-2));
  for (int i = 0; i < 30; ++i) {
    Poly a = test::random_poly(rng, vars, 5, 5);
    Poly b = test::random_poly(rng, vars, 5, 5);
    CHECK(substitute_monomials(a * b, s) == substitute_monomials(a, s) * substitute_monomials(b, s));
    CHECK(substitute_monomials(a + b, s) == substitute_monomials(a, s) + substitute_monomials(b, s));
  }
}

TEST_CASE("Vandermonde product") {
  CHECK(vandermonde_product(1) == Poly(1));
  CHECK(vandermonde_product(2) == P("x1-x2"));
  Poly v3 = vandermonde_product(3);
  CHECK(v3 == P("(x1-x2)*(x1-x3)*(x2-x3)"));
  CHECK(v3.size() == 6);
  for (int d = 2; d <= 5; ++d) {
    Poly vd = vandermonde_product(d);
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) CHECK(vd.substitute(swap(i, j)) == -vd);
  }
}

TEST_CASE("canonical text round trip") {
  std::mt19937 rng(5);
  std::vector<VarId> vars{x(1), x(2), z(1)};
  for (int i = 0; i < 30; ++i) {
    Poly p = test::random_poly(rng, vars, 6, 6);
    CHECK(P(p.to_string().c_str()) == p);
  }
  CHECK(Poly().to_string() == "0");
}

TEST_CASE("coefficients and degrees") {
  Poly p = P("x1^3*z1 - 2*x1*z1^-2 + 5");
  CHECK(p.max_degree(z(1)) == 1);
  CHECK(p.min_degree(z(1)) == -2);
  CHECK(p.max_nonz_degree() == 3);
  CHECK(p.constant_term() == 5);
  auto byz = p.coefficients_in(z(1));
  CHECK(byz.size() == 3);
  CHECK(byz.at(-2) == P("-2*x1"));
  CHECK(p.truncate_nonz(1) == P("-2*x1*z1^-2 + 5"));
}
