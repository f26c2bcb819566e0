#include <doctest.h>

#include "rsf/error.hpp"
#include "rsf/json_io.hpp"
#include "rsf/nice_rational.hpp"
#include "rsf/parse.hpp"
#include "test_util.hpp"

using namespace rsf;
using rsf::test::v;
using rsf::test::x;
using rsf::test::z;

namespace {

NiceRational E(const std::string& s) { return parse_expr(s); }

Substitution constants(const std::vector<std::pair<VarId, long>>& values) {
  Substitution s;
  for (const auto& [var, c] : values) s.set_constant(var, Rational(c));
  return s;
}

}  // namespace

TEST_CASE("sums and products") {
  CHECK((E("1/(1-x1)") + E("-1/(1-x1)")).is_zero());
  NiceRational sq = E("1/(1-x1)") * E("1/(1-x1)");
  REQUIRE(sq.den().size() == 1);
  CHECK(sq.den().begin()->second == 2);
  CHECK(sq.num() == Poly(1));

  NiceRational s = E("1/(1-x1)") + E("1/(1-x1^2)");
  CHECK(nr_equal(s, E("(2+x1)/(1-x1^2)")));
}

TEST_CASE("f + g - g = f on random inputs") {
  std::mt19937 rng(19);
  std::vector<VarId> vars{x(1), x(2)};
  for (int i = 0; i < 40; ++i) {
    NiceRational f = test::random_nice(rng, vars, 3);
    NiceRational g = test::random_nice(rng, vars, 3);
    CHECK(nr_equal(f + g - g, f));
    CHECK(nr_equal(f * g, g * f));
  }
}

TEST_CASE("normalization cancels and is idempotent") {
  NiceRational f = E("(1-x1^2)/(1-x1)");
  CHECK(f.is_polynomial());
  CHECK(f.num() == E("1+x1").num());
  std::mt19937 rng(23);
  for (int i = 0; i < 30; ++i) {
    NiceRational g = test::random_nice(rng, {x(1), x(2)}, 3);
    NiceRational again(g.num(), g.den());
    CHECK(again == g);
    CHECK(nr_equal(again, g));
  }
}

TEST_CASE("factors are oriented with positive degree") {
  NiceRational f = E("1/(1-x1^-1)");
  CHECK(f.is_nice());
  CHECK(nr_equal(f, E("-x1/(1-x1)")));
}

TEST_CASE("series truncation") {
  CHECK(series_truncate(E("1/(1-x1)"), 3) == E("1+x1+x1^2+x1^3").num());
  NiceRational h = E("1/((1-x1^3)*(1-x1^2*x2)*(1-x1*x2^2)*(1-x2^3))");
  CHECK(series_truncate(h, 3) == E("1+x1^3+x1^2*x2+x1*x2^2+x2^3").num());
  CHECK(series_truncate(E("1/(1-x1*z1^-1)"), 2) == E("1+x1*z1^-1+x1^2*z1^-2").num());
  try {
    (void)series_truncate(NiceRational::over_binomials(1, {{Monomial::of(z(1)), 1}}), 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "non-expandable factor");
  }
}

TEST_CASE("truncation respects sums and products") {
  std::mt19937 rng(29);
  std::vector<VarId> vars{x(1), x(2)};
  for (int i = 0; i < 25; ++i) {
    NiceRational f = test::random_nice(rng, vars, 3);
    NiceRational g = test::random_nice(rng, vars, 3);
    for (int n : {0, 3, 6, 8}) {
      CHECK(series_truncate(f * g, n) == Poly::mul_truncated(series_truncate(f, n), series_truncate(g, n), n));
      CHECK(series_truncate(f + g, n) == series_truncate(f, n) + series_truncate(g, n));
    }
  }
}

TEST_CASE("exact equality") {
  Denominator d;
  d[BinomialFactor::standard(Monomial::of(x(1)))] = 1;
  CHECK(nr_equal(NiceRational(E("1-x1^2").num(), d), E("1+x1")));
  CHECK_FALSE(nr_equal(E("1/(1-x1)"), E("1/(1-x2)")));
  CHECK(nr_equal(E("(1-t+t^2)/((1-t)^2*(1-t^4))"), E("(1+t^3)/((1-t)*(1-t^2)*(1-t^4))")));
}

TEST_CASE("equality agrees with series comparison") {
  std::mt19937 rng(31);
  std::vector<VarId> vars{x(1), x(2)};
  for (int i = 0; i < 30; ++i) {
    NiceRational f = test::random_nice(rng, vars, 2);
    NiceRational g = (i % 2 == 0) ? f * E("(1-x1*x2)/(1-x1*x2)") + E("x1-x1") : test::random_nice(rng, vars, 2);
    int n = (f.num() * g.expanded_den()).max_nonz_degree() + (g.num() * f.expanded_den()).max_nonz_degree() + 1;
    CHECK(nr_equal(f, g) == (series_truncate(f, n) == series_truncate(g, n)));
  }
}

TEST_CASE("specialization") {
  for (int d = 2; d <= 4; ++d) {
    NiceRational m = 1;
    for (int i = 1; i <= d; ++i)
      m *= NiceRational::over_binomials(1, {{Monomial::of({{v(i), 2}, {VarId::t(), i}}), 1}});
    std::vector<std::pair<VarId, long>> sl, ut;
    for (int i = 1; i <= d; ++i) {
      sl.emplace_back(v(i), i == d ? 1 : 0);
      ut.emplace_back(v(i), 1);
    }
    CHECK(nr_equal(specialize(m, constants(sl)), E("1/(1-t^" + std::to_string(d) + ")")));
    NiceRational expect_ut = 1;
    for (int i = 1; i <= d; ++i) expect_ut *= E("1/(1-t^" + std::to_string(i) + ")");
    CHECK(nr_equal(specialize(m, constants(ut)), expect_ut));
  }
  try {
    (void)specialize(E("1/(1-v2)"), constants({{v(2), 1}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "pole under specialization");
  }
}

TEST_CASE("specialization commutes with arithmetic") {
  std::mt19937 rng(37);
  std::vector<VarId> vars{x(1), x(2), VarId::t()};
  Substitution s;
  s.set_constant(x(1), 1);
  s.set(x(2), Monomial::of(VarId::t(), 2));
  for (int i = 0; i < 25; ++i) {
    NiceRational f = test::random_nice(rng, vars, 2) * E("1/(1-x1*t)");
    NiceRational g = test::random_nice(rng, vars, 2) * E("1/(1-x2*t)");
    NiceRational sf, sg;
    try {
      sf = specialize(f, s);
      sg = specialize(g, s);
    } catch (const Error&) {
      continue;
    }
    CHECK(nr_equal(specialize(f + g, s), sf + sg));
    CHECK(nr_equal(specialize(f * g, s), sf * sg));
  }
}

TEST_CASE("binomial reduction keeps the value") {
  NiceRational f = E("(1+t^3)/((1-t)*(1-t^2)*(1-t^4))");
  NiceRational r = reduce_binomials(f);
  CHECK(nr_equal(r, f));
  CHECK(nr_equal(reduce_binomials(E("(1-t^6)/((1-t^2)*(1-t^3))")), E("(1+t^3)/(1-t^2)")));
}

TEST_CASE("JSON round trip") {
  std::mt19937 rng(41);
  for (int i = 0; i < 30; ++i) {
    NiceRational f = test::random_nice(rng, {x(1), x(2), z(1)}, 3);
    CHECK(nice_rational_from_json(to_json(f)) == f);
    CHECK(nice_rational_from_json(Json::parse(to_json(f).dump())) == f);
  }
  NiceRational p(E("z1^2").num(), Denominator{{BinomialFactor::pivoted(z(1), 2, Monomial::of(x(1))), 1}});
  CHECK(nice_rational_from_json(to_json(p)) == p);
}
