#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "polyconvex/polynomial.hpp"
#include "polyconvex/text.hpp"

using namespace polycvx;

namespace {

Polynomial P(const char* text, std::size_t arity) { return parse_polynomial(text, arity); }

Exponents E(std::initializer_list<std::uint32_t> e) { return Exponents(e); }

}  // namespace

TEST_CASE("rational literals stay canonical") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("parse expands products and powers") {
  const Polynomial p = P("x1^2 + 2*x1*x2", 2);
  CHECK(p.term_count() == 2);
  CHECK(p.coefficient(E({2, 0})) == Rational(1));
  CHECK(p.coefficient(E({1, 1})) == Rational(2));

  const Polynomial z = P("0", 3);
  CHECK(z.is_zero());
  CHECK(z.arity() == 3);

  const Polynomial sq = P("(x1+x2)^2", 2);
  CHECK(sq == P("x1^2 + 2*x1*x2 + x2^2", 2));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(P("x1 +", 1), ParseError);
  CHECK_THROWS_AS(P("x3", 2), ParseError);
  CHECK_THROWS_AS(P("1/0*x1", 1), ParseError);
  CHECK_THROWS_AS(P("x0", 1), ParseError);
  CHECK_THROWS_AS(P("2 x1", 1), ParseError);  // no implicit multiplication
  try {
    P("x1 + )", 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("unary minus binds looser than powers") {
  CHECK(P("-x1^2", 1) == -P("x1^2", 1));
  CHECK(P("-(x1+1)^2", 1) == -P("x1^2 + 2*x1 + 1", 1));
  // a signed literal is part of the base
  CHECK(P("-2^2", 1) == Polynomial::constant(1, Rational(4)));
  CHECK(P("x1 - -x2", 2) == P("x1 + x2", 2));
}

TEST_CASE("printing is canonical") {
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(to_string(P("x2^2 + 2*x1*x2 + x1^2", 2)) == "x1^2 + 2*x1*x2 + x2^2");
  CHECK(to_string(Polynomial::monomial(1, E({1}), Rational(-1, 2))) == "-1/2*x1");
  CHECK(to_string(P("3 - x1^3", 1)) == "-x1^3 + 3");
}

TEST_CASE("ring operations") {
  CHECK((P("x1", 1) + P("-x1", 1)).is_zero());
  CHECK(P("x1+x2", 2) * P("x1-x2", 2) == P("x1^2 - x2^2", 2));
  CHECK(pow(P("x1+1", 1), 0) == Polynomial::constant(1, Rational(1)));
  CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), ArityMismatch);
  CHECK(scale(P("x1 + 2", 1), Rational(1, 2)) == P("1/2*x1 + 1", 1));
}

TEST_CASE("evaluate") {
  CHECK(P("x1^2 + x2^2", 2).evaluate(RationalVector{3, 4}) == Rational(25));
  // x1 x2 y1 y2 at (1, -1, 1, 1)
  CHECK(P("x1*x2*x3*x4", 4).evaluate(RationalVector{1, -1, 1, 1}) == Rational(-1));
  CHECK(P("x1^3 - 7", 1).evaluate(RationalVector{0}) == Rational(-7));
  CHECK_THROWS(P("x1", 1).evaluate(RationalVector{1, 2}));
}

TEST_CASE("restrict_line") {
  CHECK(restrict_line(P("x1^3", 1), RationalVector{0}, RationalVector{1}) == UniPoly::monomial(3, Rational(1)));
  CHECK(restrict_line(P("x1^2 + x2^2", 2), RationalVector{1, 0}, RationalVector{0, 1}) ==
        UniPoly({Rational(1), Rational(0), Rational(1)}));
  // (-2 + 3t)^3 + 8 - 9t = 27t^3 - 54t^2 + 27t + 0
  const UniPoly q = restrict_line(P("x1^3 + x2", 2), RationalVector{-2, 8}, RationalVector{3, -9});
  CHECK(q == UniPoly({Rational(0), Rational(27), Rational(-54), Rational(27)}));
  CHECK(restrict_line(P("x1^2", 1), RationalVector{5}, RationalVector{0}) == UniPoly::constant(Rational(25)));
}

TEST_CASE("compose_linear") {
  CHECK(compose_linear(UniPoly::monomial(3, Rational(1)), RationalVector{1, 0}) == P("x1^3", 2));
  const UniPoly h({Rational(0), Rational(1), Rational(0), Rational(1)});
  CHECK(compose_linear(h, RationalVector{1, 2}) == P("(x1+2*x2)^3 + (x1+2*x2)", 2));
  CHECK(compose_linear(UniPoly::constant(Rational(7)), RationalVector{1}) == Polynomial::constant(1, Rational(7)));
  CHECK_THROWS_AS(compose_linear(h, RationalVector{0, 0}), std::invalid_argument);
}

TEST_CASE("interpolate") {
  using S = std::pair<Rational, Rational>;
  const std::vector<S> cubic{{0, 0}, {1, 1}, {-1, -1}, {2, 8}};
  CHECK(interpolate(cubic) == UniPoly::monomial(3, Rational(1)));
  CHECK(interpolate(std::vector<S>{{0, 5}}) == UniPoly::constant(Rational(5)));
  CHECK(interpolate(std::vector<S>{{1, 2}, {2, 3}, {3, 4}}) == UniPoly({Rational(1), Rational(1)}));
  CHECK_THROWS_AS(interpolate(std::vector<S>{{1, 2}, {1, 3}}), std::invalid_argument);
}

TEST_CASE("degree and homogeneity") {
  const Polynomial a = P("x1^4 + x1^2*x2^2", 2);
  CHECK(a.degree() == 4);
  CHECK(a.is_homogeneous());
  const Polynomial b = P("x1^4 - 8*x1^3 + 18*x1^2", 1);
  CHECK(b.degree() == 4);
  CHECK_FALSE(b.is_homogeneous());
  CHECK(Polynomial(3).is_zero());
  CHECK(Polynomial(3).degree() == 0);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const Polynomial a = oracle::random_polynomial(rng, n, 3, 5, 6);
    const Polynomial b = oracle::random_polynomial(rng, n, 3, 5, 6);
    const Polynomial c = oracle::random_polynomial(rng, n, 2, 4, 6);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    Polynomial p = oracle::random_polynomial(rng, n, 6, 6, 9);
    if (iter % 3 == 0) p *= Rational(oracle::uniform(rng, -7, 7), oracle::uniform(rng, 1, 9));
    REQUIRE(parse_polynomial(to_string(p), n) == p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const Polynomial a = oracle::random_polynomial(rng, n, 4, 5, 9);
    const Polynomial b = oracle::random_polynomial(rng, n, 4, 5, 9);
    const RationalVector x = oracle::random_point(rng, n);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("forms scale with the d-th power") {
  std::mt19937_64 rng(14);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const unsigned d = static_cast<unsigned>(oracle::uniform(rng, 1, 6));
    const Polynomial p = oracle::random_form(rng, n, d, 5, 9);
    const RationalVector x = oracle::random_point(rng, n);
    const Rational lambda(oracle::uniform(rng, -9, 9), oracle::uniform(rng, 1, 5));
    RationalVector lx = x;
    for (auto& v : lx) v *= lambda;
    CHECK(p.evaluate(lx) == pow(lambda, d) * p.evaluate(x));
  }
}

TEST_CASE("restriction agrees with evaluation on the line") {
  std::mt19937_64 rng(15);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const Polynomial p = oracle::random_polynomial(rng, n, 5, 6, 9);
    const RationalVector base = oracle::random_point(rng, n);
    const RationalVector dir = oracle::random_point(rng, n);
    const Rational t(oracle::uniform(rng, -20, 20), oracle::uniform(rng, 1, 7));
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = base[i] + t * dir[i];
    const UniPoly q = restrict_line(p, base, dir);
    CHECK(q.evaluate(t) == p.evaluate(x));
    CHECK(q.degree() <= p.degree());
  }
}
