#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "polyconvex/calculus.hpp"
#include "polyconvex/text.hpp"

using namespace polycvx;

namespace {

Polynomial P(const char* text, std::size_t arity) { return parse_polynomial(text, arity); }

}  // namespace

TEST_CASE("partial derivatives") {
  CHECK(partial(P("x1^3", 1), 0) == P("3*x1^2", 1));
  CHECK(partial(P("x1^3", 2), 1).is_zero());
  CHECK(partial(P("x1^2*x2^2", 2), 0) == P("2*x1*x2^2", 2));
  CHECK_THROWS_AS(partial(P("x1", 1), 1), std::out_of_range);
}

TEST_CASE("gradient") {
  const PolyVector g = gradient(P("x1^3 + x2", 2));
  CHECK(g[0] == P("3*x1^2", 2));
  CHECK(g[1] == P("1", 2));

  // h(xi^T x) with h = t^3, xi = (1, 2): gradient is xi * 3 (x1 + 2 x2)^2
  const PolyVector c = gradient(P("(x1 + 2*x2)^3", 2));
  CHECK(c[0] == P("3*(x1+2*x2)^2", 2));
  CHECK(c[1] == P("6*(x1+2*x2)^2", 2));

  const PolyVector z = gradient(P("5", 3));
  CHECK(z.size() == 3);
  for (const auto& e : z.entries) CHECK(e.is_zero());
}

TEST_CASE("hessian") {
  const PolyMatrix h1 = hessian(P("x1^4", 1));
  CHECK(h1(0, 0) == P("12*x1^2", 1));

  const PolyMatrix hq = hessian(P("3*x1^2 - 2*x1*x2 + x2^2 + 5*x1 - 1", 2));
  CHECK(hq.evaluate(RationalVector{7, -3}) == RationalMatrix::from_rows({{6, -2}, {-2, 2}}));

  const PolyMatrix h = hessian(P("x1^2*x2^2 + 2*x1^4 + 2*x2^4", 2));
  CHECK(h(0, 0) == P("24*x1^2 + 2*x2^2", 2));
  CHECK(h(0, 1) == P("4*x1*x2", 2));
  CHECK(h(1, 0) == P("4*x1*x2", 2));
  CHECK(h(1, 1) == P("2*x1^2 + 24*x2^2", 2));
}

TEST_CASE("extract_quadratic") {
  const QuadraticData a = extract_quadratic(P("x1*x2", 2));
  CHECK(a.Q == RationalMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(a.q == RationalVector{0, 0});
  CHECK(a.c.is_zero());
  CHECK(extract_quadratic(P("x1^2 + x2^2", 2)).Q == RationalMatrix::from_rows({{2, 0}, {0, 2}}));
  CHECK(extract_quadratic(P("(x1+x2)^2", 2)).Q == RationalMatrix::from_rows({{2, 2}, {2, 2}}));
  CHECK_THROWS_AS(extract_quadratic(P("x1^3", 1)), std::invalid_argument);

  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    const Polynomial p = oracle::random_polynomial(rng, n, 2, 8, 9);
    const QuadraticData d = extract_quadratic(p);
    CHECK(d.Q.is_symmetric());
    CHECK(d.reconstruct() == p);
  }
}

TEST_CASE("quadratic_form") {
  PolyMatrix id(2, 2, 1);
  id(0, 0) = Polynomial::constant(1, Rational(1));
  id(1, 1) = Polynomial::constant(1, Rational(1));
  // entry arity 1, block appended as x2, x3
  CHECK(quadratic_form(id) == P("x2^2 + x3^2", 3));

  PolyMatrix m(1, 1, 1);
  m(0, 0) = P("x1", 1);
  CHECK(quadratic_form(m) == P("x1*x2^2", 2));

  const Polynomial f = quadratic_form(hessian(P("x1^2*x2^2 + 2*x1^4 + 2*x2^4", 2)));
  CHECK(f == P("24*x1^2*x3^2 + 2*x2^2*x3^2 + 8*x1*x2*x3*x4 + 2*x1^2*x4^2 + 24*x2^2*x4^2", 4));
}

TEST_CASE("mixed partials commute") {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const Polynomial p = oracle::random_polynomial(rng, n, 6, 8, 9);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK(partial(partial(p, i), j) == partial(partial(p, j), i));
    }
    CHECK(hessian(p).is_symmetric());
  }
}

TEST_CASE("Euler identities for forms") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const unsigned d = static_cast<unsigned>(oracle::uniform(rng, 2, 6));
    const Polynomial p = oracle::random_form(rng, n, d, 6, 9);
    Polynomial euler(n);
    for (std::size_t i = 0; i < n; ++i) euler += Polynomial::variable(n, i) * partial(p, i);
    CHECK(euler == Rational(static_cast<long>(d)) * p);

    // x^T H(x) x = d (d - 1) p
    const PolyMatrix h = hessian(p);
    Polynomial xhx(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) xhx += Polynomial::variable(n, i) * Polynomial::variable(n, j) * h(i, j);
    }
    CHECK(xhx == Rational(static_cast<long>(d * (d - 1))) * p);
  }
}

TEST_CASE("gradient of h(xi^T x) is xi h'(xi^T x)") {
  std::mt19937_64 rng(24);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    RationalVector xi = oracle::random_point(rng, n, 3, 2);
    if (std::all_of(xi.begin(), xi.end(), [](const Rational& r) { return r.is_zero(); })) xi[0] = Rational(1);
    const UniPoly h = oracle::random_unipoly(rng, 6, 9);
    const PolyVector g = gradient(compose_linear(h, xi));
    const UniPoly dh = h.derivative();
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial expected = dh.is_zero() ? Polynomial(n) : xi[i] * compose_linear(dh, xi);
      CHECK(g[i] == expected);
    }
  }
}
