#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyconvex/rational.hpp"

namespace polycvx {

/// Exponent vector of a monomial; its length is the arity of the owning
/// polynomial.
using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 most significant. Strict total order on exponent vectors of equal length.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector under graded lex order;
/// zero coefficients are never stored. Variables are indexed from 0 in the
/// C++ API (x1 in text is index 0). Values are immutable from the outside;
/// every operation returns a new polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  /// The zero polynomial in `arity` variables.
  explicit Polynomial(std::size_t arity);

  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial variable(std::size_t arity, std::size_t index);
  static Polynomial monomial(std::size_t arity, Exponents exponents, const Rational& c);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; the zero polynomial reports 0 (check is_zero()).
  unsigned degree() const;
  /// True iff every stored monomial has the same degree. The zero polynomial
  /// counts as homogeneous.
  bool is_homogeneous() const;
  bool is_constant() const { return degree() == 0; }

  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  /// Largest term under graded lex. Throws std::domain_error on zero.
  const std::pair<const Exponents, Rational>& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().second; }

  /// The sum of all terms of exactly degree `d`.
  Polynomial homogeneous_part(unsigned d) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces variable i by images[i]. All images must share one arity, which
  /// becomes the arity of the result.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Renames variable i to variable index_map[i] in a polynomial of
  /// `new_arity` variables.
  Polynomial embed(std::size_t new_arity, std::span<const std::size_t> index_map) const;

  /// Variables that occur in at least one term.
  std::vector<bool> used_variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Adds c * x^e in place (merging with an existing term).
  void add_term(const Exponents& e, const Rational& c);

 private:
  void require_same_arity(const Polynomial& o, const char* op) const;

  std::size_t arity_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);
Polynomial scale(const Polynomial& p, const Rational& c);

/// Dense univariate polynomial in t; coefficient i multiplies t^i.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// c * t^k
  static UniPoly monomial(unsigned k, const Rational& c);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(unsigned i) const;

  bool is_zero() const { return coeffs_.empty(); }
  unsigned degree() const { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1); }
  /// Zero for the zero polynomial.
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& t) const;
  /// Sign of the value at t (-1, 0, 1).
  int sign_at(const Rational& t) const { return evaluate(t).sign(); }

  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& u, unsigned k);

/// q(t) = p(base + t * dir).
UniPoly restrict_line(const Polynomial& p, std::span<const Rational> base,
                      std::span<const Rational> dir);

/// The multivariate polynomial h(xi^T x) in xi.size() variables.
/// Throws std::invalid_argument when xi is zero.
Polynomial compose_linear(const UniPoly& h, std::span<const Rational> xi);

/// Unique polynomial of degree < samples.size() through all (t, v) pairs.
/// Throws std::invalid_argument on duplicate abscissae or an empty sample set.
UniPoly interpolate(std::span<const std::pair<Rational, Rational>> samples);

}  // namespace polycvx
