#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>

#include "polyconvex/polynomial.hpp"

namespace polycvx {

/// b(x; y) = sum alpha_ijkl x_i x_j y_k y_l over i <= j, k <= l. Indices are
/// 1-based to match the text formats; the expansion uses x_i -> variable
/// i - 1 and y_k -> variable n + k - 1.
class BiquadraticForm {
 public:
  using Key = std::array<unsigned, 4>;

  explicit BiquadraticForm(std::size_t n);

  std::size_t n() const { return n_; }
  const std::map<Key, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c to the coefficient of x_i x_j y_k y_l; index order is irrelevant.
  /// Throws std::out_of_range for indices outside 1..n.
  void accumulate(unsigned i, unsigned j, unsigned k, unsigned l, const Rational& c);
  Rational coefficient(unsigned i, unsigned j, unsigned k, unsigned l) const;

  /// Polynomial in 2n variables (x; y).
  Polynomial expand() const;
  Rational evaluate(std::span<const Rational> x, std::span<const Rational> y) const;

  /// Inverse of expand. Throws std::invalid_argument if p (arity 2n) has a
  /// monomial that is not x_i x_j y_k y_l.
  static BiquadraticForm from_polynomial(const Polynomial& p);

  friend bool operator==(const BiquadraticForm& a, const BiquadraticForm& b) = default;

 private:
  Key canonical(unsigned i, unsigned j, unsigned k, unsigned l) const;

  std::size_t n_;
  std::map<Key, Rational> coeffs_;
};

}  // namespace polycvx
