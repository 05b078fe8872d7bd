#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyconvex/matrix.hpp"
#include "polyconvex/polynomial.hpp"

namespace polycvx {

/// Vector of polynomials sharing one arity (e.g. a gradient).
struct PolyVector {
  std::size_t arity = 0;
  std::vector<Polynomial> entries;

  std::size_t size() const { return entries.size(); }
  const Polynomial& operator[](std::size_t i) const { return entries[i]; }
  RationalVector evaluate(std::span<const Rational> point) const;
};

/// Matrix with polynomial entries of a shared arity, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t arity() const { return arity_; }

  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;
  RationalMatrix evaluate(std::span<const Rational> point) const;
  PolyMatrix transpose() const;
  /// Copy of the block starting at (r0, c0).
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Rational& c, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t arity_;
  std::vector<Polynomial> entries_;
};

/// p(x) = 1/2 x^T Q x + q^T x + c with Q symmetric.
struct QuadraticData {
  RationalMatrix Q;
  RationalVector q;
  Rational c;

  Polynomial reconstruct() const;
};

/// Formal partial derivative with respect to variable `index` (0-based).
Polynomial partial(const Polynomial& p, std::size_t index);

PolyVector gradient(const Polynomial& p);

/// Matrix of second partials; checked symmetric before returning.
PolyMatrix hessian(const Polynomial& p);

/// Splits a polynomial of degree <= 2 into (Q, q, c). The coefficient of
/// x_i x_j (i != j) goes to both Q_ij and Q_ji. Throws std::invalid_argument
/// on higher degree.
QuadraticData extract_quadratic(const Polynomial& p);

/// y^T M y where y is a fresh block of M.rows() variables appended after the
/// variables of M. The result has arity M.arity() + M.rows().
Polynomial quadratic_form(const PolyMatrix& m);

/// Same as quadratic_form but with an explicit variable layout: entry
/// variables are mapped through `entry_map` and block variable k becomes
/// `block_vars[k]`, all inside a polynomial of `arity` variables.
Polynomial quadratic_form(const PolyMatrix& m, std::size_t arity,
                          std::span<const std::size_t> entry_map,
                          std::span<const std::size_t> block_vars);

}  // namespace polycvx
