#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyconvex/polynomial.hpp"
#include "polyconvex/rational.hpp"

namespace polycvx {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  /// Builds from nested rows; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector apply(std::span<const Rational> v) const;
  /// v^T M v.
  Rational quadratic_value(std::span<const Rational> v) const;

  RationalMatrix leading_block(std::size_t k) const;

  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by Gaussian elimination over Q with row swaps.
Rational determinant(const RationalMatrix& m);

/// det of the k x k top-left blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// det(t*I - M), obtained by interpolating det at n+1 integer points.
UniPoly characteristic_polynomial(const RationalMatrix& m);

/// Scales v by a positive rational so its entries are coprime integers.
RationalVector primitive_integer_vector(RationalVector v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace polycvx
