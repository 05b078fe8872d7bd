#include "polyconvex/calculus.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace polycvx {

RationalVector PolyVector::evaluate(std::span<const Rational> point) const {
  RationalVector out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.evaluate(point));
  return out;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
    : rows_(rows), cols_(cols), arity_(arity), entries_(rows * cols, Polynomial(arity)) {}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

RationalMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).evaluate(point);
  }
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, arity_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("block exceeds matrix");
  PolyMatrix out(rows, cols, arity_);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (auto& e : out.entries_) e *= c;
  return out;
}

Polynomial QuadraticData::reconstruct() const {
  const std::size_t n = q.size();
  Polynomial p = Polynomial::constant(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    p.add_term(e, q[i]);
    for (std::size_t j = 0; j < n; ++j) {
      Exponents ee(n, 0);
      ee[i] += 1;
      ee[j] += 1;
      p.add_term(ee, Q(i, j) / Rational(2));
    }
  }
  return p;
}

Polynomial partial(const Polynomial& p, std::size_t index) {
  if (index >= p.arity()) {
    throw std::out_of_range("partial: variable index " + std::to_string(index + 1) + " exceeds arity " +
                            std::to_string(p.arity()));
  }
  Polynomial out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    out.add_term(d, c * Rational(static_cast<long>(e[index])));
  }
  return out;
}

PolyVector gradient(const Polynomial& p) {
  PolyVector g{p.arity(), {}};
  g.entries.reserve(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) g.entries.push_back(partial(p, i));
  return g;
}

PolyMatrix hessian(const Polynomial& p) {
  const std::size_t n = p.arity();
  PolyMatrix h(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial di = partial(p, i);
    for (std::size_t j = 0; j < n; ++j) h(i, j) = partial(di, j);
  }
  if (!h.is_symmetric()) throw std::logic_error("hessian: mixed partials do not commute");
  return h;
}

QuadraticData extract_quadratic(const Polynomial& p) {
  if (p.degree() > 2) {
    throw std::invalid_argument("extract_quadratic: degree " + std::to_string(p.degree()) + " exceeds 2");
  }
  const std::size_t n = p.arity();
  QuadraticData out{RationalMatrix(n, n), RationalVector(n), p.constant_term()};
  for (const auto& [e, c] : p.terms()) {
    const unsigned d = total_degree(e);
    if (d == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] == 1) out.q[i] = c;
      }
    } else if (d == 2) {
      std::size_t i = n;
      std::size_t j = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (e[k] == 2) i = j = k;
        if (e[k] == 1) (i == n ? i : j) = k;
      }
      if (i == j) {
        out.Q(i, i) = c * Rational(2);
      } else {
        out.Q(i, j) = c;
        out.Q(j, i) = c;
      }
    }
  }
  return out;
}

Polynomial quadratic_form(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("quadratic_form needs a square matrix");
  const std::size_t arity = m.arity() + m.rows();
  std::vector<std::size_t> entry_map(m.arity());
  std::iota(entry_map.begin(), entry_map.end(), 0);
  std::vector<std::size_t> block(m.rows());
  std::iota(block.begin(), block.end(), m.arity());
  return quadratic_form(m, arity, entry_map, block);
}

Polynomial quadratic_form(const PolyMatrix& m, std::size_t arity, std::span<const std::size_t> entry_map,
                          std::span<const std::size_t> block_vars) {
  if (m.rows() != m.cols()) throw std::invalid_argument("quadratic_form needs a square matrix");
  if (block_vars.size() != m.rows()) throw std::invalid_argument("quadratic_form: block size mismatch");
  Polynomial out(arity);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& entry = m(i, j);
      if (entry.is_zero()) continue;
      const Polynomial lifted = entry.embed(arity, entry_map);
      for (const auto& [e, c] : lifted.terms()) {
        Exponents ne = e;
        ne[block_vars[i]] += 1;
        ne[block_vars[j]] += 1;
        out.add_term(ne, c);
      }
    }
  }
  return out;
}

}  // namespace polycvx
