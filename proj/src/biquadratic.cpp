#include "polyconvex/biquadratic.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polycvx {

BiquadraticForm::BiquadraticForm(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("biquadratic form needs n >= 1");
}

BiquadraticForm::Key BiquadraticForm::canonical(unsigned i, unsigned j, unsigned k, unsigned l) const {
  for (unsigned v : {i, j, k, l}) {
    if (v < 1 || v > n_) throw std::out_of_range("biquadratic index " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  return {i, j, k, l};
}

void BiquadraticForm::accumulate(unsigned i, unsigned j, unsigned k, unsigned l, const Rational& c) {
  const Key key = canonical(i, j, k, l);
  Rational& slot = coeffs_[key];
  slot += c;
  if (slot.is_zero()) coeffs_.erase(key);
}

Rational BiquadraticForm::coefficient(unsigned i, unsigned j, unsigned k, unsigned l) const {
  const auto it = coeffs_.find(canonical(i, j, k, l));
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Polynomial BiquadraticForm::expand() const {
  Polynomial p(2 * n_);
  for (const auto& [key, c] : coeffs_) {
    Exponents e(2 * n_, 0);
    e[key[0] - 1] += 1;
    e[key[1] - 1] += 1;
    e[n_ + key[2] - 1] += 1;
    e[n_ + key[3] - 1] += 1;
    p.add_term(e, c);
  }
  return p;
}

Rational BiquadraticForm::evaluate(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("biquadratic evaluate: dimension mismatch");
  Rational s;
  for (const auto& [key, c] : coeffs_) s += c * x[key[0] - 1] * x[key[1] - 1] * y[key[2] - 1] * y[key[3] - 1];
  return s;
}

BiquadraticForm BiquadraticForm::from_polynomial(const Polynomial& p) {
  if (p.arity() == 0 || p.arity() % 2 != 0) throw std::invalid_argument("biquadratic: arity must be 2n");
  const std::size_t n = p.arity() / 2;
  BiquadraticForm b(n);
  for (const auto& [e, c] : p.terms()) {
    std::vector<unsigned> xs;
    std::vector<unsigned> ys;
    for (std::size_t v = 0; v < 2 * n; ++v) {
      for (unsigned r = 0; r < e[v]; ++r) (v < n ? xs : ys).push_back(static_cast<unsigned>(v < n ? v + 1 : v - n + 1));
    }
    if (xs.size() != 2 || ys.size() != 2) throw std::invalid_argument("not a biquadratic form: monomial of bidegree other than (2, 2)");
    b.accumulate(xs[0], xs[1], ys[0], ys[1], c);
  }
  return b;
}

}  // namespace polycvx
