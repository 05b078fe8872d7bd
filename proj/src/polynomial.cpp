#include "polyconvex/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace polycvx {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0U);
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) {
    throw std::out_of_range("variable index " + std::to_string(index + 1) + " exceeds arity " +
                            std::to_string(arity));
  }
  Exponents e(arity, 0);
  e[index] = 1;
  return monomial(arity, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(std::size_t arity, Exponents exponents, const Rational& c) {
  if (exponents.size() != arity) throw ArityMismatch("monomial exponent length differs from arity");
  Polynomial p(arity);
  p.add_term(exponents, c);
  return p;
}

unsigned Polynomial::degree() const {
  // Graded order puts the highest degree last.
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(arity_, 0)); }

const std::pair<const Exponents, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) {
    throw ArityMismatch("evaluation point has " + std::to_string(point.size()) +
                        " coordinates, polynomial has arity " + std::to_string(arity_));
  }
  // Cache powers per variable up to the largest exponent that occurs.
  std::vector<unsigned> max_exp(arity_, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  }
  std::vector<std::vector<Rational>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    powers[i].reserve(max_exp[i] + 1);
    powers[i].emplace_back(1);
    for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != arity_) throw ArityMismatch("substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().arity();
  for (const auto& img : images) {
    if (img.arity() != target) throw ArityMismatch("substitution images differ in arity");
  }
  std::vector<std::vector<Polynomial>> powers(arity_);
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
      term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::embed(std::size_t new_arity, std::span<const std::size_t> index_map) const {
  if (index_map.size() != arity_) throw ArityMismatch("embedding needs one target per variable");
  Polynomial out(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_arity, 0);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (index_map[i] >= new_arity) throw std::out_of_range("embedding target out of range");
      ne[index_map[i]] += e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

std::vector<bool> Polynomial::used_variables() const {
  std::vector<bool> used(arity_, false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) used[i] = used[i] || e[i] != 0;
  }
  return used;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != arity_) throw ArityMismatch("term exponent length differs from arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_arity(const Polynomial& o, const char* op) const {
  if (arity_ != o.arity_) {
    throw ArityMismatch(std::string(op) + ": arity " + std::to_string(arity_) + " vs " +
                        std::to_string(o.arity_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_arity(o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_arity(o, "subtract");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_arity(b, "multiply");
  Polynomial out(a.arity_);
  Exponents e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.arity(), Rational(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading_coefficient().inverse();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& div = b.coefficients();
  if (rem.size() < div.size()) return {UniPoly{}, a};
  std::vector<Rational> quot(rem.size() - div.size() + 1);
  const Rational lead_inv = div.back().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + div.size() - 1] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
  }
  rem.resize(div.size() - 1);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly pow(const UniPoly& u, unsigned k) {
  UniPoly result = UniPoly::constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) result = result * u;
  return result;
}

UniPoly restrict_line(const Polynomial& p, std::span<const Rational> base,
                      std::span<const Rational> dir) {
  if (base.size() != p.arity() || dir.size() != p.arity()) {
    throw ArityMismatch("restrict_line: vector length differs from arity");
  }
  // Each coordinate is the affine polynomial base_i + t*dir_i; expand by
  // multiplying out each monomial.
  std::vector<std::vector<UniPoly>> powers(p.arity());
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(UniPoly::constant(Rational(1)));
      const UniPoly lin({base[i], dir[i]});
      while (cache.size() <= e[i]) cache.push_back(cache.back() * lin);
      term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

Polynomial compose_linear(const UniPoly& h, std::span<const Rational> xi) {
  if (xi.empty() || std::all_of(xi.begin(), xi.end(), [](const Rational& r) { return r.is_zero(); })) {
    throw std::invalid_argument("compose_linear needs a nonzero direction");
  }
  const std::size_t n = xi.size();
  Polynomial lin(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    lin.add_term(e, xi[i]);
  }
  // Horner in the multivariate ring.
  Polynomial acc(n);
  const auto& c = h.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * lin + Polynomial::constant(n, *it);
  }
  return acc;
}

UniPoly interpolate(std::span<const std::pair<Rational, Rational>> samples) {
  if (samples.empty()) throw std::invalid_argument("interpolate needs at least one sample");
  const std::size_t m = samples.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (samples[i].first == samples[j].first) {
        throw std::invalid_argument("interpolate: duplicate abscissa " + samples[i].first.str());
      }
    }
  }
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = samples[i].second;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - level].first);
    }
  }
  UniPoly result = UniPoly::constant(dd[m - 1]);
  for (std::size_t k = m - 1; k-- > 0;) {
    result = result * UniPoly({-samples[k].first, Rational(1)}) + UniPoly::constant(dd[k]);
  }
  return result;
}

}  // namespace polycvx
