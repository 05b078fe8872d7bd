#include "polyconvex/roots.hpp"

#include <stdexcept>

namespace polycvx {

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const Rational& t) const {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& u : chain) s.push_back(u.sign_at(t));
  return count_variations(s);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& u : chain) s.push_back(u.leading_coefficient().sign());
  return count_variations(s);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& u : chain) {
    const int lc = u.leading_coefficient().sign();
    s.push_back(u.degree() % 2 == 0 ? lc : -lc);
  }
  return count_variations(s);
}

int SturmSequence::roots_in(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

SturmSequence sturm_chain(const UniPoly& u) {
  if (u.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  SturmSequence seq;
  seq.chain.push_back(u);
  UniPoly next = u.derivative();
  while (!next.is_zero()) {
    seq.chain.push_back(next);
    const auto& a = seq.chain[seq.chain.size() - 2];
    next = -divmod(a, seq.chain.back()).second;
  }
  return seq;
}

int count_real_roots(const UniPoly& u) {
  const SturmSequence s = sturm_chain(u);
  return s.variations_at_neg_infinity() - s.variations_at_pos_infinity();
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& u) {
  if (u.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (u.degree() == 0) return out;
  const UniPoly f = u.monic();
  const UniPoly fp = f.derivative();
  const UniPoly a0 = gcd(f, fp);
  UniPoly b = divmod(f, a0).first;
  UniPoly c = divmod(fp, a0).first;
  UniPoly d = c - b.derivative();
  unsigned k = 1;
  while (b.degree() > 0) {
    const UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, k);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& u) {
  if (u.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  return divmod(u, gcd(u, u.derivative())).first.monic();
}

Rational cauchy_root_bound(const UniPoly& u) {
  if (u.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  const Rational lc = u.leading_coefficient().abs();
  Rational m;
  for (unsigned i = 0; i < u.degree(); ++i) m = max(m, u.coefficient(i).abs() / lc);
  return m + Rational(1);
}

namespace {

// Collects roots of squarefree `s` inside the open interval (lo, hi), where
// neither end is a root and `count` roots are known to lie inside.
void isolate(const UniPoly& s, const SturmSequence& seq, const Rational& lo, const Rational& hi, int count,
             std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = (lo + hi) / Rational(2);
  if (s.sign_at(mid) != 0) {
    const int left = seq.roots_in(lo, mid);
    isolate(s, seq, lo, mid, left, out);
    isolate(s, seq, mid, hi, count - left, out);
    return;
  }
  // mid is an exact root: carve out a small neighbourhood with no other root.
  Rational delta = (hi - lo) / Rational(4);
  for (;;) {
    const Rational a = mid - delta;
    const Rational b = mid + delta;
    if (s.sign_at(a) != 0 && s.sign_at(b) != 0 && seq.roots_in(a, b) == 1) {
      const int left = seq.roots_in(lo, a);
      isolate(s, seq, lo, a, left, out);
      out.push_back({mid, mid});
      isolate(s, seq, b, hi, count - left - 1, out);
      return;
    }
    delta /= Rational(2);
  }
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& u) {
  if (u.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  if (u.degree() == 0) return out;
  const UniPoly s = squarefree_part(u);
  const SturmSequence seq = sturm_chain(s);
  const Rational bound = cauchy_root_bound(s);
  const int total = seq.variations_at_neg_infinity() - seq.variations_at_pos_infinity();
  isolate(s, seq, -bound, bound, total, out);
  return out;
}

RootInterval refine_root(const UniPoly& s, RootInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  int lo_sign = s.sign_at(iv.lo);
  while (iv.hi - iv.lo > width) {
    const Rational mid = (iv.lo + iv.hi) / Rational(2);
    const int ms = s.sign_at(mid);
    if (ms == 0) return {mid, mid};
    if (ms == lo_sign) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

}  // namespace polycvx
