#include "polyconvex/deciders.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyconvex/calculus.hpp"
#include "polyconvex/roots.hpp"
#include "polyconvex/text.hpp"

namespace polycvx {

namespace {

const Rational kHalf(Integer(1), Integer(2));

Rational floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(q);
}

RationalVector scaled(const RationalVector& v, const Rational& s) {
  RationalVector out = v;
  for (auto& x : out) x *= s;
  return out;
}

// Isolating intervals of the real roots of u with nonzero ends, even where
// isolation hit a root exactly.
std::vector<RootInterval> open_root_intervals(const UniPoly& u) {
  const UniPoly s = squarefree_part(u);
  const SturmSequence seq = sturm_chain(s);
  std::vector<RootInterval> out;
  for (auto iv : isolate_real_roots(u)) {
    if (iv.exact()) {
      const Rational r = iv.lo;
      Rational delta(1);
      for (;;) {
        const Rational a = r - delta;
        const Rational b = r + delta;
        if (s.sign_at(a) != 0 && s.sign_at(b) != 0 && seq.roots_in(a, b) == 1) {
          iv = {a, b};
          break;
        }
        delta *= kHalf;
      }
    }
    out.push_back(iv);
  }
  return out;
}

// Points of the line x = t * xi / (xi^T xi), on which xi^T x = t.
RationalVector level_point(const RationalVector& xi, const Rational& t) {
  return scaled(xi, t / dot(xi, xi));
}

}  // namespace

std::string to_string(Property p) {
  switch (p) {
    case Property::Convex:
      return "convex";
    case Property::Strict:
      return "strict";
    case Property::Strong:
      return "strong";
    case Property::Quasi:
      return "quasi";
    case Property::Pseudo:
      return "pseudo";
  }
  return "convex";
}

Property parse_property(std::string_view name) {
  if (name == "convex") return Property::Convex;
  if (name == "strict") return Property::Strict;
  if (name == "strong") return Property::Strong;
  if (name == "quasi") return Property::Quasi;
  if (name == "pseudo") return Property::Pseudo;
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

Verdict decide_quadratic(const Polynomial& p, Property property) {
  if (p.degree() > 2) throw std::invalid_argument("decide_quadratic: degree exceeds 2");
  const QuadraticData data = extract_quadratic(p);
  const std::size_t n = p.arity();
  const PsdResult psd = psd_test_exact(data.Q);

  if (property == Property::Strict || property == Property::Strong) {
    const auto minors = leading_principal_minors(data.Q);
    if (std::all_of(minors.begin(), minors.end(), [](const Rational& m) { return m.sign() > 0; })) {
      return Verdict::yes("Q is positive definite (all leading principal minors positive)",
                          MinorTranscript{minors});
    }
    if (!psd.psd) {
      return Verdict::no("Q has a negative direction", IndefiniteDirection{RationalVector(n), psd.direction});
    }
    // PSD but singular: p is affine along any kernel direction.
    RationalVector k = primitive_integer_vector(psd.transcript.kernel.front());
    const auto first = std::find_if(k.begin(), k.end(), [](const Rational& r) { return !r.is_zero(); });
    if (first != k.end() && first->sign() < 0) k = scaled(k, Rational(-1));
    return Verdict::no("Q is singular; p is affine along a kernel direction", FlatDirection{RationalVector(n), k});
  }

  if (psd.psd) return Verdict::yes("Q is positive semidefinite", psd.transcript);

  const RationalVector& v = psd.direction;
  if (property == Property::Convex) {
    return Verdict::no("Q has a negative direction", IndefiniteDirection{RationalVector(n), v});
  }
  // Along t*v: p = (a/2) t^2 + b t + c with a = v^T Q v < 0; the vertex is a
  // strict maximum of the restriction.
  const Rational a = psd.value;
  const Rational b = dot(data.q, v);
  const Rational vertex = -b / a;
  if (property == Property::Quasi) {
    return Verdict::no("Q has a negative direction; the restriction has a strict maximum",
                       SublevelTriple{scaled(v, vertex - Rational(1)), scaled(v, vertex + Rational(1)), kHalf});
  }
  return Verdict::no("Q has a negative direction; the gradient vanishes along it at the vertex",
                     PseudoViolation{scaled(v, vertex), scaled(v, vertex + Rational(1))});
}

Rational min_eigenvalue_lower_bound(const RationalMatrix& q, const Rational& precision) {
  if (!q.is_symmetric()) throw std::invalid_argument("min_eigenvalue_lower_bound: matrix not symmetric");
  if (precision.sign() <= 0) throw std::invalid_argument("precision must be positive");
  const UniPoly chi = characteristic_polynomial(q);
  const auto roots = isolate_real_roots(chi);
  const RootInterval first = refine_root(squarefree_part(chi), roots.front(), precision);
  return first.lo;
}

std::variant<QuasiRepresentation, NotRepresentable> recover_representation(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("recover_representation: zero polynomial");
  const unsigned d = p.degree();
  if (d % 2 == 0) throw std::invalid_argument("recover_representation: degree must be odd");
  const std::size_t n = p.arity();
  const PolyVector grad = gradient(p);

  std::size_t ref = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!grad[i].is_zero()) {
      ref = i;
      break;
    }
  }
  const Rational ref_lc = grad[ref].leading_coefficient();
  RationalVector xi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (grad[i].is_zero()) continue;
    const Rational lc = grad[i].leading_coefficient();
    if (!(grad[i] * ref_lc == grad[ref] * lc)) {
      return NotRepresentable{NotRepresentable::Stage::NonProportionalGradient,
                              "partial derivatives " + std::to_string(ref + 1) + " and " + std::to_string(i + 1) +
                                  " are not proportional"};
    }
    xi[i] = lc / ref_lc;
  }

  // h(k * xi^T xi) = p(k * xi), k = 1..d+1.
  const Rational norm = dot(xi, xi);
  std::vector<std::pair<Rational, Rational>> samples;
  for (unsigned k = 1; k <= d + 1; ++k) {
    const Rational kk(static_cast<long>(k));
    samples.emplace_back(kk * norm, p.evaluate(scaled(xi, kk)));
  }
  UniPoly h = interpolate(samples);
  if (!(compose_linear(h, xi) == p)) {
    return NotRepresentable{NotRepresentable::Stage::CompositionMismatch,
                            "h(xi^T x) with h = " + to_string(h) + " differs from p"};
  }
  return QuasiRepresentation{std::move(xi), std::move(h), Monotonicity::None};
}

MonotonicityResult is_monotone(const UniPoly& h) {
  const UniPoly dh = h.derivative();
  if (dh.is_zero()) return {Monotonicity::Nondecreasing, true};
  for (const auto& [factor, mult] : squarefree_decomposition(dh)) {
    if (mult % 2 == 1 && count_real_roots(factor) > 0) return {Monotonicity::None, false};
  }
  return {dh.leading_coefficient().sign() > 0 ? Monotonicity::Nondecreasing : Monotonicity::Nonincreasing, false};
}

std::optional<std::tuple<Rational, Rational, Rational>> local_maximum_triple(const UniPoly& h) {
  const UniPoly dh = h.derivative();
  if (dh.is_zero()) return std::nullopt;
  const UniPoly s = squarefree_part(dh);
  for (const auto& iv : open_root_intervals(dh)) {
    if (!(dh.sign_at(iv.lo) > 0 && dh.sign_at(iv.hi) < 0)) continue;
    // h rises on [lo, r] and falls on [r, hi]; approach r until the inner
    // value beats both ends.
    const Rational top = max(h.evaluate(iv.lo), h.evaluate(iv.hi));
    Rational lo = iv.lo;
    Rational hi = iv.hi;
    for (;;) {
      const Rational mid = (lo + hi) * kHalf;
      if (h.evaluate(mid) > top) return std::make_tuple(iv.lo, mid, iv.hi);
      if (dh.sign_at(mid) > 0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  return std::nullopt;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("simplest_rational_between: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational_between(-hi, -lo);
  const Rational fl = floor_of(lo);
  if (fl == lo) return lo;
  if (fl + Rational(1) <= hi) return fl + Rational(1);
  return fl + simplest_rational_between((hi - fl).inverse(), (lo - fl).inverse()).inverse();
}

Verdict decide_quasiconvex_odd(const Polynomial& p, const SamplerConfig& cfg) {
  if (p.is_zero() || p.is_constant()) return Verdict::yes("constant polynomial");
  if (p.degree() % 2 == 0) throw std::invalid_argument("decide_quasiconvex_odd: even degree");

  auto rep = recover_representation(p);
  if (auto* fail = std::get_if<NotRepresentable>(&rep)) {
    std::optional<Witness> w = refute_quasiconvexity(p, cfg);
    return Verdict::no("not of the form h(xi^T x): " + fail->detail, std::move(w));
  }
  auto& r = std::get<QuasiRepresentation>(rep);
  const MonotonicityResult mono = is_monotone(r.h);
  if (mono.direction == Monotonicity::None) {
    const auto triple = local_maximum_triple(r.h);
    if (!triple) throw std::logic_error("non-monotone odd-degree h without a local maximum");
    const auto& [ta, tb, tc] = *triple;
    const Rational lambda = (tc - tb) / (tc - ta);
    return Verdict::no("h = " + to_string(r.h) + " is not monotone",
                       SublevelTriple{level_point(r.xi, ta), level_point(r.xi, tc), lambda});
  }
  r.direction = mono.direction;
  return Verdict::yes("p = h(xi^T x) with monotone h", std::move(r));
}

Verdict decide_pseudoconvex_odd(const Polynomial& p, const SamplerConfig& cfg) {
  if (p.is_zero() || p.is_constant()) return Verdict::yes("constant polynomial");
  if (p.degree() % 2 == 0) throw std::invalid_argument("decide_pseudoconvex_odd: even degree");

  Verdict quasi = decide_quasiconvex_odd(p, cfg);
  if (quasi.answer != Answer::Yes) {
    quasi.reason = "not quasiconvex: " + quasi.reason;
    return quasi;
  }
  auto rep = std::get<QuasiRepresentation>(*quasi.certificate);
  const UniPoly dh = rep.h.derivative();
  const int roots = count_real_roots(dh);
  if (roots == 0) {
    return Verdict::yes("h' has no real roots", PseudoCertificate{std::move(rep), dh, 0});
  }

  // The gradient xi * h'(xi^T x) vanishes on a hyperplane; look for a rational
  // level there, otherwise report the isolating interval.
  const UniPoly s = squarefree_part(dh);
  const auto intervals = open_root_intervals(dh);
  const Rational step = rep.direction == Monotonicity::Nonincreasing ? Rational(1) : Rational(-1);
  for (const auto& iv : intervals) {
    RootInterval cur = iv;
    for (int round = 0; round < 64; ++round) {
      const Rational cand = simplest_rational_between(cur.lo, cur.hi);
      if (s.sign_at(cand) == 0) {
        const RationalVector x = level_point(rep.xi, cand);
        RationalVector y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += step * rep.xi[i];
        return Verdict::no("h' has a rational root; p is stationary but not minimal there",
                           PseudoViolation{x, std::move(y)});
      }
      cur = refine_root(s, cur, (cur.hi - cur.lo) * Rational(Integer(1), Integer(16)));
      if (cur.exact()) break;
    }
    if (cur.exact()) {
      const RationalVector x = level_point(rep.xi, cur.lo);
      RationalVector y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += step * rep.xi[i];
      return Verdict::no("h' has a rational root; p is stationary but not minimal there",
                         PseudoViolation{x, std::move(y)});
    }
  }
  const auto& iv = intervals.front();
  return Verdict::no("h' has " + std::to_string(roots) + " real root(s); the gradient vanishes on a hyperplane",
                     StationaryLevel{rep.xi, iv.lo, iv.hi});
}

IndefiniteDirection odd_degree_curvature_witness(const Polynomial& p) {
  const unsigned d = p.degree();
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("odd_degree_curvature_witness: need odd degree >= 3");
  const Polynomial top = p.homogeneous_part(d);
  const std::size_t n = p.arity();
  SamplerConfig cfg;
  for (std::size_t i = 0;; ++i) {
    const RationalVector v = sample_point(cfg, n, i);
    if (top.evaluate(v).is_zero()) continue;
    // q(t) = p(t v) has odd degree d, so q'' has odd degree d - 2 and takes
    // negative values on one side.
    const UniPoly q2 = restrict_line(p, RationalVector(n), v).derivative().derivative();
    for (Rational t(0);; t = t.sign() > 0 ? -t : Rational(1) - t * Rational(2)) {
      if (q2.evaluate(t).sign() < 0) return IndefiniteDirection{scaled(v, t), v};
    }
  }
}

}  // namespace polycvx
