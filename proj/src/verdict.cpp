#include "polyconvex/verdict.hpp"

#include <algorithm>

#include "polyconvex/calculus.hpp"
#include "polyconvex/roots.hpp"

namespace polycvx {

namespace {

bool fits(const Polynomial& p, const RationalVector& v) { return v.size() == p.arity(); }

bool nonzero(const RationalVector& v) {
  return std::any_of(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); });
}

Rational curvature(const Polynomial& p, const RationalVector& point, const RationalVector& dir) {
  return hessian(p).evaluate(point).quadratic_value(dir);
}

struct Checker {
  const Polynomial& p;

  bool operator()(const IndefiniteDirection& w) const {
    if (!fits(p, w.point) || !fits(p, w.direction)) return false;
    return curvature(p, w.point, w.direction).sign() < 0;
  }

  bool operator()(const FlatDirection& w) const {
    if (!fits(p, w.point) || !fits(p, w.direction) || !nonzero(w.direction)) return false;
    return curvature(p, w.point, w.direction).is_zero();
  }

  bool operator()(const SublevelTriple& w) const {
    if (!fits(p, w.a) || !fits(p, w.b)) return false;
    if (w.lambda.sign() <= 0 || w.lambda >= Rational(1)) return false;
    RationalVector mid(p.arity());
    for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = w.lambda * w.a[i] + (Rational(1) - w.lambda) * w.b[i];
    return p.evaluate(mid) > max(p.evaluate(w.a), p.evaluate(w.b));
  }

  bool operator()(const PseudoViolation& w) const {
    if (!fits(p, w.x) || !fits(p, w.y)) return false;
    RationalVector step(p.arity());
    for (std::size_t i = 0; i < step.size(); ++i) step[i] = w.y[i] - w.x[i];
    const Rational slope = dot(gradient(p).evaluate(w.x), step);
    return slope.sign() >= 0 && p.evaluate(w.y) < p.evaluate(w.x);
  }

  bool operator()(const NegativeValue& w) const {
    return fits(p, w.point) && p.evaluate(w.point).sign() < 0;
  }

  bool operator()(const LineNonMonotone& w) const {
    if (!fits(p, w.base) || !fits(p, w.direction)) return false;
    if (!(w.ta < w.tb && w.tb < w.tc)) return false;
    const UniPoly q = restrict_line(p, w.base, w.direction);
    return ((q.evaluate(w.tb) - q.evaluate(w.ta)) * (q.evaluate(w.tc) - q.evaluate(w.tb))).sign() < 0;
  }

  bool operator()(const StationaryLevel& w) const {
    if (!fits(p, w.xi) || !nonzero(w.xi) || w.hi < w.lo) return false;
    if (p.degree() < 3 || p.degree() % 2 == 0) return false;
    const Rational norm = dot(w.xi, w.xi);
    RationalVector dir = w.xi;
    for (auto& d : dir) d /= norm;
    const UniPoly q = restrict_line(p, RationalVector(p.arity()), dir);
    if (!(compose_linear(q, w.xi) == p)) return false;
    const UniPoly dq = q.derivative();
    if (dq.is_zero()) return false;
    if (dq.sign_at(w.lo) == 0) return true;
    if (w.lo == w.hi) return false;
    return sturm_chain(dq).roots_in(w.lo, w.hi) > 0;
  }
};

struct KindName {
  std::string operator()(const IndefiniteDirection&) const { return "indefinite_direction"; }
  std::string operator()(const FlatDirection&) const { return "flat_direction"; }
  std::string operator()(const SublevelTriple&) const { return "sublevel_triple"; }
  std::string operator()(const PseudoViolation&) const { return "pseudo_violation"; }
  std::string operator()(const NegativeValue&) const { return "negative_value"; }
  std::string operator()(const LineNonMonotone&) const { return "line_non_monotone"; }
  std::string operator()(const StationaryLevel&) const { return "stationary_level"; }
  std::string operator()(const PivotTranscript&) const { return "pivot_transcript"; }
  std::string operator()(const MinorTranscript&) const { return "leading_minors"; }
  std::string operator()(const QuasiRepresentation&) const { return "quasi_representation"; }
  std::string operator()(const PseudoCertificate&) const { return "pseudo_representation"; }
  std::string operator()(const SosConvexityCertificate&) const { return "sos_convexity"; }
};

}  // namespace

bool check_witness(const Polynomial& p, const Witness& w) { return std::visit(Checker{p}, w); }

std::string witness_kind(const Witness& w) { return std::visit(KindName{}, w); }

std::string certificate_kind(const Certificate& c) { return std::visit(KindName{}, c); }

bool check_pivot_transcript(const RationalMatrix& m, const PivotTranscript& t) {
  const std::size_t n = m.rows();
  if (!m.is_symmetric() || t.pivots.size() != n || t.basis.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& u = t.basis[j];
    if (u.size() != n || u[j] != Rational(1)) return false;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (!u[i].is_zero()) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const RationalVector mu = m.apply(t.basis[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = dot(t.basis[j], mu);
      if (i == j ? v != t.pivots[i] : !v.is_zero()) return false;
    }
  }
  return std::all_of(t.pivots.begin(), t.pivots.end(), [](const Rational& r) { return r.sign() >= 0; });
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "YES";
    case Answer::No:
      return "NO";
    case Answer::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

Verdict Verdict::yes(std::string reason, std::optional<Certificate> cert) {
  return Verdict{Answer::Yes, std::move(reason), std::move(cert), std::nullopt};
}

Verdict Verdict::no(std::string reason, std::optional<Witness> witness) {
  return Verdict{Answer::No, std::move(reason), std::nullopt, std::move(witness)};
}

Verdict Verdict::unknown(std::string reason) {
  return Verdict{Answer::Unknown, std::move(reason), std::nullopt, std::nullopt};
}

}  // namespace polycvx
