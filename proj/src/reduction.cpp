#include "polyconvex/reduction.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace polycvx {

namespace {

Polynomial second_partial(const Polynomial& p, std::size_t i, std::size_t j) { return partial(partial(p, i), j); }

long draw(std::mt19937_64& rng, long bound) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

std::vector<std::size_t> shifted(std::size_t count, std::size_t offset) {
  std::vector<std::size_t> m(count);
  std::iota(m.begin(), m.end(), offset);
  return m;
}

struct AppendZero {
  static RationalVector grow(RationalVector v) {
    v.emplace_back(0);
    return v;
  }
  Witness operator()(const IndefiniteDirection& w) const { return IndefiniteDirection{grow(w.point), grow(w.direction)}; }
  Witness operator()(const FlatDirection& w) const { return FlatDirection{grow(w.point), grow(w.direction)}; }
  Witness operator()(const SublevelTriple& w) const { return SublevelTriple{grow(w.a), grow(w.b), w.lambda}; }
  Witness operator()(const PseudoViolation& w) const { return PseudoViolation{grow(w.x), grow(w.y)}; }
  Witness operator()(const NegativeValue& w) const { return NegativeValue{grow(w.point)}; }
  Witness operator()(const LineNonMonotone& w) const {
    return LineNonMonotone{grow(w.base), grow(w.direction), w.ta, w.tb, w.tc};
  }
  Witness operator()(const StationaryLevel& w) const { return StationaryLevel{grow(w.xi), w.lo, w.hi}; }
};

}  // namespace

Coupling coupling_matrix(const BiquadraticForm& b) {
  const std::size_t n = b.n();
  const Polynomial bp = b.expand();
  Coupling out{PolyMatrix(n, n, 2 * n), Rational(0)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      out.C(k, l) = second_partial(bp, k, n + l);
      for (const auto& [e, c] : out.C(k, l).terms()) out.gamma = max(out.gamma, c.abs());
    }
  }
  return out;
}

ReductionOutput construct_f(const BiquadraticForm& b) {
  const std::size_t n = b.n();
  const std::size_t arity = 2 * n;
  Coupling coupling = coupling_matrix(b);
  const Polynomial bp = b.expand();

  const Rational w = Rational(static_cast<long>(n * n)) * coupling.gamma / Rational(2);
  Polynomial g(arity);
  if (!w.is_zero()) {
    for (std::size_t block : {std::size_t{0}, n}) {
      for (std::size_t i = 0; i < n; ++i) {
        Exponents e(arity, 0);
        e[block + i] = 4;
        g.add_term(e, w);
        for (std::size_t j = i + 1; j < n; ++j) {
          Exponents m(arity, 0);
          m[block + i] = 2;
          m[block + j] = 2;
          g.add_term(m, w);
        }
      }
    }
  }

  PolyMatrix A(n, n, arity);
  PolyMatrix B(n, n, arity);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      A(k, l) = second_partial(bp, n + k, n + l);
      B(k, l) = second_partial(bp, k, l);
    }
  }
  return ReductionOutput{n, b, bp, bp + g, g, coupling.gamma, std::move(coupling.C), std::move(A), std::move(B)};
}

HessianAnatomy hessian_anatomy(const ReductionOutput& out) {
  const std::size_t n = out.n;
  PolyMatrix hb(2 * n, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hb(i, j) = out.B(i, j);
      hb(i, n + j) = out.C(i, j);
      hb(n + j, i) = out.C(i, j);
      hb(n + i, n + j) = out.A(i, j);
    }
  }
  return HessianAnatomy{hessian(out.f), std::move(hb), hessian(out.g)};
}

IndefiniteDirection nonconvexity_witness(const ReductionOutput& out, const RationalVector& xbar,
                                         const RationalVector& ybar) {
  const std::size_t n = out.n;
  const Rational value = out.b.evaluate(xbar, ybar);
  if (value.sign() >= 0) throw std::invalid_argument("nonconvexity_witness: b(xbar; ybar) is not negative");
  IndefiniteDirection w{RationalVector(2 * n), RationalVector(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    w.point[i] = xbar[i];
    w.direction[n + i] = ybar[i];
  }
  // At y = 0 the y-block of H is A(xbar); g contributes nothing there.
  if (hessian(out.f).evaluate(w.point).quadratic_value(w.direction) != Rational(2) * value) {
    throw std::logic_error("nonconvexity_witness: curvature differs from 2 b(xbar; ybar)");
  }
  return w;
}

Polynomial midpoint_gap_form(const Polynomial& p) {
  const std::size_t n = p.arity();
  const Polynomial px = p.embed(2 * n, shifted(n, 0));
  const Polynomial py = p.embed(2 * n, shifted(n, n));
  std::vector<Polynomial> mid;
  mid.reserve(n);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    mid.push_back(half * (Polynomial::variable(2 * n, i) + Polynomial::variable(2 * n, n + i)));
  }
  return half * px + half * py - p.substitute(mid);
}

std::string to_string(LiftMode m) {
  switch (m) {
    case LiftMode::Convexity:
      return "convexity";
    case LiftMode::Strong:
      return "strong";
    case LiftMode::Quasi:
      return "quasi";
  }
  return "convexity";
}

LiftMode parse_lift_mode(std::string_view name) {
  if (name == "convexity") return LiftMode::Convexity;
  if (name == "strong") return LiftMode::Strong;
  if (name == "quasi") return LiftMode::Quasi;
  throw std::invalid_argument("unknown lift mode '" + std::string(name) + "'");
}

Polynomial lift_degree(const Polynomial& p, unsigned d, LiftMode mode) {
  if (d % 2 != 0) throw std::invalid_argument("lift degree must be even");
  if (d < std::max(4U, p.degree())) throw std::invalid_argument("lift degree must be at least max(4, deg p)");
  if (mode != LiftMode::Convexity && !(p.degree() == 4 && p.is_homogeneous())) {
    throw std::invalid_argument(to_string(mode) + " lift expects a homogeneous quartic");
  }
  const std::size_t n = p.arity();
  Polynomial q = p.embed(n + 1, shifted(n, 0));
  Exponents top(n + 1, 0);
  top[n] = d;
  q.add_term(top, Rational(1));
  if (mode == LiftMode::Strong) {
    for (std::size_t i = 0; i <= n; ++i) {
      Exponents e(n + 1, 0);
      e[i] = 2;
      q.add_term(e, Rational(1, 2));
    }
  }
  return q;
}

Witness lift_witness(const Witness& w) { return std::visit(AppendZero{}, w); }

SemialgebraicSet epigraph_set(const Polynomial& p) {
  const std::size_t n = p.arity();
  Polynomial t = Polynomial::variable(n + 1, n);
  return SemialgebraicSet{n + 1, {t - p.embed(n + 1, shifted(n, 0))}};
}

std::string to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::PsdByCertificate:
      return "psd_by_certificate";
    case InstanceStatus::IndefiniteByWitness:
      return "indefinite_by_witness";
    case InstanceStatus::PsdNotSosLiterature:
      return "psd_not_sos_literature";
    case InstanceStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

InstanceRecord random_sos(std::uint64_t seed, std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("random_sos: n must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t arity = 2 * n;
  SosCertificate cert{Polynomial(arity), {}};
  for (std::size_t m = 0; m < k; ++m) {
    Polynomial q(arity);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const long c = draw(rng, 3);
        if (c == 0) continue;
        Exponents e(arity, 0);
        e[i] = 1;
        e[n + j] = 1;
        q.add_term(e, Rational(c));
      }
    }
    if (q.is_zero()) continue;
    cert.target += q * q;
    cert.squares.push_back({Rational(1), std::move(q)});
  }
  BiquadraticForm form = BiquadraticForm::from_polynomial(cert.target);
  return InstanceRecord{"random_sos(seed=" + std::to_string(seed) + ", n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")",
                        std::move(form), InstanceStatus::PsdByCertificate,
                        "sum of squares of random bilinear forms x^T M y", std::move(cert), std::nullopt};
}

InstanceRecord random_indefinite(std::uint64_t seed, std::size_t n, const IndefiniteSearch& search) {
  if (n == 0) throw std::invalid_argument("random_indefinite: n must be positive");
  if (search.per_form == 0) throw std::invalid_argument("random_indefinite: per_form must be positive");
  std::mt19937_64 rng(seed);
  const std::string name = "random_indefinite(seed=" + std::to_string(seed) + ", n=" + std::to_string(n) + ")";
  BiquadraticForm form(n);
  std::size_t used = 0;
  while (used < search.budget) {
    form = BiquadraticForm(n);
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned j = i; j <= n; ++j) {
        for (unsigned k = 1; k <= n; ++k) {
          for (unsigned l = k; l <= n; ++l) form.accumulate(i, j, k, l, Rational(draw(rng, search.coefficient_bound)));
        }
      }
    }
    for (std::size_t t = 0; t < search.per_form && used < search.budget; ++t, ++used) {
      RationalVector x(n);
      RationalVector y(n);
      for (auto& v : x) v = Rational(draw(rng, search.bound));
      for (auto& v : y) v = Rational(draw(rng, search.bound));
      if (form.evaluate(x, y).sign() < 0) {
        RationalVector point = x;
        point.insert(point.end(), y.begin(), y.end());
        return InstanceRecord{name, std::move(form), InstanceStatus::IndefiniteByWitness,
                              "random integer coefficients; negative point found by sampling", std::nullopt,
                              std::move(point)};
      }
    }
  }
  return InstanceRecord{name, std::move(form), InstanceStatus::Unknown,
                        "sampling budget exhausted without a negative point", std::nullopt, std::nullopt};
}

InstanceRecord choi_instance() {
  BiquadraticForm b(3);
  b.accumulate(1, 1, 1, 1, Rational(1));
  b.accumulate(2, 2, 2, 2, Rational(1));
  b.accumulate(3, 3, 3, 3, Rational(1));
  b.accumulate(1, 2, 1, 2, Rational(-2));
  b.accumulate(2, 3, 2, 3, Rational(-2));
  b.accumulate(1, 3, 1, 3, Rational(-2));
  b.accumulate(1, 1, 2, 2, Rational(2));
  b.accumulate(2, 2, 3, 3, Rational(2));
  b.accumulate(3, 3, 1, 1, Rational(2));
  return InstanceRecord{"choi", std::move(b), InstanceStatus::PsdNotSosLiterature,
                        "Choi (1975): psd biquadratic form that is not a sum of squares; status taken from the "
                        "literature, not proven here",
                        std::nullopt, std::nullopt};
}

}  // namespace polycvx
