#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>

#include "polyconvex/matrix.hpp"
#include "polyconvex/polynomial.hpp"
#include "polyconvex/refuter.hpp"
#include "polyconvex/verdict.hpp"

namespace polycvx {

enum class Property { Convex, Strict, Strong, Quasi, Pseudo };

std::string to_string(Property p);
/// Accepts "convex", "strict", "strong", "quasi", "pseudo".
Property parse_property(std::string_view name);

/// Complete decision for polynomials of degree <= 2.
///
/// convex, quasi, pseudo: YES iff Q is PSD. strict, strong: YES iff all
/// leading principal minors of Q are positive. Throws std::invalid_argument
/// for degree > 2.
Verdict decide_quadratic(const Polynomial& p, Property property);

/// Rational lower bound m on the smallest eigenvalue of the symmetric matrix
/// Q, within `precision` of the true value. For the Hessian of a strongly
/// convex quadratic this bounds the strong-convexity modulus.
Rational min_eigenvalue_lower_bound(const RationalMatrix& q, const Rational& precision);

struct NotRepresentable {
  enum class Stage { NonProportionalGradient, CompositionMismatch };
  Stage stage;
  std::string detail;
};

/// Attempts p(x) = h(xi^T x) for odd-degree p: xi from the leading
/// coefficients of proportional gradient components (first nonzero entry 1),
/// h from p(k*xi) at k = 1..d+1, then a full symbolic comparison.
/// Throws std::invalid_argument for even degree or the zero polynomial.
std::variant<QuasiRepresentation, NotRepresentable> recover_representation(const Polynomial& p);

struct MonotonicityResult {
  Monotonicity direction = Monotonicity::None;
  /// h is constant (reported as nondecreasing).
  bool constant = false;
};

/// Decides h' >= 0 or h' <= 0 on all of R via the squarefree decomposition
/// of h': sign-constant iff no factor of odd multiplicity has a real root.
MonotonicityResult is_monotone(const UniPoly& h);

/// Points ta < tb < tc with h(tb) > max(h(ta), h(tc)), when h has a strict
/// local maximum (always the case for a non-monotone odd-degree h).
std::optional<std::tuple<Rational, Rational, Rational>> local_maximum_triple(const UniPoly& h);

/// The simplest rational (smallest denominator, then numerator) in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Quasiconvexity for odd degree (degree <= 1 and constants are YES).
/// The sampler is used only to attach a witness when p is not representable.
Verdict decide_quasiconvex_odd(const Polynomial& p, const SamplerConfig& cfg = {});

/// Pseudoconvexity for odd degree: representable with h' free of real roots.
Verdict decide_pseudoconvex_odd(const Polynomial& p, const SamplerConfig& cfg = {});

/// For odd degree >= 3: a point and direction of negative curvature, which
/// always exist because the cubic-or-higher odd restriction has a second
/// derivative of odd degree.
IndefiniteDirection odd_degree_curvature_witness(const Polynomial& p);

}  // namespace polycvx
