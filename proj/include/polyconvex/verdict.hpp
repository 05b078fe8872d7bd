#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyconvex/matrix.hpp"
#include "polyconvex/polynomial.hpp"
#include "polyconvex/sos.hpp"

namespace polycvx {

// ---------------------------------------------------------------------------
// Witnesses: exact data falsifying a property. Each variant re-checks with
// check_witness() in rational arithmetic.

/// d^T H(point) d < 0: the Hessian is not PSD at `point`.
struct IndefiniteDirection {
  RationalVector point;
  RationalVector direction;
};

/// d != 0 with d^T H(point) d == 0. Refutes strong convexity; for a quadratic
/// the restriction to the line through `point` along d is affine, refuting
/// strict convexity.
struct FlatDirection {
  RationalVector point;
  RationalVector direction;
};

/// p(lambda*a + (1-lambda)*b) > max(p(a), p(b)) with 0 < lambda < 1: the
/// sublevel set at max(p(a), p(b)) is not convex.
struct SublevelTriple {
  RationalVector a;
  RationalVector b;
  Rational lambda;
};

/// grad p(x)^T (y - x) >= 0 and p(y) < p(x).
struct PseudoViolation {
  RationalVector x;
  RationalVector y;
};

/// p(point) < 0.
struct NegativeValue {
  RationalVector point;
};

/// On the line base + t*direction, the values at ta < tb < tc are not
/// monotone: q(tb) lies strictly above or strictly below both neighbours.
struct LineNonMonotone {
  RationalVector base;
  RationalVector direction;
  Rational ta;
  Rational tb;
  Rational tc;
};

/// p(x) = q(xi^T x / xi^T xi) where q(t) = p(t * xi / xi^T xi), and q' has a
/// real root in [lo, hi]: the gradient of p vanishes on a whole hyperplane.
/// Used when that root is irrational, so no rational stationary point exists.
struct StationaryLevel {
  RationalVector xi;
  Rational lo;
  Rational hi;
};

using Witness = std::variant<IndefiniteDirection, FlatDirection, SublevelTriple, PseudoViolation, NegativeValue,
                             LineNonMonotone, StationaryLevel>;

/// Re-validates a witness against p exactly.
bool check_witness(const Polynomial& p, const Witness& w);

/// Short tag naming the witness kind, e.g. "indefinite_direction".
std::string witness_kind(const Witness& w);

// ---------------------------------------------------------------------------
// Certificates: exact data proving a property.

/// Congruence M = U^{-T} diag(pivots) U^{-1}: `basis` holds the columns of a
/// unit upper-triangular U with U^T M U diagonal. M is PSD iff every pivot is
/// nonnegative.
struct PivotTranscript {
  std::vector<Rational> pivots;
  std::vector<RationalVector> basis;
  /// Basis vectors whose pivot is zero; they span the kernel of M.
  std::vector<RationalVector> kernel;
};

bool check_pivot_transcript(const RationalMatrix& m, const PivotTranscript& t);

/// Leading principal minors, all positive for a positive definite matrix.
struct MinorTranscript {
  std::vector<Rational> minors;
};

enum class Monotonicity { Nondecreasing, Nonincreasing, None };

/// p(x) = h(xi^T x) with the first nonzero entry of xi equal to 1.
struct QuasiRepresentation {
  RationalVector xi;
  UniPoly h;
  Monotonicity direction = Monotonicity::None;
};

/// Representation plus the fact that h' has no real root (Sturm count 0).
struct PseudoCertificate {
  QuasiRepresentation representation;
  UniPoly derivative;
  int real_roots = 0;
};

using Certificate =
    std::variant<PivotTranscript, MinorTranscript, QuasiRepresentation, PseudoCertificate, SosConvexityCertificate>;

std::string certificate_kind(const Certificate& c);

// ---------------------------------------------------------------------------

enum class Answer { Yes, No, Unknown };

std::string to_string(Answer a);

/// Decision result. YES carries a certificate (or a structural reason for
/// trivial classes such as linear polynomials), NO carries a witness or a
/// structural reason, UNKNOWN carries only a reason.
struct Verdict {
  Answer answer = Answer::Unknown;
  std::string reason;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;

  static Verdict yes(std::string reason, std::optional<Certificate> cert = std::nullopt);
  static Verdict no(std::string reason, std::optional<Witness> witness = std::nullopt);
  static Verdict unknown(std::string reason);
};

}  // namespace polycvx
