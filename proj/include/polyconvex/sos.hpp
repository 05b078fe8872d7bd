#pragma once

#include <vector>

#include "polyconvex/polynomial.hpp"

namespace polycvx {

struct WeightedSquare {
  Rational weight;
  Polynomial poly;
};

/// Claim that target = sum_i weight_i * poly_i^2. Weights stay separate from
/// the squared polynomials so every entry is rational.
struct SosCertificate {
  Polynomial target;
  std::vector<WeightedSquare> squares;

  Polynomial sum() const;
};

/// True iff every weight is positive and sum w_i q_i^2 - target is the zero
/// polynomial. Throws ArityMismatch if a square and the target disagree on
/// arity.
bool verify(const SosCertificate& cert);

/// z^T H(x) z for the Hessian H of p, with z appended after x (arity 2n).
Polynomial hessian_form(const Polynomial& p);

/// Sum-of-squares certificate for the Hessian form of `source`, proving
/// sos-convexity (and hence convexity).
struct SosConvexityCertificate {
  Polynomial source;
  Polynomial hessian_form;
  SosCertificate cert;
};

/// Checks hessian_form == hessian_form(source), cert.target == hessian_form
/// and verify(cert).
bool verify(const SosConvexityCertificate& cert);

}  // namespace polycvx
