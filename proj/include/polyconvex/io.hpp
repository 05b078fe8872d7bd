#pragma once

#include <json.hpp>

#include "polyconvex/biquadratic.hpp"
#include "polyconvex/sos.hpp"
#include "polyconvex/verdict.hpp"

namespace polycvx {

using Json = nlohmann::ordered_json;

// Rationals are written as "p" or "p/q" strings, polynomials in the text
// grammar. Readers throw std::invalid_argument (or ParseError) on bad input.

Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Rational rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j);

/// {target, arity, squares: [{weight, poly}]}
Json to_json(const SosCertificate& c);
SosCertificate sos_certificate_from_json(const Json& j);

/// {source, target, arity, squares}; target is the Hessian form of source,
/// which has half the arity.
Json to_json(const SosConvexityCertificate& c);
SosConvexityCertificate sos_convexity_from_json(const Json& j);

/// {n, entries: [[i, j, k, l, "c"], ...]} in canonical key order, plus an
/// optional "certificate" object for b.
Json to_json(const BiquadraticForm& b);
BiquadraticForm biquadratic_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const Certificate& c);

Json to_json(const Verdict& v);

}  // namespace polycvx
