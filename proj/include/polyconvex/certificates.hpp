#pragma once

#include "polyconvex/biquadratic.hpp"
#include "polyconvex/reduction.hpp"
#include "polyconvex/sos.hpp"

namespace polycvx {

/// Sum-of-squares certificate, in the 4n variables (x; y; z_x; z_y), for
///   z^T H_f z - z_y^T A(x) z_y - z_x^T B(y) z_x.
/// Valid for every b; psd-ness of b is not needed.
SosCertificate residual_certificate(const BiquadraticForm& b);

/// Certificate that f = construct_f(b) is sos-convex, assembled from the
/// residual and b_cert re-expanded as 2 b(x; z_y) and 2 b(z_x; y).
/// Throws std::invalid_argument when b_cert does not verify or its target is
/// not b.
SosConvexityCertificate sos_convexity_certificate(const ReductionOutput& out, const SosCertificate& b_cert);

}  // namespace polycvx
