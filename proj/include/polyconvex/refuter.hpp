#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "polyconvex/matrix.hpp"
#include "polyconvex/polynomial.hpp"
#include "polyconvex/verdict.hpp"

namespace polycvx {

/// Controls the deterministic sample stream used by the refuters. Sample k
/// depends only on (seed, k), so the outcome does not depend on the number
/// of worker threads.
struct SamplerConfig {
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// Total samples, structured points included.
  std::size_t budget = 2000;
  /// Random coordinates are rationals in [-coordinate_bound, coordinate_bound].
  std::uint32_t coordinate_bound = 3;
  /// Random denominators are drawn from 1..denominator_bound.
  std::uint32_t denominator_bound = 2;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Sample point number `index` in `arity` dimensions. The stream starts with
/// the origin, +-e_i, e_i +- e_j and +-(1, ..., 1), then random rationals.
RationalVector sample_point(const SamplerConfig& cfg, std::size_t arity, std::size_t index);

/// Outcome of the exact PSD test of a constant symmetric matrix.
struct PsdResult {
  bool psd = false;
  /// Valid when psd.
  PivotTranscript transcript;
  /// Valid when !psd: direction^T M direction == value < 0.
  RationalVector direction;
  Rational value;
};

/// Symmetric Gaussian pivoting along the diagonal. A negative pivot, or a
/// zero pivot with a nonzero entry in its row, yields an exact negative
/// direction; the simplest of e_i, e_i - e_j, e_i + e_j is preferred when one
/// of them already works. Throws std::invalid_argument if M is not symmetric.
PsdResult psd_test_exact(const RationalMatrix& m);

/// Searches sample points a with an exact direction v, v^T H(a) v < 0.
std::optional<Witness> refute_convexity(const Polynomial& p, const SamplerConfig& cfg = {});

/// Searches for a sublevel-set violation. For homogeneous even-degree p a
/// negative value at x already gives the triple (x, -x, 1/2).
std::optional<Witness> refute_quasiconvexity(const Polynomial& p, const SamplerConfig& cfg = {});

/// Searches pairs (x, y) with grad p(x)^T (y - x) >= 0 and p(y) < p(x).
std::optional<Witness> refute_pseudoconvexity(const Polynomial& p, const SamplerConfig& cfg = {});

/// Searches a point with p < 0.
std::optional<RationalVector> refute_nonnegativity(const Polynomial& p, const SamplerConfig& cfg = {});

struct GridOracleResult {
  bool consistent = true;
  std::optional<Witness> witness;
};

/// Exhaustive midpoint test over all pairs of grid points in [lo, hi]^n with
/// the given step, n <= 2. "consistent" only means no violation at this
/// resolution. Throws std::invalid_argument for arity > 2 or a bad grid.
GridOracleResult oracle_quasiconvex_grid(const Polynomial& p, const Rational& lo, const Rational& hi,
                                         const Rational& step);

}  // namespace polycvx
