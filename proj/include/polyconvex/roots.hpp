#pragma once

#include <utility>
#include <vector>

#include "polyconvex/polynomial.hpp"

namespace polycvx {

/// Sturm chain u, u', -rem(u, u'), ... ending at the last nonzero remainder,
/// which is a GCD of u and u'.
struct SturmSequence {
  std::vector<UniPoly> chain;

  /// Sign variations of the chain evaluated at t (zeros skipped).
  int variations_at(const Rational& t) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;
  /// Distinct roots in (a, b]; a < b.
  int roots_in(const Rational& a, const Rational& b) const;
};

/// Throws std::domain_error for the zero polynomial.
SturmSequence sturm_chain(const UniPoly& u);

/// Number of distinct real roots of a nonzero polynomial.
int count_real_roots(const UniPoly& u);

/// Pairwise coprime monic squarefree factors with multiplicities (Yun), so
/// that u = lc(u) * prod f_k^k. Factors of degree 0 are omitted; the list
/// is ordered by multiplicity. Throws std::domain_error on zero.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& u);

/// u / gcd(u, u'), monic.
UniPoly squarefree_part(const UniPoly& u);

/// Bound B with every real root in (-B, B).
Rational cauchy_root_bound(const UniPoly& u);

/// Interval holding exactly one real root: either open (lo, hi) with lo < hi
/// and the polynomial nonzero at both ends, or the exact root lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Isolating intervals for all distinct real roots, sorted left to right.
std::vector<RootInterval> isolate_real_roots(const UniPoly& u);

/// Bisects an isolating interval of the squarefree polynomial `s` until its
/// width is at most `width` (or the root is hit exactly).
RootInterval refine_root(const UniPoly& s, RootInterval iv, const Rational& width);

}  // namespace polycvx
