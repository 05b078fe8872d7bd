#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyconvex/biquadratic.hpp"
#include "polyconvex/calculus.hpp"
#include "polyconvex/sos.hpp"
#include "polyconvex/verdict.hpp"

namespace polycvx {

// Variable layout: f lives on (x; y) = variables 0..n-1 and n..2n-1. Hessian
// forms of f append z = (z_x; z_y) as variables 2n..3n-1 and 3n..4n-1.

struct Coupling {
  /// C_kl = d^2 b / dx_k dy_l, arity 2n.
  PolyMatrix C;
  /// Largest absolute coefficient over the entries of C (0 when C = 0).
  Rational gamma;
};

Coupling coupling_matrix(const BiquadraticForm& b);

struct ReductionOutput {
  std::size_t n;
  BiquadraticForm b;
  Polynomial b_poly;
  /// f = b + g.
  Polynomial f;
  Polynomial g;
  Rational gamma;
  PolyMatrix C;
  /// 1/2 y^T A(x) y = b; A depends on x only.
  PolyMatrix A;
  /// 1/2 x^T B(y) x = b; B depends on y only.
  PolyMatrix B;
};

/// g = (n^2 gamma / 2)(sum x_i^4 + sum y_i^4 + sum_{i<j} x_i^2 x_j^2 + sum_{i<j} y_i^2 y_j^2).
ReductionOutput construct_f(const BiquadraticForm& b);

struct HessianAnatomy {
  PolyMatrix H;
  /// [[B(y), C], [C^T, A(x)]]
  PolyMatrix Hb;
  /// Block diagonal Hessian of g.
  PolyMatrix Hg;
};

HessianAnatomy hessian_anatomy(const ReductionOutput& out);

/// Point (xbar, 0) and direction (0, ybar); z^T H z = 2 b(xbar; ybar).
/// Throws std::invalid_argument unless b(xbar; ybar) < 0.
IndefiniteDirection nonconvexity_witness(const ReductionOutput& out, const RationalVector& xbar,
                                         const RationalVector& ybar);

/// q(x, y) = p(x)/2 + p(y)/2 - p((x + y)/2) in 2n variables.
Polynomial midpoint_gap_form(const Polynomial& p);

enum class LiftMode { Convexity, Strong, Quasi };

std::string to_string(LiftMode m);
LiftMode parse_lift_mode(std::string_view name);

/// convexity: p + x_{n+1}^d. strong: p + x_{n+1}^d + (x_1^2 + ... + x_{n+1}^2)/2.
/// quasi: p + x_{n+1}^d. Throws std::invalid_argument for odd d, d < max(4,
/// deg p), or (strong, quasi) when p is not a quartic form.
Polynomial lift_degree(const Polynomial& p, unsigned d, LiftMode mode);

/// Appends a zero coordinate to every point and direction of w.
Witness lift_witness(const Witness& w);

/// Basic closed semialgebraic set {x : f_i(x) >= 0 for all i}.
struct SemialgebraicSet {
  std::size_t arity;
  std::vector<Polynomial> constraints;
};

/// {(x, t) : t - p(x) >= 0}, with t the last variable.
SemialgebraicSet epigraph_set(const Polynomial& p);

enum class InstanceStatus { PsdByCertificate, IndefiniteByWitness, PsdNotSosLiterature, Unknown };

std::string to_string(InstanceStatus s);

struct InstanceRecord {
  std::string name;
  BiquadraticForm form;
  InstanceStatus status;
  std::string provenance;
  /// Present for PsdByCertificate; target is form.expand().
  std::optional<SosCertificate> certificate;
  /// Present for IndefiniteByWitness: (xbar; ybar) of length 2n with b < 0.
  std::optional<RationalVector> negative_point;
};

/// b = sum_{m=1..k} (x^T M_m y)^2 with integer M_m entries in [-3, 3].
InstanceRecord random_sos(std::uint64_t seed, std::size_t n, std::size_t k);

struct IndefiniteSearch {
  /// Total point evaluations over all regenerated forms.
  std::size_t budget = 20000;
  /// Points per form before a fresh form is drawn.
  std::size_t per_form = 500;
  /// Integer point coordinates in [-bound, bound].
  long bound = 2;
  /// Integer coefficients in [-coefficient_bound, coefficient_bound].
  long coefficient_bound = 5;
};

/// Random biquadratic form with a point where it is negative. Status is
/// Unknown (never psd) when the budget runs out.
InstanceRecord random_indefinite(std::uint64_t seed, std::size_t n, const IndefiniteSearch& search = {});

/// Choi's 3x3 biquadratic form, psd but not sos according to the literature.
InstanceRecord choi_instance();

}  // namespace polycvx
