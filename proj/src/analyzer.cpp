#include "polyconvex/analyzer.hpp"

#include <algorithm>
#include <chrono>

#include "polyconvex/calculus.hpp"
#include "polyconvex/roots.hpp"

#ifndef POLYCVX_VERSION
#define POLYCVX_VERSION "0.0.0"
#endif

namespace polycvx {

namespace {

bool certificate_matches(const Polynomial& p, const AnalyzeOptions& options) {
  return options.certificate && options.certificate->source == p && verify(*options.certificate);
}

// dispatch for even degree >= 4, where only semi-decisions exist
Verdict analyze_even(const Polynomial& p, Property property, const AnalyzeOptions& options) {
  const SamplerConfig& cfg = options.sampler;
  const bool homogeneous = p.is_homogeneous();
  const bool certified = certificate_matches(p, options);
  const std::string budget = " (" + std::to_string(cfg.budget) + " samples)";

  switch (property) {
    case Property::Convex:
      if (auto w = refute_convexity(p, cfg)) return Verdict::no("Hessian is indefinite at a sample point", std::move(*w));
      if (certified) return Verdict::yes("verified sos-convexity certificate", *options.certificate);
      return Verdict::unknown("convexity of even degree >= 4 is NP-hard; no Hessian witness found" + budget +
                              " and no certificate supplied");

    case Property::Strict:
      if (auto w = refute_convexity(p, cfg)) return Verdict::no("not convex, hence not strictly convex", std::move(*w));
      return Verdict::unknown("strict convexity of even degree >= 4 is NP-hard; no witness found" + budget);

    case Property::Strong: {
      if (auto w = refute_convexity(p, cfg)) return Verdict::no("not convex, hence not strongly convex", std::move(*w));
      // A singular Hessian anywhere rules out H >= m I with m > 0.
      const RationalVector origin(p.arity());
      const PsdResult at0 = psd_test_exact(hessian(p).evaluate(origin));
      if (at0.psd && !at0.transcript.kernel.empty()) {
        return Verdict::no(homogeneous ? "the Hessian of a form of degree > 2 vanishes at the origin"
                                       : "the Hessian is singular at the origin",
                           FlatDirection{origin, primitive_integer_vector(at0.transcript.kernel.front())});
      }
      return Verdict::unknown("strong convexity of even degree >= 4 is NP-hard; no witness found" + budget);
    }

    case Property::Quasi:
    case Property::Pseudo: {
      const std::string name = property == Property::Quasi ? "quasiconvex" : "pseudoconvex";
      if (homogeneous) {
        // For even forms convexity, pseudoconvexity and quasiconvexity coincide.
        if (auto w = refute_convexity(p, cfg)) {
          return Verdict::no("form of even degree: " + name + " iff convex, and the Hessian is indefinite",
                             std::move(*w));
        }
        if (certified) {
          return Verdict::yes("form of even degree: " + name + " iff convex; verified sos-convexity certificate",
                              *options.certificate);
        }
        return Verdict::unknown("form of even degree: equivalent to convexity, which is NP-hard; no witness found" +
                                budget);
      }
      auto w = property == Property::Quasi ? refute_quasiconvexity(p, cfg) : refute_pseudoconvexity(p, cfg);
      if (w) return Verdict::no("violation of the " + name + " inequality found", std::move(*w));
      if (certified) return Verdict::yes("convex by verified sos-convexity certificate, hence " + name, *options.certificate);
      return Verdict::unknown(name + " test of even degree >= 4 is NP-hard; no witness found" + budget);
    }
  }
  return Verdict::unknown("unreachable");
}

bool check_representation(const Polynomial& p, const QuasiRepresentation& r) {
  if (r.xi.size() != p.arity() || r.direction == Monotonicity::None) return false;
  const auto first = std::find_if(r.xi.begin(), r.xi.end(), [](const Rational& v) { return !v.is_zero(); });
  if (first == r.xi.end() || *first != Rational(1)) return false;
  if (!(compose_linear(r.h, r.xi) == p)) return false;
  const MonotonicityResult m = is_monotone(r.h);
  return m.direction == r.direction || m.constant;
}

}  // namespace

const char* version() { return POLYCVX_VERSION; }

std::string to_string(DegreeClass c) {
  switch (c) {
    case DegreeClass::Affine:
      return "affine";
    case DegreeClass::Quadratic:
      return "quadratic";
    case DegreeClass::OddHigher:
      return "odd>=3";
    case DegreeClass::EvenHigher:
      return "even>=4";
  }
  return "affine";
}

DegreeClass classify(const Polynomial& p) {
  const unsigned d = p.degree();
  if (d <= 1) return DegreeClass::Affine;
  if (d == 2) return DegreeClass::Quadratic;
  return d % 2 == 1 ? DegreeClass::OddHigher : DegreeClass::EvenHigher;
}

bool is_decidable_cell(DegreeClass c, Property) { return c != DegreeClass::EvenHigher; }

AnalysisReport analyze(const Polynomial& p, Property property, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const DegreeClass cls = classify(p);
  Verdict v;
  switch (cls) {
    case DegreeClass::Affine:
    case DegreeClass::Quadratic:
      v = decide_quadratic(p, property);
      break;
    case DegreeClass::OddHigher:
      if (property == Property::Quasi) {
        v = decide_quasiconvex_odd(p, options.sampler);
      } else if (property == Property::Pseudo) {
        v = decide_pseudoconvex_odd(p, options.sampler);
      } else {
        v = Verdict::no("odd degree >= 3 is never convex", odd_degree_curvature_witness(p));
      }
      break;
    case DegreeClass::EvenHigher:
      v = analyze_even(p, property, options);
      break;
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return AnalysisReport{property, p.degree(), cls, p.is_homogeneous(), std::move(v), elapsed.count(), version()};
}

bool check_certificate(const Polynomial& p, const Certificate& c) {
  if (const auto* t = std::get_if<PivotTranscript>(&c)) {
    return p.degree() <= 2 && check_pivot_transcript(extract_quadratic(p).Q, *t);
  }
  if (const auto* m = std::get_if<MinorTranscript>(&c)) {
    if (p.degree() > 2) return false;
    const auto minors = leading_principal_minors(extract_quadratic(p).Q);
    return minors == m->minors && std::all_of(minors.begin(), minors.end(), [](const Rational& r) { return r.sign() > 0; });
  }
  if (const auto* r = std::get_if<QuasiRepresentation>(&c)) return check_representation(p, *r);
  if (const auto* s = std::get_if<PseudoCertificate>(&c)) {
    return check_representation(p, s->representation) && s->derivative == s->representation.h.derivative() &&
           s->real_roots == 0 && (s->derivative.degree() == 0 || count_real_roots(s->derivative) == 0);
  }
  const auto& sc = std::get<SosConvexityCertificate>(c);
  return sc.source == p && verify(sc);
}

bool check_verdict(const Polynomial& p, const Verdict& v) {
  if (v.answer == Answer::Yes && v.certificate) return check_certificate(p, *v.certificate);
  if (v.answer == Answer::No && v.witness) return check_witness(p, *v.witness);
  return v.answer != Answer::Unknown || (!v.certificate && !v.witness);
}

Json to_json(const AnalysisReport& r) {
  Json out = {{"property", to_string(r.property)},
              {"degree", r.degree},
              {"degree_class", to_string(r.degree_class)},
              {"homogeneous", r.homogeneous}};
  out.update(to_json(r.verdict));
  out["elapsed_ms"] = r.elapsed_ms;
  out["version"] = r.version;
  return out;
}

}  // namespace polycvx
