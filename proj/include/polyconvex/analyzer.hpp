#pragma once

#include <optional>
#include <string>

#include "polyconvex/deciders.hpp"
#include "polyconvex/io.hpp"
#include "polyconvex/refuter.hpp"
#include "polyconvex/sos.hpp"

namespace polycvx {

const char* version();

struct AnalyzeOptions {
  SamplerConfig sampler;
  /// User-supplied evidence of convexity (sos-convexity of p).
  std::optional<SosConvexityCertificate> certificate;
};

/// Which cell of the complexity table an input falls into.
enum class DegreeClass { Affine, Quadratic, OddHigher, EvenHigher };

std::string to_string(DegreeClass c);
DegreeClass classify(const Polynomial& p);

/// True for cells with a complete polynomial-time decider; UNKNOWN is never
/// reported there.
bool is_decidable_cell(DegreeClass c, Property property);

struct AnalysisReport {
  Property property;
  unsigned degree;
  DegreeClass degree_class;
  bool homogeneous;
  Verdict verdict;
  double elapsed_ms;
  std::string version;
};

AnalysisReport analyze(const Polynomial& p, Property property, const AnalyzeOptions& options = {});

/// Re-checks a YES certificate against p exactly.
bool check_certificate(const Polynomial& p, const Certificate& c);

/// Re-checks a verdict: YES certificates and NO witnesses must hold for p.
/// Verdicts without evidence are accepted.
bool check_verdict(const Polynomial& p, const Verdict& v);

Json to_json(const AnalysisReport& r);

}  // namespace polycvx
