#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "polyconvex/analyzer.hpp"
#include "polyconvex/certificates.hpp"
#include "polyconvex/text.hpp"

using namespace polycvx;

namespace {

Polynomial P(const char* text, std::size_t arity) { return parse_polynomial(text, arity); }

Answer ans(const char* text, std::size_t arity, Property prop, const AnalyzeOptions& o = {}) {
  return analyze(P(text, arity), prop, o).verdict.answer;
}

const Property kAll[] = {Property::Convex, Property::Strict, Property::Strong, Property::Quasi, Property::Pseudo};

}  // namespace

TEST_CASE("analyzer examples") {
  const AnalysisReport a = analyze(P("x1^3", 1), Property::Quasi);
  CHECK(a.verdict.answer == Answer::Yes);
  CHECK(std::holds_alternative<QuasiRepresentation>(*a.verdict.certificate));
  CHECK(a.degree_class == DegreeClass::OddHigher);

  const AnalysisReport b = analyze(P("x1*x2", 2), Property::Convex);
  CHECK(b.verdict.answer == Answer::No);
  CHECK(std::holds_alternative<IndefiniteDirection>(*b.verdict.witness));

  const AnalysisReport c = analyze(P("x1^2*x2^2", 2), Property::Quasi);
  CHECK(c.verdict.answer == Answer::No);
  CHECK(c.homogeneous);
  CHECK(check_verdict(P("x1^2*x2^2", 2), c.verdict));
}

TEST_CASE("the cube and the non-homogeneous quartic") {
  CHECK(ans("x1^3", 1, Property::Convex) == Answer::No);
  CHECK(ans("x1^3", 1, Property::Pseudo) == Answer::No);
  // quasiconvex but not convex; quasi stays open for a quartic
  const Polynomial q = P("x1^4 - 8*x1^3 + 18*x1^2", 1);
  const Verdict v = analyze(q, Property::Convex).verdict;
  CHECK(v.answer == Answer::No);
  const auto& w = std::get<IndefiniteDirection>(*v.witness);
  CHECK(w.point[0] > Rational(1));
  CHECK(w.point[0] < Rational(3));
  CHECK(analyze(q, Property::Quasi).verdict.answer != Answer::No);
}

TEST_CASE("degree one") {
  const Polynomial p = P("2*x1 - x2 + 1", 2);
  CHECK(classify(p) == DegreeClass::Affine);
  CHECK(ans("2*x1 - x2 + 1", 2, Property::Convex) == Answer::Yes);
  CHECK(ans("2*x1 - x2 + 1", 2, Property::Strict) == Answer::No);
  CHECK(ans("2*x1 - x2 + 1", 2, Property::Strong) == Answer::No);
  CHECK(ans("2*x1 - x2 + 1", 2, Property::Quasi) == Answer::Yes);
  CHECK(ans("2*x1 - x2 + 1", 2, Property::Pseudo) == Answer::Yes);
  CHECK(ans("5", 1, Property::Convex) == Answer::Yes);
}

TEST_CASE("even degree with certificates") {
  const InstanceRecord r = random_sos(3, 2, 2);
  const ReductionOutput out = construct_f(r.form);
  AnalyzeOptions o;
  o.certificate = sos_convexity_certificate(out, *r.certificate);
  const AnalysisReport a = analyze(out.f, Property::Convex, o);
  CHECK(a.verdict.answer == Answer::Yes);
  CHECK(check_verdict(out.f, a.verdict));
  // homogeneous quartic: quasi and pseudo follow from convexity
  CHECK(analyze(out.f, Property::Quasi, o).verdict.answer == Answer::Yes);
  CHECK(analyze(out.f, Property::Pseudo, o).verdict.answer == Answer::Yes);
  // without evidence it stays open
  CHECK(analyze(out.f, Property::Convex).verdict.answer == Answer::Unknown);
  // a certificate for a different polynomial is ignored
  CHECK(analyze(P("x1^4 + x2^4", 2), Property::Convex, o).verdict.answer == Answer::Unknown);
}

TEST_CASE("strong convexity of forms fails at the origin") {
  const Polynomial p = P("x1^4 + x2^4", 2);
  const Verdict v = analyze(p, Property::Strong).verdict;
  CHECK(v.answer == Answer::No);
  CHECK(check_verdict(p, v));
  CHECK(analyze(p, Property::Strict).verdict.answer == Answer::Unknown);
}

TEST_CASE("dispatch matrix") {
  CHECK(is_decidable_cell(DegreeClass::Quadratic, Property::Strong));
  CHECK(is_decidable_cell(DegreeClass::OddHigher, Property::Pseudo));
  CHECK_FALSE(is_decidable_cell(DegreeClass::EvenHigher, Property::Convex));
  CHECK(to_string(DegreeClass::EvenHigher) == "even>=4");

  std::mt19937_64 rng(81);
  AnalyzeOptions o;
  o.sampler.budget = 200;
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const Polynomial p = oracle::random_polynomial(rng, n, static_cast<unsigned>(oracle::uniform(rng, 1, 5)), 5, 6);
    for (Property prop : kAll) {
      const AnalysisReport r = analyze(p, prop, o);
      if (r.verdict.answer == Answer::Unknown) CHECK(r.degree_class == DegreeClass::EvenHigher);
      CHECK(check_verdict(p, r.verdict));
      // implications: strong => strict => convex => pseudo => quasi
      if (prop == Property::Strong && r.verdict.answer == Answer::Yes) {
        CHECK(analyze(p, Property::Strict, o).verdict.answer != Answer::No);
      }
      if (prop == Property::Convex && r.verdict.answer == Answer::Yes) {
        CHECK(analyze(p, Property::Pseudo, o).verdict.answer != Answer::No);
        CHECK(analyze(p, Property::Quasi, o).verdict.answer != Answer::No);
      }
      if (prop == Property::Pseudo && r.verdict.answer == Answer::Yes) {
        CHECK(analyze(p, Property::Quasi, o).verdict.answer != Answer::No);
      }
    }
  }
}

TEST_CASE("check_verdict rejects bogus evidence") {
  const Polynomial p = P("x1^2 + x2^2", 2);
  CHECK_FALSE(check_verdict(p, Verdict::no("fake", IndefiniteDirection{{0, 0}, {1, 0}})));
  CHECK_FALSE(check_verdict(P("x1*x2", 2), Verdict::yes("fake", PivotTranscript{{Rational(1), Rational(1)},
                                                                             {{1, 0}, {0, 1}},
                                                                             {}})));
  CHECK(check_verdict(p, Verdict::unknown("nothing to check")));
  CHECK(check_certificate(P("x1^3", 1), QuasiRepresentation{{1}, UniPoly::monomial(3, Rational(1)),
                                                              Monotonicity::Nondecreasing}));
  CHECK_FALSE(check_certificate(P("x1^3 - x1", 1), QuasiRepresentation{{1}, UniPoly::monomial(3, Rational(1)),
                                                                        Monotonicity::Nondecreasing}));
}

TEST_CASE("report json") {
  const Json j = to_json(analyze(P("x1^2 + x2^2", 2), Property::Strong));
  CHECK(j["property"] == "strong");
  CHECK(j["degree"] == 2);
  CHECK(j["answer"] == "YES");
  CHECK(j["certificate"]["kind"] == "leading_minors");
  CHECK(j.dump().find('\n') == std::string::npos);
  CHECK(parse_property("pseudo") == Property::Pseudo);
  CHECK_THROWS(parse_property("concave"));
}
