// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every check is exact. Instance counts and time limits are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyconvex/analyzer.hpp"
#include "polyconvex/calculus.hpp"
#include "polyconvex/certificates.hpp"
#include "polyconvex/deciders.hpp"
#include "polyconvex/reduction.hpp"
#include "polyconvex/refuter.hpp"
#include "polyconvex/roots.hpp"
#include "polyconvex/text.hpp"
#include "support/oracles.hpp"

using namespace polycvx;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Polynomials collected along the way for the dispatch check.
std::vector<Polynomial> g_suite;

const Property kAll[] = {Property::Convex, Property::Strict, Property::Strong, Property::Quasi, Property::Pseudo};

BiquadraticForm random_biquadratic(std::mt19937_64& rng, std::size_t n, int terms, long bound) {
  BiquadraticForm b(n);
  const long top = static_cast<long>(n);
  for (int t = 0; t < terms; ++t) {
    b.accumulate(static_cast<unsigned>(oracle::uniform(rng, 1, top)), static_cast<unsigned>(oracle::uniform(rng, 1, top)),
                 static_cast<unsigned>(oracle::uniform(rng, 1, top)), static_cast<unsigned>(oracle::uniform(rng, 1, top)),
                 Rational(oracle::uniform(rng, -bound, bound)));
  }
  return b;
}

bool coefficients_within(const Polynomial& p, long bound) {
  for (const auto& [e, c] : p.terms()) {
    if (c.abs() > Rational(bound)) return false;
  }
  return true;
}

// -- 1 ----------------------------------------------------------------------
Outcome quadratic_completeness() {
  std::mt19937_64 rng(1001);
  int agree = 0;
  int total = 0;
  int bad_evidence = 0;
  int made = 0;
  while (made < 200) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    Polynomial p(n);
    if (made % 2 == 0) {
      // psd part by construction, sum of (a^T x)^2
      const long squares = oracle::uniform(rng, 1, 3);
      for (long k = 0; k < squares; ++k) {
        Polynomial l(n);
        for (std::size_t i = 0; i < n; ++i) l += Rational(oracle::uniform(rng, -1, 1)) * Polynomial::variable(n, i);
        p += l * l;
      }
    } else {
      p = oracle::random_form(rng, n, 2, static_cast<int>(oracle::uniform(rng, 1, 2 * static_cast<long>(n))), 9);
    }
    p += oracle::random_polynomial(rng, n, 1, 3, 9);
    if (!coefficients_within(p, 9)) continue;
    ++made;
    g_suite.push_back(p);
    const RationalMatrix Q = extract_quadratic(p).Q;
    const bool psd = oracle::psd_by_principal_minors(Q);
    const bool pd = oracle::pd_by_leading_minors(Q);
    for (Property prop : kAll) {
      const bool want = (prop == Property::Strict || prop == Property::Strong) ? pd : psd;
      const Verdict v = decide_quadratic(p, prop);
      ++total;
      if (v.answer != Answer::Unknown && (v.answer == Answer::Yes) == want) ++agree;
      if (!check_verdict(p, v)) ++bad_evidence;
    }
  }
  std::ostringstream os;
  os << agree << "/" << total << " verdicts agree with the minor oracle, " << bad_evidence << " bad evidence";
  return {agree == total && bad_evidence == 0, os.str()};
}

// -- 2 ----------------------------------------------------------------------
Outcome odd_round_trip() {
  std::mt19937_64 rng(1002);
  const unsigned degrees[] = {3, 5, 7};
  int recovered = 0;
  int refused = 0;
  int bad = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const unsigned d = degrees[iter % 3];
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    UniPoly h = oracle::monotone_unipoly(rng, d);
    if (iter % 4 == 3) h = Rational(-1) * h;
    const RationalVector xi = oracle::normalized_direction(rng, n);
    const Polynomial p = compose_linear(h, xi);
    g_suite.push_back(p);
    const Verdict v = decide_quasiconvex_odd(p);
    if (v.answer != Answer::Yes || !v.certificate) continue;
    const auto* rep = std::get_if<QuasiRepresentation>(&*v.certificate);
    if (rep && rep->xi == xi && rep->h == h && check_verdict(p, v)) ++recovered;
  }
  for (int iter = 0; iter < 100; ++iter) {
    const unsigned d = degrees[iter % 3];
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 2, 4));
    const UniPoly h = oracle::monotone_unipoly(rng, d);
    const RationalVector xi = oracle::normalized_direction(rng, n);
    // a coordinate b with e_b not parallel to xi
    std::size_t b = 0;
    do {
      b = static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<long>(n) - 1));
    } while ([&] {
      for (std::size_t i = 0; i < n; ++i) {
        if (i != b && !xi[i].is_zero()) return false;
      }
      return true;
    }());
    Exponents e(n, 0);
    e[b] = static_cast<std::uint32_t>(oracle::uniform(rng, 1, d - 1));
    long c = oracle::uniform(rng, -5, 4);
    if (c >= 0) ++c;
    Polynomial p = compose_linear(h, xi);
    p.add_term(e, Rational(c));
    g_suite.push_back(p);
    const Verdict v = decide_quasiconvex_odd(p);
    if (v.answer == Answer::No) ++refused;
    if (!check_verdict(p, v)) ++bad;
  }
  std::ostringstream os;
  os << recovered << "/100 recovered exactly, " << refused << "/100 perturbed refused, " << bad << " bad witnesses";
  return {recovered == 100 && refused == 100 && bad == 0, os.str()};
}

// -- 3 ----------------------------------------------------------------------
Outcome cube_and_quartic() {
  const Polynomial cube = parse_polynomial("x1^3", 1);
  const Polynomial quartic = parse_polynomial("x1^4 - 8*x1^3 + 18*x1^2", 1);
  g_suite.push_back(cube);
  g_suite.push_back(quartic);
  const Answer q = analyze(cube, Property::Quasi).verdict.answer;
  const Answer c = analyze(cube, Property::Convex).verdict.answer;
  const Answer p = analyze(cube, Property::Pseudo).verdict.answer;
  const GridOracleResult grid = oracle_quasiconvex_grid(quartic, Rational(-1), Rational(5), Rational(1, 4));
  const auto w = refute_convexity(quartic);
  bool in_range = false;
  if (w) {
    const auto* d = std::get_if<IndefiniteDirection>(&*w);
    in_range = d && check_witness(quartic, *w) && d->point[0] > Rational(1) && d->point[0] < Rational(3);
  }
  std::ostringstream os;
  os << "x^3: quasi " << to_string(q) << ", convex " << to_string(c) << ", pseudo " << to_string(p)
     << "; quartic grid " << (grid.consistent ? "consistent" : "violated") << ", Hessian witness "
     << (in_range ? "in (1,3)" : "missing");
  return {q == Answer::Yes && c == Answer::No && p == Answer::No && grid.consistent && in_range, os.str()};
}

// -- 4 ----------------------------------------------------------------------
Outcome reduction_positive() {
  int verified = 0;
  int witnessed = 0;
  SamplerConfig cfg;
  cfg.budget = 10000;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = seed % 2 == 0 ? 2 : 3;
    const InstanceRecord r = random_sos(4000 + seed, n, 1 + seed % 3);
    const ReductionOutput out = construct_f(r.form);
    g_suite.push_back(out.f);
    if (verify(sos_convexity_certificate(out, *r.certificate))) ++verified;
    cfg.seed = seed;
    if (refute_convexity(out.f, cfg)) ++witnessed;
  }
  std::ostringstream os;
  os << verified << "/50 certificates verify, " << witnessed << " Hessian witnesses in 10^4 samples each";
  return {verified == 50 && witnessed == 0, os.str()};
}

// -- 5 ----------------------------------------------------------------------
Outcome reduction_negative() {
  int ok = 0;
  int unknown = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 3;
    const InstanceRecord r = random_indefinite(5000 + seed, n);
    if (r.status != InstanceStatus::IndefiniteByWitness) {
      ++unknown;
      continue;
    }
    const RationalVector& pt = *r.negative_point;
    const RationalVector xbar(pt.begin(), pt.begin() + static_cast<long>(n));
    const RationalVector ybar(pt.begin() + static_cast<long>(n), pt.end());
    const ReductionOutput out = construct_f(r.form);
    g_suite.push_back(out.f);
    const Rational bval = r.form.evaluate(xbar, ybar);
    const IndefiniteDirection w = nonconvexity_witness(out, xbar, ybar);
    RationalVector want_point(2 * n);
    RationalVector want_dir(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      want_point[i] = xbar[i];
      want_dir[n + i] = ybar[i];
    }
    const Rational curv = hessian(out.f).evaluate(w.point).quadratic_value(w.direction);
    if (w.point == want_point && w.direction == want_dir && curv == Rational(2) * bval && curv.sign() < 0) ++ok;
  }
  std::ostringstream os;
  os << ok << "/50 witnesses with z^T H z = 2 b(xbar; ybar) < 0";
  if (unknown) os << ", " << unknown << " searches exhausted";
  return {ok == 50, os.str()};
}

// -- 6 ----------------------------------------------------------------------
Outcome residual_universality() {
  std::mt19937_64 rng(1006);
  int ok = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const BiquadraticForm b = random_biquadratic(rng, n, static_cast<int>(oracle::uniform(rng, 1, 10)), 9);
    if (verify(residual_certificate(b))) ++ok;
  }
  std::ostringstream os;
  os << ok << "/100 residual certificates verify";
  return {ok == 100, os.str()};
}

// -- 7 ----------------------------------------------------------------------
Outcome block_identities() {
  std::mt19937_64 rng(1007);
  int blocks = 0;
  int accounting = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    BiquadraticForm b = random_biquadratic(rng, n, static_cast<int>(oracle::uniform(rng, 1, 10)), 9);
    if (b.is_zero()) b.accumulate(1, 1, 1, 1, Rational(1));
    const ReductionOutput out = construct_f(b);
    const std::size_t ar = 2 * n;
    Polynomial ya(ar);
    Polynomial xb(ar);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ya += Polynomial::variable(ar, n + i) * out.A(i, j) * Polynomial::variable(ar, n + j);
        xb += Polynomial::variable(ar, i) * out.B(i, j) * Polynomial::variable(ar, j);
      }
    }
    const Rational half(1, 2);
    if (half * ya == out.b_poly && half * xb == out.b_poly) ++blocks;
    const Polynomial g = out.f - out.b_poly;
    const Rational w = Rational(static_cast<long>(n * n)) * out.gamma / Rational(2);
    bool good = g.term_count() == 2 * n + n * (n - 1);
    for (const auto& [e, c] : g.terms()) good = good && c == w;
    if (good) ++accounting;
  }
  std::ostringstream os;
  os << blocks << "/100 block identities, " << accounting << "/100 monomial counts";
  return {blocks == 100 && accounting == 100, os.str()};
}

// -- 8 ----------------------------------------------------------------------
Outcome homogeneous_consistency() {
  std::mt19937_64 rng(1008);
  int contradictions = 0;
  int certified = 0;
  int grid_hits = 0;
  int hessian_hits = 0;
  int bad = 0;
  SamplerConfig cfg;
  cfg.budget = 2000;
  for (int iter = 0; iter < 100; ++iter) {
    Polynomial p(2);
    std::optional<SosConvexityCertificate> cert;
    if (iter % 2 == 0) {
      // sum c_i (a_i^T x)^4; its Hessian form is sum 12 c_i ((a^T x)(a^T z))^2
      SosCertificate sc{Polynomial(4), {}};
      const long k = oracle::uniform(rng, 1, 3);
      for (long i = 0; i < k; ++i) {
        RationalVector a{Rational(oracle::uniform(rng, -3, 3)), Rational(oracle::uniform(rng, -3, 3))};
        if (a[0].is_zero() && a[1].is_zero()) a[0] = Rational(1);
        const Rational c(oracle::uniform(rng, 1, 4));
        const Polynomial l = a[0] * Polynomial::variable(2, 0) + a[1] * Polynomial::variable(2, 1);
        p += c * pow(l, 4);
        const Polynomial lx = a[0] * Polynomial::variable(4, 0) + a[1] * Polynomial::variable(4, 1);
        const Polynomial lz = a[0] * Polynomial::variable(4, 2) + a[1] * Polynomial::variable(4, 3);
        sc.squares.push_back({Rational(12) * c, lx * lz});
      }
      sc.target = hessian_form(p);
      cert = SosConvexityCertificate{p, sc.target, sc};
    } else {
      do {
        p = oracle::random_form(rng, 2, 4, static_cast<int>(oracle::uniform(rng, 2, 5)), 5);
      } while (p.is_zero());
    }
    g_suite.push_back(p);
    const bool convex_cert = cert && verify(*cert);
    if (convex_cert) ++certified;
    cfg.seed = static_cast<std::uint64_t>(iter);
    const auto hw = refute_convexity(p, cfg);
    const GridOracleResult grid = oracle_quasiconvex_grid(p, Rational(-2), Rational(2), Rational(1, 2));
    if (hw) {
      ++hessian_hits;
      if (!check_witness(p, *hw)) ++bad;
    }
    if (!grid.consistent) {
      ++grid_hits;
      if (!grid.witness || !check_witness(p, *grid.witness)) ++bad;
    }
    if (convex_cert && (!grid.consistent || hw)) ++contradictions;
  }
  std::ostringstream os;
  os << contradictions << " contradictions; " << certified << " certified convex, " << hessian_hits
     << " Hessian witnesses, " << grid_hits << " grid violations, " << bad << " bad witnesses";
  return {contradictions == 0 && bad == 0 && certified == 50, os.str()};
}

// -- 9 ----------------------------------------------------------------------
Outcome strong_lift() {
  int ok_forms = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = seed % 2 == 0 ? 1 : 2;
    const InstanceRecord r = random_sos(9000 + seed, n, 1 + seed % 2);
    const ReductionOutput out = construct_f(r.form);
    if (!verify(sos_convexity_certificate(out, *r.certificate))) continue;
    const Polynomial q = lift_degree(out.f, 4, LiftMode::Strong);
    g_suite.push_back(q);
    const PolyMatrix H = hessian(q);
    SamplerConfig cfg;
    cfg.seed = seed;
    bool all = true;
    for (std::size_t k = 0; k < 1000 && all; ++k) {
      RationalMatrix h = H.evaluate(sample_point(cfg, q.arity(), k));
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, i) -= Rational(1);
      all = psd_test_exact(h).psd;
    }
    if (all) ++ok_forms;
  }
  std::ostringstream os;
  os << ok_forms << "/20 lifted forms have H - I PSD at 1000 samples";
  return {ok_forms == 20, os.str()};
}

// -- 10 ---------------------------------------------------------------------
Outcome sturm_toolkit() {
  std::mt19937_64 rng(1010);
  int agree = 0;
  for (int iter = 0; iter < 200; ++iter) {
    UniPoly u = oracle::random_unipoly(rng, 9, 20);
    if (iter % 4 == 0) {
      // force some repeated rational roots
      const Rational r(oracle::uniform(rng, -6, 6), oracle::uniform(rng, 1, 3));
      u = u * pow(UniPoly({-r, Rational(1)}), 2);
      if (u.degree() > 9) u = pow(UniPoly({-r, Rational(1)}), 2);
    }
    if (count_real_roots(u) == oracle::count_roots_bisection(u)) ++agree;
  }
  std::ostringstream os;
  os << agree << "/200 root counts agree with Descartes bisection";
  return {agree == 200, os.str()};
}

// -- 11 ---------------------------------------------------------------------
Outcome dispatch_matrix() {
  std::mt19937_64 rng(1011);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const unsigned d = static_cast<unsigned>(oracle::uniform(rng, 1, 6));
    Polynomial p = oracle::random_polynomial(rng, n, d, 5, 7);
    if (iter % 3 == 0) p = oracle::random_form(rng, n, d, 4, 7);
    g_suite.push_back(p);
  }
  std::map<std::string, std::array<int, 3>> cells;
  int misplaced = 0;
  int bad = 0;
  AnalyzeOptions options;
  options.sampler.budget = 500;
  for (const auto& p : g_suite) {
    for (Property prop : kAll) {
      const AnalysisReport r = analyze(p, prop, options);
      auto& cell = cells[to_string(r.degree_class)];
      cell[static_cast<int>(r.verdict.answer)] += 1;
      if (r.verdict.answer == Answer::Unknown && is_decidable_cell(r.degree_class, prop)) ++misplaced;
      if (r.verdict.answer == Answer::Unknown && r.degree_class != DegreeClass::EvenHigher) ++misplaced;
      if (!check_verdict(p, r.verdict)) ++bad;
    }
  }
  std::ostringstream os;
  os << g_suite.size() << " polynomials x 5 properties;";
  for (const auto& [name, c] : cells) os << " " << name << " " << c[0] << "/" << c[1] << "/" << c[2];
  os << " (yes/no/unknown); " << misplaced << " misplaced UNKNOWN, " << bad << " bad evidence";
  return {misplaced == 0 && bad == 0, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_s;  // 0 = no limit
  };
  const std::vector<Criterion> criteria{
      {"quadratic completeness", quadratic_completeness, 10},
      {"odd-degree round trip", odd_round_trip, 60},
      {"x^3 and x^4-8x^3+18x^2", cube_and_quartic, 0},
      {"reduction, psd side", reduction_positive, 300},
      {"reduction, indefinite side", reduction_negative, 0},
      {"residual certificates", residual_universality, 0},
      {"block identities", block_identities, 0},
      {"homogeneous quartics: grid vs Hessian", homogeneous_consistency, 0},
      {"strong lift", strong_lift, 0},
      {"Sturm counts", sturm_toolkit, 0},
      {"dispatch matrix", dispatch_matrix, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (criteria[i].limit_s > 0 && secs > criteria[i].limit_s) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %-38s %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
