// Thin pybind11 layer. Structured results cross the boundary as JSON text and
// are decoded by the Python package, so the schema is the one the CLI prints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "polyconvex/analyzer.hpp"
#include "polyconvex/certificates.hpp"
#include "polyconvex/reduction.hpp"
#include "polyconvex/roots.hpp"
#include "polyconvex/text.hpp"

namespace py = pybind11;
using namespace polycvx;

namespace {

Polynomial read(const std::string& text, std::optional<std::size_t> arity) {
  return parse_polynomial(text, arity ? *arity : infer_arity(text));
}

std::string analyze_json(const std::string& text, const std::string& property, std::optional<std::size_t> arity,
                         std::size_t budget, std::uint64_t seed, std::optional<std::string> certificate) {
  const Polynomial p = read(text, arity);
  AnalyzeOptions opts;
  opts.sampler.budget = budget;
  opts.sampler.seed = seed;
  if (certificate) {
    const Json j = Json::parse(*certificate);
    if (j.contains("source")) {
      opts.certificate = sos_convexity_from_json(j);
    } else {
      SosCertificate c = sos_certificate_from_json(j);
      opts.certificate = SosConvexityCertificate{p, c.target, c};
    }
  }
  return to_json(analyze(p, parse_property(property), opts)).dump();
}

std::string reduce_json(const std::string& bq) {
  const Json j = Json::parse(bq);
  const BiquadraticForm b = biquadratic_from_json(j);
  const ReductionOutput out = construct_f(b);
  Json r = {{"n", out.n},
            {"gamma", out.gamma.str()},
            {"b", to_string(out.b_poly)},
            {"f", to_string(out.f)},
            {"residual_certificate", to_json(residual_certificate(b))}};
  if (j.contains("certificate")) {
    r["sosconvexity_certificate"] = to_json(sos_convexity_certificate(out, sos_certificate_from_json(j["certificate"])));
  }
  return r.dump();
}

bool verify_json(const std::string& cert) {
  const Json j = Json::parse(cert);
  return j.contains("source") ? verify(sos_convexity_from_json(j)) : verify(sos_certificate_from_json(j));
}

std::string instance_json(const std::string& which, std::size_t n, std::size_t k, std::uint64_t seed) {
  const InstanceRecord rec = which == "choi"         ? choi_instance()
                             : which == "random-sos" ? random_sos(seed, n, k)
                             : which == "random-indefinite"
                                 ? random_indefinite(seed, n)
                                 : throw std::invalid_argument("unknown instance family: " + which);
  Json out = to_json(rec.form);
  out["name"] = rec.name;
  out["status"] = to_string(rec.status);
  out["provenance"] = rec.provenance;
  if (rec.certificate) out["certificate"] = to_json(*rec.certificate);
  if (rec.negative_point) out["negative_point"] = to_json(*rec.negative_point);
  return out.dump();
}

std::optional<std::string> refute_json(const std::string& text, const std::string& property,
                                       std::optional<std::size_t> arity, std::size_t budget, std::uint64_t seed) {
  const Polynomial p = read(text, arity);
  SamplerConfig cfg;
  cfg.budget = budget;
  cfg.seed = seed;
  std::optional<Witness> w;
  if (property == "nonnegative") {
    if (auto pt = refute_nonnegativity(p, cfg)) w = NegativeValue{*pt};
  } else {
    const Property prop = parse_property(property);
    w = prop == Property::Quasi    ? refute_quasiconvexity(p, cfg)
        : prop == Property::Pseudo ? refute_pseudoconvexity(p, cfg)
                                   : refute_convexity(p, cfg);
  }
  if (!w) return std::nullopt;
  return to_json(*w).dump();
}

int real_roots(const std::vector<std::string>& coefficients) {
  std::vector<Rational> c;
  for (const auto& s : coefficients) c.push_back(Rational::parse(s));
  return count_real_roots(UniPoly(c));
}

}  // namespace

PYBIND11_MODULE(_polyconvex, m) {
  m.doc() = "exact convexity analysis of rational polynomials";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("version", &version);
  m.def(
      "canonical", [](const std::string& text, std::optional<std::size_t> arity) { return to_string(read(text, arity)); },
      py::arg("text"), py::arg("arity") = py::none());
  m.def(
      "evaluate",
      [](const std::string& text, const std::vector<std::string>& point) {
        RationalVector x;
        for (const auto& s : point) x.push_back(Rational::parse(s));
        return read(text, x.size()).evaluate(x).str();
      },
      py::arg("text"), py::arg("point"));
  m.def("analyze_json", &analyze_json, py::arg("text"), py::arg("property"), py::arg("arity") = py::none(),
        py::arg("budget") = 2000, py::arg("seed") = SamplerConfig{}.seed, py::arg("certificate") = py::none());
  m.def("reduce_json", &reduce_json, py::arg("bq"));
  m.def("verify_json", &verify_json, py::arg("certificate"));
  m.def("instance_json", &instance_json, py::arg("which"), py::arg("n") = 2, py::arg("k") = 1, py::arg("seed") = 0);
  m.def("refute_json", &refute_json, py::arg("text"), py::arg("property"), py::arg("arity") = py::none(),
        py::arg("budget") = 2000, py::arg("seed") = SamplerConfig{}.seed);
  m.def(
      "gap", [](const std::string& text, std::optional<std::size_t> arity) { return to_string(midpoint_gap_form(read(text, arity))); },
      py::arg("text"), py::arg("arity") = py::none());
  m.def(
      "lift",
      [](const std::string& text, unsigned degree, const std::string& mode, std::optional<std::size_t> arity) {
        return to_string(lift_degree(read(text, arity), degree, parse_lift_mode(mode)));
      },
      py::arg("text"), py::arg("degree"), py::arg("mode") = "convexity", py::arg("arity") = py::none());
  m.def("count_real_roots", &real_roots, py::arg("coefficients"),
        "distinct real roots of sum c_k t^k, coefficients given low to high as rational strings");
}
