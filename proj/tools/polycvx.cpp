// polycvx: command-line front end.
//
// Exit codes: 0 YES, 1 NO, 2 UNKNOWN, 64 usage error, 65 bad input data,
// 70 internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "polyconvex/analyzer.hpp"
#include "polyconvex/certificates.hpp"
#include "polyconvex/io.hpp"
#include "polyconvex/reduction.hpp"
#include "polyconvex/text.hpp"

using namespace polycvx;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(Answer a) {
  switch (a) {
    case Answer::Yes:
      return 0;
    case Answer::No:
      return 1;
    case Answer::Unknown:
      return 2;
  }
  return 2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text << '\n';
}

// Polynomial from the positional argument, or stdin when it is empty or "-".
Polynomial read_polynomial(std::string text, std::size_t arity) {
  if (text.empty() || text == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  }
  const std::size_t inferred = infer_arity(text);
  return parse_polynomial(text, arity != 0 ? arity : std::max<std::size_t>(inferred, 1));
}

struct Common {
  std::string poly;
  std::size_t arity = 0;
};

void add_poly_args(CLI::App* cmd, Common& c) {
  cmd->add_option("poly", c.poly, "polynomial in x1, x2, ... (stdin if omitted)");
  cmd->add_option("--arity", c.arity, "number of variables (default: largest index used)");
}

void print_verdict_text(const Verdict& v) {
  std::cout << to_string(v.answer) << ": " << v.reason << '\n';
  if (v.certificate) std::cout << "certificate: " << to_json(*v.certificate).dump() << '\n';
  if (v.witness) std::cout << "witness: " << to_json(*v.witness).dump() << '\n';
}

int run_analyze(const Common& in, const std::string& property, std::size_t budget, std::uint64_t seed,
                unsigned threads, const std::string& cert_path, bool json) {
  const Polynomial p = read_polynomial(in.poly, in.arity);
  AnalyzeOptions opts;
  opts.sampler.budget = budget;
  opts.sampler.seed = seed;
  opts.sampler.threads = threads;
  if (!cert_path.empty()) {
    const Json j = read_json(cert_path);
    if (j.contains("source")) {
      opts.certificate = sos_convexity_from_json(j);
    } else {
      // Plain certificate for the Hessian form of p.
      SosCertificate c = sos_certificate_from_json(j);
      opts.certificate = SosConvexityCertificate{p, c.target, c};
    }
    if (!(opts.certificate->source == p)) throw DataError("certificate is for a different polynomial");
    if (!verify(*opts.certificate)) throw DataError("certificate does not verify");
  }
  const AnalysisReport r = analyze(p, parse_property(property), opts);
  if (json) {
    Json out = {{"command", "analyze"}, {"input", to_string(p)}, {"arity", p.arity()}};
    out.update(to_json(r));
    std::cout << out.dump() << '\n';
  } else {
    std::cout << to_string(r.property) << " [" << to_string(r.degree_class) << (r.homogeneous ? ", homogeneous" : "")
              << "] ";
    print_verdict_text(r.verdict);
  }
  return exit_code(r.verdict.answer);
}

Json variable_map(std::size_t n, std::size_t blocks) {
  static const char* names[] = {"x", "y", "zx", "zy"};
  Json m = Json::object();
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 1; i <= n; ++i) m["x" + std::to_string(b * n + i)] = names[b] + std::to_string(i);
  }
  return m;
}

int run_reduce(const std::string& path, std::optional<std::string> residual, std::optional<std::string> sosconvex,
               bool json) {
  const Json j = read_json(path);
  const BiquadraticForm b = biquadratic_from_json(j);
  const ReductionOutput out = construct_f(b);
  Json report = {{"command", "reduce"},
                 {"n", out.n},
                 {"gamma", out.gamma.str()},
                 {"b", to_string(out.b_poly)},
                 {"f", to_string(out.f)},
                 {"variables", variable_map(out.n, 2)}};
  auto emit = [&](const char* key, const Json& cert, const std::string& file) {
    if (!file.empty()) {
      write_file(file, cert.dump(2));
      report[key] = file;
    } else {
      report[key] = cert;
    }
  };
  if (residual || sosconvex) report["certificate_variables"] = variable_map(out.n, 4);
  if (residual) emit("residual_certificate", to_json(residual_certificate(b)), *residual);
  if (sosconvex) {
    if (!j.contains("certificate")) throw DataError("--emit-sosconvexity-cert needs a \"certificate\" for b in " + path);
    const SosCertificate bc = sos_certificate_from_json(j.at("certificate"));
    try {
      emit("sosconvexity_certificate", to_json(sos_convexity_certificate(out, bc)), *sosconvex);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    }
  }
  if (json) {
    std::cout << report.dump() << '\n';
  } else {
    std::cout << to_string(out.f) << '\n';
    for (const char* key : {"residual_certificate", "sosconvexity_certificate"}) {
      if (report.contains(key)) std::cout << key << ": " << report[key].dump() << '\n';
    }
  }
  return 0;
}

int run_instances(const std::string& which, std::size_t n, std::size_t k, std::uint64_t seed, bool json) {
  InstanceRecord rec = which == "choi"              ? choi_instance()
                       : which == "random-sos"      ? random_sos(seed, n, k)
                                                    : random_indefinite(seed, n);
  Json out = to_json(rec.form);
  out["name"] = rec.name;
  out["status"] = to_string(rec.status);
  out["provenance"] = rec.provenance;
  if (rec.certificate) out["certificate"] = to_json(*rec.certificate);
  if (rec.negative_point) {
    out["negative_point"] = to_json(*rec.negative_point);
    out["negative_value"] = rec.form.expand().evaluate(*rec.negative_point).str();
  }
  // Output is a valid input for `reduce --in`.
  if (!json) std::cerr << rec.name << ": " << to_string(rec.status) << '\n';
  std::cout << out.dump() << '\n';
  return rec.status == InstanceStatus::Unknown ? 2 : 0;
}

int run_verify(const std::string& path, bool json) {
  const Json j = read_json(path);
  bool ok = false;
  std::string kind;
  if (j.contains("source")) {
    ok = verify(sos_convexity_from_json(j));
    kind = "sos_convexity";
  } else {
    ok = verify(sos_certificate_from_json(j));
    kind = "sos";
  }
  if (json) {
    std::cout << Json{{"command", "verify-cert"}, {"kind", kind}, {"valid", ok}}.dump() << '\n';
  } else {
    std::cout << (ok ? "valid " : "INVALID ") << kind << " certificate\n";
  }
  return ok ? 0 : 1;
}

int run_refute(const Common& in, const std::string& property, std::size_t budget, std::uint64_t seed,
               unsigned threads, bool json) {
  const Polynomial p = read_polynomial(in.poly, in.arity);
  SamplerConfig cfg;
  cfg.budget = budget;
  cfg.seed = seed;
  cfg.threads = threads;
  std::optional<Witness> w;
  if (property == "nonnegative") {
    if (auto pt = refute_nonnegativity(p, cfg)) w = NegativeValue{*pt};
  } else {
    switch (parse_property(property)) {
      case Property::Convex:
      case Property::Strict:
      case Property::Strong:
        w = refute_convexity(p, cfg);
        break;
      case Property::Quasi:
        w = refute_quasiconvexity(p, cfg);
        break;
      case Property::Pseudo:
        w = refute_pseudoconvexity(p, cfg);
        break;
    }
  }
  if (json) {
    Json out = {{"command", "refute"}, {"property", property}, {"budget", budget}, {"seed", seed},
                {"found", w.has_value()}};
    out["witness"] = w ? to_json(*w) : Json(nullptr);
    if (w) {
      if (const auto* nv = std::get_if<NegativeValue>(&*w)) out["value"] = p.evaluate(nv->point).str();
    }
    std::cout << out.dump() << '\n';
  } else if (w) {
    std::cout << "NO: witness " << to_json(*w).dump() << '\n';
    if (const auto* nv = std::get_if<NegativeValue>(&*w)) std::cout << "value: " << p.evaluate(nv->point) << '\n';
  } else {
    std::cout << "UNKNOWN: no witness in " << budget << " samples\n";
  }
  return w ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact convexity analysis of polynomials with rational coefficients"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));
  bool json = false;
  app.add_flag("--json", json, "single-line JSON report on stdout");

  const std::uint64_t default_seed = SamplerConfig{}.seed;
  const std::vector<std::string> properties = {"convex", "strict", "strong", "quasi", "pseudo"};

  Common an;
  std::string an_property;
  std::size_t an_budget = SamplerConfig{}.budget;
  std::uint64_t an_seed = default_seed;
  unsigned an_threads = 0;
  std::string an_cert;
  auto* analyze_cmd = app.add_subcommand("analyze", "decide a convexity property");
  add_poly_args(analyze_cmd, an);
  analyze_cmd->add_option("--property", an_property)->required()->check(CLI::IsMember(properties));
  analyze_cmd->add_option("--refute-budget", an_budget, "refuter samples in the NP-hard cells");
  analyze_cmd->add_option("--seed", an_seed);
  analyze_cmd->add_option("--threads", an_threads, "0 = hardware concurrency");
  analyze_cmd->add_option("--cert", an_cert, "sos-convexity certificate for p")->check(CLI::ExistingFile);
  analyze_cmd->add_flag("--json", json);

  std::string bq_path;
  std::optional<std::string> residual_out;
  std::optional<std::string> sosconvex_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "quartic form f from a biquadratic form b");
  reduce_cmd->add_option("--in", bq_path, "biquadratic JSON file")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--emit-residual-cert", residual_out, "also emit the residual certificate [to FILE]")
      ->expected(0, 1)
      ->default_str("");
  reduce_cmd->add_option("--emit-sosconvexity-cert", sosconvex_out, "also emit the sos-convexity certificate [to FILE]")
      ->expected(0, 1)
      ->default_str("");
  reduce_cmd->add_flag("--json", json);

  Common li;
  unsigned li_degree = 4;
  std::string li_mode;
  auto* lift_cmd = app.add_subcommand("lift", "raise the degree while preserving the convexity question");
  add_poly_args(lift_cmd, li);
  lift_cmd->add_option("--degree", li_degree)->required();
  lift_cmd->add_option("--mode", li_mode)->required()->check(CLI::IsMember({"convexity", "strong", "quasi"}));
  lift_cmd->add_flag("--json", json);

  Common ga;
  auto* gap_cmd = app.add_subcommand("gap", "midpoint gap form p(x)/2 + p(y)/2 - p((x+y)/2)");
  add_poly_args(gap_cmd, ga);
  gap_cmd->add_flag("--json", json);

  std::string inst_which;
  std::size_t inst_n = 2;
  std::size_t inst_k = 1;
  std::uint64_t inst_seed = 1;
  auto* inst_cmd = app.add_subcommand("instances", "biquadratic instances with known status");
  inst_cmd->add_option("family", inst_which)->required()->check(CLI::IsMember({"choi", "random-sos", "random-indefinite"}));
  inst_cmd->add_option("--n", inst_n)->check(CLI::Range(1, 16));
  inst_cmd->add_option("--k", inst_k)->check(CLI::Range(1, 64));
  inst_cmd->add_option("--seed", inst_seed);
  inst_cmd->add_flag("--json", json);

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify-cert", "check a certificate exactly");
  verify_cmd->add_option("file", cert_path)->required()->check(CLI::ExistingFile);
  verify_cmd->add_flag("--json", json);

  Common re;
  std::string re_property;
  std::size_t re_budget = SamplerConfig{}.budget;
  std::uint64_t re_seed = default_seed;
  unsigned re_threads = 0;
  auto* refute_cmd = app.add_subcommand("refute", "search for an exact counterexample");
  add_poly_args(refute_cmd, re);
  std::vector<std::string> refutable = properties;
  refutable.emplace_back("nonnegative");
  refute_cmd->add_option("--property", re_property)->required()->check(CLI::IsMember(refutable));
  refute_cmd->add_option("--budget", re_budget);
  refute_cmd->add_option("--seed", re_seed);
  refute_cmd->add_option("--threads", re_threads);
  refute_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(an, an_property, an_budget, an_seed, an_threads, an_cert, json);
    if (*reduce_cmd) return run_reduce(bq_path, residual_out, sosconvex_out, json);
    if (*lift_cmd) {
      const Polynomial q = lift_degree(read_polynomial(li.poly, li.arity), li_degree, parse_lift_mode(li_mode));
      if (json) {
        std::cout << Json{{"command", "lift"}, {"mode", li_mode}, {"degree", li_degree}, {"arity", q.arity()},
                          {"result", to_string(q)}}.dump()
                  << '\n';
      } else {
        std::cout << to_string(q) << '\n';
      }
      return 0;
    }
    if (*gap_cmd) {
      const Polynomial p = read_polynomial(ga.poly, ga.arity);
      const Polynomial q = midpoint_gap_form(p);
      if (json) {
        std::cout << Json{{"command", "gap"}, {"arity", q.arity()}, {"result", to_string(q)},
                          {"variables", variable_map(p.arity(), 2)}}.dump()
                  << '\n';
      } else {
        std::cout << to_string(q) << '\n';
      }
      return 0;
    }
    if (*inst_cmd) return run_instances(inst_which, inst_n, inst_k, inst_seed, json);
    if (*verify_cmd) return run_verify(cert_path, json);
    if (*refute_cmd) return run_refute(re, re_property, re_budget, re_seed, re_threads, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
