#include "polyconvex/io.hpp"

#include <stdexcept>
#include <string>

#include "polyconvex/text.hpp"

namespace polycvx {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw std::invalid_argument(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

Json squares_json(const std::vector<WeightedSquare>& squares) {
  Json out = Json::array();
  for (const auto& s : squares) out.push_back({{"weight", to_json(s.weight)}, {"poly", to_string(s.poly)}});
  return out;
}

std::vector<WeightedSquare> squares_from(const Json& j, std::size_t arity) {
  const Json& arr = field(j, "squares");
  if (!arr.is_array()) throw std::invalid_argument("'squares' must be an array");
  std::vector<WeightedSquare> out;
  for (const auto& s : arr) out.push_back({rational_from_json(field(s, "weight")), parse_polynomial(text_field(s, "poly"), arity)});
  return out;
}

std::string direction_name(Monotonicity m) {
  switch (m) {
    case Monotonicity::Nondecreasing:
      return "nondecreasing";
    case Monotonicity::Nonincreasing:
      return "nonincreasing";
    case Monotonicity::None:
      return "none";
  }
  return "none";
}

Json unipoly_json(const UniPoly& u) {
  Json coeffs = Json::array();
  for (const auto& c : u.coefficients()) coeffs.push_back(to_json(c));
  return {{"text", to_string(u)}, {"coefficients", coeffs}};
}

Json representation_json(const QuasiRepresentation& r) {
  return {{"xi", to_json(r.xi)}, {"h", unipoly_json(r.h)}, {"direction", direction_name(r.direction)}};
}

struct WitnessWriter {
  Json operator()(const IndefiniteDirection& w) const {
    return {{"kind", "indefinite_direction"}, {"point", to_json(w.point)}, {"direction", to_json(w.direction)}};
  }
  Json operator()(const FlatDirection& w) const {
    return {{"kind", "flat_direction"}, {"point", to_json(w.point)}, {"direction", to_json(w.direction)}};
  }
  Json operator()(const SublevelTriple& w) const {
    return {{"kind", "sublevel_triple"}, {"a", to_json(w.a)}, {"b", to_json(w.b)}, {"lambda", to_json(w.lambda)}};
  }
  Json operator()(const PseudoViolation& w) const {
    return {{"kind", "pseudo_violation"}, {"x", to_json(w.x)}, {"y", to_json(w.y)}};
  }
  Json operator()(const NegativeValue& w) const { return {{"kind", "negative_value"}, {"point", to_json(w.point)}}; }
  Json operator()(const LineNonMonotone& w) const {
    return {{"kind", "line_non_monotone"}, {"base", to_json(w.base)}, {"direction", to_json(w.direction)},
            {"ta", to_json(w.ta)},         {"tb", to_json(w.tb)},     {"tc", to_json(w.tc)}};
  }
  Json operator()(const StationaryLevel& w) const {
    return {{"kind", "stationary_level"}, {"xi", to_json(w.xi)}, {"lo", to_json(w.lo)}, {"hi", to_json(w.hi)}};
  }
};

struct CertificateWriter {
  Json operator()(const PivotTranscript& t) const {
    Json basis = Json::array();
    for (const auto& b : t.basis) basis.push_back(to_json(b));
    return {{"kind", "pivot_transcript"}, {"pivots", to_json(t.pivots)}, {"basis", basis}};
  }
  Json operator()(const MinorTranscript& t) const {
    return {{"kind", "leading_minors"}, {"minors", to_json(t.minors)}};
  }
  Json operator()(const QuasiRepresentation& r) const {
    Json out = {{"kind", "quasi_representation"}};
    out.update(representation_json(r));
    return out;
  }
  Json operator()(const PseudoCertificate& c) const {
    Json out = {{"kind", "pseudo_representation"}};
    out.update(representation_json(c.representation));
    out["derivative"] = unipoly_json(c.derivative);
    out["real_roots"] = c.real_roots;
    return out;
  }
  Json operator()(const SosConvexityCertificate& c) const {
    Json out = {{"kind", "sos_convexity"}};
    out.update(to_json(c));
    return out;
  }
};

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  RationalVector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json to_json(const SosCertificate& c) {
  return {{"target", to_string(c.target)}, {"arity", c.target.arity()}, {"squares", squares_json(c.squares)}};
}

SosCertificate sos_certificate_from_json(const Json& j) {
  const std::size_t arity = size_field(j, "arity");
  return SosCertificate{parse_polynomial(text_field(j, "target"), arity), squares_from(j, arity)};
}

Json to_json(const SosConvexityCertificate& c) {
  return {{"source", to_string(c.source)},
          {"target", to_string(c.cert.target)},
          {"arity", c.cert.target.arity()},
          {"squares", squares_json(c.cert.squares)}};
}

SosConvexityCertificate sos_convexity_from_json(const Json& j) {
  const std::size_t arity = size_field(j, "arity");
  if (arity % 2 != 0) throw std::invalid_argument("sos-convexity certificate arity must be even");
  Polynomial source = parse_polynomial(text_field(j, "source"), arity / 2);
  SosCertificate cert = sos_certificate_from_json(j);
  Polynomial form = cert.target;
  return SosConvexityCertificate{std::move(source), std::move(form), std::move(cert)};
}

Json to_json(const BiquadraticForm& b) {
  Json entries = Json::array();
  for (const auto& [key, c] : b.coefficients()) entries.push_back({key[0], key[1], key[2], key[3], c.str()});
  return {{"n", b.n()}, {"entries", entries}};
}

BiquadraticForm biquadratic_from_json(const Json& j) {
  BiquadraticForm b(size_field(j, "n"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw std::invalid_argument("'entries' must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 5) throw std::invalid_argument("entry must be [i, j, k, l, coefficient]");
    for (std::size_t t = 0; t < 4; ++t) {
      if (!e[t].is_number_unsigned()) throw std::invalid_argument("entry indices must be positive integers");
    }
    b.accumulate(e[0].get<unsigned>(), e[1].get<unsigned>(), e[2].get<unsigned>(), e[3].get<unsigned>(),
                 rational_from_json(e[4]));
  }
  return b;
}

Json to_json(const Witness& w) { return std::visit(WitnessWriter{}, w); }

Witness witness_from_json(const Json& j) {
  const std::string kind = text_field(j, "kind");
  auto vec = [&](const char* key) { return vector_from_json(field(j, key)); };
  auto rat = [&](const char* key) { return rational_from_json(field(j, key)); };
  if (kind == "indefinite_direction") return IndefiniteDirection{vec("point"), vec("direction")};
  if (kind == "flat_direction") return FlatDirection{vec("point"), vec("direction")};
  if (kind == "sublevel_triple") return SublevelTriple{vec("a"), vec("b"), rat("lambda")};
  if (kind == "pseudo_violation") return PseudoViolation{vec("x"), vec("y")};
  if (kind == "negative_value") return NegativeValue{vec("point")};
  if (kind == "line_non_monotone") return LineNonMonotone{vec("base"), vec("direction"), rat("ta"), rat("tb"), rat("tc")};
  if (kind == "stationary_level") return StationaryLevel{vec("xi"), rat("lo"), rat("hi")};
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

Json to_json(const Certificate& c) { return std::visit(CertificateWriter{}, c); }

Json to_json(const Verdict& v) {
  Json out = {{"answer", to_string(v.answer)}, {"reason", v.reason}};
  out["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return out;
}

}  // namespace polycvx
