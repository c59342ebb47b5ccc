#include "ulambda/json_io.hpp"

#include <cmath>

namespace ulambda {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const PowerSeries& s) {
  Json coeffs = Json::array();
  for (const Complex& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}};
}

PowerSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("expected {\"coeffs\": [[re, im], ...]}");
  std::vector<Complex> c;
  c.reserve(j["coeffs"].size());
  for (const Json& e : j["coeffs"]) c.push_back(complex_from_json(e));
  return PowerSeries(std::move(c));
}

Json to_json(const DiscreteCircleMeasure& mu) {
  Json arr = Json::array();
  for (const CircleAtom& a : mu.atoms())
    arr.push_back(Json{{"x", to_json(a.x)}, {"w", a.w}});
  return arr;
}

DiscreteCircleMeasure measure_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of atoms");
  std::vector<CircleAtom> atoms;
  atoms.reserve(j.size());
  for (const Json& e : j) {
    if (!e.is_object() || !e.contains("x") || !e.contains("w"))
      throw std::invalid_argument("atom must be {\"x\": [re, im], \"w\": r}");
    atoms.push_back({complex_from_json(e["x"]), e["w"].get<double>()});
  }
  return DiscreteCircleMeasure(std::move(atoms));
}

Json to_json(const FunctionSpec& spec) {
  Json j{{"kind", spec.kind_name()}};
  switch (spec.kind()) {
    case SpecKind::koebe:
      break;
    case SpecKind::k_lambda:
    case SpecKind::rational_member:
    case SpecKind::test_g:
      j["lambda"] = spec.lambda();
      break;
    case SpecKind::rotation:
      j["x"] = to_json(spec.rotation_factor());
      j["base"] = to_json(spec.rotation_base());
      break;
    case SpecKind::schwarz_member:
      j["lambda"] = spec.lambda();
      j["a2"] = to_json(spec.a2());
      j["psi"] = to_json(spec.psi());
      break;
    case SpecKind::hull_measure:
      j["measure"] = to_json(spec.measure());
      break;
    case SpecKind::series:
      j["series"] = to_json(spec.raw_series());
      break;
  }
  return j;
}

FunctionSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("spec must be an object with a \"kind\" string");
  const std::string kind = j["kind"].get<std::string>();
  auto lambda_of = [&]() {
    if (!j.contains("lambda")) throw std::invalid_argument("missing \"lambda\"");
    return j["lambda"].get<double>();
  };
  if (kind == "koebe") return FunctionSpec::koebe();
  if (kind == "k_lambda") return FunctionSpec::k_lambda(lambda_of());
  if (kind == "rational_member") return FunctionSpec::rational_member(lambda_of());
  if (kind == "test_g") return FunctionSpec::test_g(lambda_of());
  if (kind == "rotation") {
    if (!j.contains("x") || !j.contains("base"))
      throw std::invalid_argument("rotation needs \"x\" and \"base\"");
    return rotate(spec_from_json(j["base"]), complex_from_json(j["x"]));
  }
  if (kind == "schwarz_member") {
    if (!j.contains("a2") || !j.contains("psi"))
      throw std::invalid_argument("schwarz_member needs \"a2\" and \"psi\"");
    return member_from_schwarz(lambda_of(), complex_from_json(j["a2"]),
                               series_from_json(j["psi"]));
  }
  if (kind == "hull_measure") {
    if (!j.contains("measure")) throw std::invalid_argument("missing \"measure\"");
    return hull_from_measure(measure_from_json(j["measure"]));
  }
  if (kind == "series") {
    if (!j.contains("series")) throw std::invalid_argument("missing \"series\"");
    return FunctionSpec::series(series_from_json(j["series"]));
  }
  throw std::invalid_argument("unknown spec kind: " + kind);
}

Json to_json(const MeromorphicSeries& g) {
  Json tail = Json::array();
  for (const Complex& c : g.tail()) tail.push_back(to_json(c));
  return Json{{"b", tail}};
}

MeromorphicSeries meromorphic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("b") || !j["b"].is_array())
    throw std::invalid_argument("expected {\"b\": [[re, im], ...]}");
  std::vector<Complex> b;
  b.reserve(j["b"].size());
  for (const Json& e : j["b"]) b.push_back(complex_from_json(e));
  return MeromorphicSeries(std::move(b));
}

Json to_json(const DeviationReport& rep) {
  Json j;
  if (std::isinf(rep.sup))
    j["sup"] = "inf";  // zero of f found: deviation unbounded on the grid
  else
    j["sup"] = rep.sup;
  j["witness"] = to_json(rep.witness);
  j["verdict"] = verdict_name(rep.verdict);
  j["grid"] = Json{{"radii", rep.grid_radii}, {"angles", rep.grid_angles}, {"rmax", rep.grid_rmax}};
  return j;
}

Json to_json(const NormEstimate& est) {
  Json j{{"value", est.value}, {"method", norm_method_name(est.method)}};
  if (est.method == NormMethod::profile_max)
    j["argmax"] = est.argmax.real();
  else
    j["argmax"] = to_json(est.argmax);
  return j;
}

Json to_json(const MeanReport& rep) {
  return Json{{"value", rep.value}, {"n", rep.n}, {"p", rep.p}, {"r", rep.r},
              {"nodes", rep.nodes}};
}

}  // namespace ulambda
