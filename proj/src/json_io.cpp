#include "lagsob/json_io.hpp"

#include "lagsob/errors.hpp"

#include <string>

namespace lagsob {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const DiffOp& d) {
  Json out = Json::array();
  for (const auto& f : d.coefficients()) out.push_back(to_json(f));
  return out;
}

Json to_json(const SobolevSpec& spec) {
  Json out;
  out["alpha"] = spec.alpha;
  out["m"] = spec.m;
  out["M"] = to_json(spec.M);
  return out;
}

Json to_json(const WeightedRank& w) {
  Json out;
  out["nj"] = w.nj;
  out["mj"] = w.mj;
  out["awr"] = w.value;
  out["mtilde"] = to_json(w.mtilde);
  return out;
}

Json to_json(const OrthogonalityReport& r) {
  Json out;
  out["upTo"] = r.up_to;
  out["passed"] = r.passed();
  out["diagonal"] = to_json(r.diagonal);
  Json issues = Json::array();
  for (const auto& i : r.issues) {
    Json e;
    e["n"] = i.n;
    e["l"] = i.l;
    e["kind"] = i.kind == OrthogonalityIssue::Kind::NonzeroBelowDegree ? "nonzero-below-degree" : "vanishing-at-degree";
    e["residual"] = to_string(i.residual);
    issues.push_back(std::move(e));
  }
  out["issues"] = std::move(issues);
  return out;
}

Json to_json(const EigenReport& r) {
  Json out;
  out["passed"] = r.passed();
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j;
    j["n"] = e.n;
    j["eigenvalue"] = to_string(e.eigenvalue);
    j["residual"] = to_json(e.residual);
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw ParseError("expected a rational string, got " + j.dump());
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a polynomial as an array of rationals, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  std::vector<Rational> data;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row is not an array");
    if (row.size() != cols) throw DimensionError("matrix rows have different lengths");
    for (const auto& e : row) data.push_back(rational_from_json(e));
  }
  return RationalMatrix(rows, cols, std::move(data));
}

DiffOp diffop_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an operator as an array of coefficient polynomials");
  std::vector<Poly> c;
  for (const auto& e : j) c.push_back(poly_from_json(e));
  return DiffOp(std::move(c));
}

SobolevSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  for (const char* key : {"alpha", "m", "M"})
    if (!j.contains(key)) throw ParseError(std::string("spec is missing \"") + key + "\"");
  if (!j["alpha"].is_number_integer()) throw ParseError("\"alpha\" must be an integer");
  if (!j["m"].is_number_integer() || j["m"].get<long long>() < 1) throw ParseError("\"m\" must be a positive integer");
  SobolevSpec spec;
  spec.alpha = j["alpha"].get<long>();
  spec.m = j["m"].get<std::size_t>();
  spec.M = matrix_from_json(j["M"]);
  spec.validate();
  return spec;
}

}  // namespace lagsob
