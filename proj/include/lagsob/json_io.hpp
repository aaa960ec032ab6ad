#pragma once

#include "lagsob/awr.hpp"
#include "lagsob/diffop.hpp"
#include "lagsob/matrix.hpp"
#include "lagsob/operator.hpp"
#include "lagsob/poly.hpp"
#include "lagsob/sobolev.hpp"

#include <json.hpp>

namespace lagsob {

// Rationals are "num/den" strings (den omitted when 1); polynomials are
// ascending arrays of such strings; matrices are arrays of rows.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Poly& p);
Json to_json(const RationalMatrix& m);
Json to_json(const RationalVector& v);
Json to_json(const DiffOp& d);
Json to_json(const SobolevSpec& spec);
/// {"nj": [...], "mj": [...], "awr": n, "mtilde": [[...]]}
Json to_json(const WeightedRank& w);
Json to_json(const OrthogonalityReport& r);
Json to_json(const EigenReport& r);

/// Accepts a rational string or a JSON integer.
Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
DiffOp diffop_from_json(const Json& j);

/// {"alpha": int, "m": int, "M": [[...]]}; extra keys are ignored.
/// Throws ParseError on shape problems and validates the spec.
SobolevSpec spec_from_json(const Json& j);

}  // namespace lagsob
