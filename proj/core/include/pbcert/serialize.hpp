#pragma once

#include <json.hpp>

#include "pbcert/pbcheck.hpp"

namespace pbcert {

using Json = nlohmann::json;

// JSON forms (stable formats shared with the CLI):
//   Rational     "p/q" or "p"
//   ExtValue     {"omega": k, "finite": "p/q"} or "inf"
//   Poly2        polynomial grammar string
//   RatFunc2     {"num": poly, "den": poly}
//   BranchPoint  {"orient": "+"|"-", "series": [{"q": "3/2", "c": "1"}...],
//                 "side": "above"|"below"|"on"}
//   Chart        {"index", "case", "x_param", "y_param", "down_map", "shift"}
//   SeparatingIdeal {"kind", "generators", "threshold", "r"?}
//   PiecewiseFunction {"pieces": [{"where": [{"poly", "rel"}...], "value"}...]}

Json to_json(const Rational& q);
Json to_json(const ExtValue& v);
Json to_json(const Poly2& p);
Json to_json(const RatFunc2& f);
Json to_json(const BranchPoint& b);
Json to_json(const SignValue& sv);
Json to_json(const Chart& c);
Json to_json(const BlowupChain& chain);
Json to_json(const SeparatingIdeal& S);
Json to_json(const MonomialFactorization& mf);
Json to_json(const Specialization& sp);
Json to_json(const OracleResult& r);
Json to_json(const PiecewiseFunction& t);
Json to_json(const SupInfExpression& e);
Json to_json(const PairCheckResult& r);
Json to_json(const ChainTransferResult& r);
Json to_json(const WitnessSet& ws);

Rational rational_from_json(const Json& j);
ExtValue ext_value_from_json(const Json& j);
Poly2 poly_from_json(const Json& j);
BranchPoint branch_from_json(const Json& j);
PuiseuxPoly series_from_json(const Json& j);
PiecewiseFunction piecewise_from_json(const Json& j);
std::vector<BranchPoint> branch_list_from_json(const Json& j);
std::vector<std::vector<Poly2>> poly_matrix_from_json(const Json& j);
std::vector<std::pair<std::size_t, std::size_t>> adjacency_from_json(const Json& j);

/// Parse text as JSON; wraps nlohmann errors into ParseError.
Json parse_json_text(const std::string& text);

}  // namespace pbcert
