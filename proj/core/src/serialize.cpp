#include "pbcert/serialize.hpp"

#include "pbcert/errors.hpp"
#include "pbcert/parse.hpp"

namespace pbcert {

namespace {

std::string side_to_string(Side s) {
    switch (s) {
        case Side::above: return "above";
        case Side::below: return "below";
        case Side::on: return "on";
    }
    throw InternalError("unknown side");
}

Side side_from_string(const std::string& s) {
    if (s == "above") return Side::above;
    if (s == "below") return Side::below;
    if (s == "on") return Side::on;
    throw ParseError("unknown side '" + s + "'");
}

std::string case_to_string(StepCase c) {
    switch (c) {
        case StepCase::root: return "root";
        case StepCase::I1: return "I1";
        case StepCase::I2: return "I2";
        case StepCase::II1: return "II1";
        case StepCase::II2: return "II2";
    }
    throw InternalError("unknown step case");
}

std::string kind_to_string(IdealKind k) {
    switch (k) {
        case IdealKind::zero: return "zero";
        case IdealKind::height_one: return "height_one";
        case IdealKind::height_two: return "height_two";
        case IdealKind::unit: return "unit";
    }
    throw InternalError("unknown ideal kind");
}

std::string rel_to_string(Relation r) {
    switch (r) {
        case Relation::ge: return ">=";
        case Relation::le: return "<=";
        case Relation::eq: return "=";
    }
    throw InternalError("unknown relation");
}

Relation rel_from_string(const std::string& s) {
    if (s == ">=") return Relation::ge;
    if (s == "<=") return Relation::le;
    if (s == "=" || s == "==") return Relation::eq;
    throw ParseError("unknown relation '" + s + "'");
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Rational& q) { return rational_to_string(q); }

Json to_json(const ExtValue& v) {
    if (v.infinite) return "inf";
    return Json{{"omega", v.omega}, {"finite", rational_to_string(v.finite)}};
}

Json to_json(const Poly2& p) { return poly_to_string(p); }

Json to_json(const RatFunc2& f) {
    return Json{{"num", poly_to_string(f.num())}, {"den", poly_to_string(f.den())}};
}

Json to_json(const BranchPoint& b) {
    Json series = Json::array();
    for (const auto& t : b.series.terms())
        series.push_back(Json{{"q", rational_to_string(t.exponent)},
                              {"c", rational_to_string(t.coeff)}});
    return Json{{"orient", b.orientation >= 0 ? "+" : "-"},
                {"series", series},
                {"side", side_to_string(b.side)}};
}

Json to_json(const SignValue& sv) {
    return Json{{"sign", sv.sign}, {"value", to_json(sv.value)}};
}

Json to_json(const Chart& c) {
    return Json{{"index", c.index},
                {"case", case_to_string(c.step_case)},
                {"x_param", to_json(c.x_param)},
                {"y_param", to_json(c.y_param)},
                {"down_map", Json::array({poly_to_string(c.down_x), poly_to_string(c.down_y)})},
                {"shift", rational_to_string(c.shift)}};
}

Json to_json(const BlowupChain& chain) {
    Json charts = Json::array();
    for (const Chart& c : chain.charts) charts.push_back(to_json(c));
    Json nonchangers = Json::array();
    // Only a finished chain carries sign data for its final chart.
    if (chain.stop_reason == StopReason::separating_ideal_is_maximal) {
        if (chain.x_nonchanger()) nonchangers.push_back("x");
        if (chain.y_nonchanger()) nonchangers.push_back("y");
    }
    return Json{{"charts", charts},
                {"r", chain.r()},
                {"stop_reason", chain.stop_reason == StopReason::separating_ideal_is_maximal
                                    ? "separating_ideal_is_maximal"
                                    : "iteration_limit"},
                {"nonchangers", nonchangers},
                {"witness", poly_to_string(chain.witness_chart)},
                {"witness_root", poly_to_string(chain.witness_root)}};
}

Json to_json(const SeparatingIdeal& S) {
    Json gens = Json::array();
    for (const Poly2& g : S.generators) gens.push_back(poly_to_string(g));
    Json j{{"kind", kind_to_string(S.kind)},
           {"generators", gens},
           {"threshold", to_json(S.threshold)}};
    if (S.chain) j["r"] = S.chain->r();
    return j;
}

Json to_json(const MonomialFactorization& mf) {
    return Json{{"e", mf.e}, {"f", mf.f}, {"w", poly_to_string(mf.w)}};
}

Json to_json(const Specialization& sp) {
    switch (sp.kind) {
        case Specialization::Kind::origin: return Json{{"kind", "origin"}};
        case Specialization::Kind::curve_point:
            return Json{{"kind", "curve_point"},
                        {"curve", poly_to_string(*sp.curve)},
                        {"gamma", to_json(*sp.gamma)}};
        case Specialization::Kind::point:
            return Json{{"kind", "point"}, {"gamma", to_json(*sp.gamma)}};
    }
    throw InternalError("unknown specialization kind");
}

Json to_json(const OracleResult& r) {
    return Json{{"min_value", to_json(r.min_value)}, {"witness", poly_to_string(r.witness)}};
}

Json to_json(const PiecewiseFunction& t) {
    Json pieces = Json::array();
    for (const Piece& p : t.pieces) {
        Json where = Json::array();
        for (const SignCondition& c : p.where)
            where.push_back(Json{{"poly", poly_to_string(c.poly)}, {"rel", rel_to_string(c.rel)}});
        pieces.push_back(Json{{"where", where}, {"value", poly_to_string(p.value)}});
    }
    return Json{{"pieces", pieces}};
}

Json to_json(const SupInfExpression& e) {
    Json sup = Json::array();
    for (const auto& row : e.rows) {
        Json inf = Json::array();
        for (const Poly2& p : row) inf.push_back(poly_to_string(p));
        sup.push_back(Json{{"inf", inf}});
    }
    return Json{{"sup", sup}};
}

Json to_json(const PairCheckResult& r) {
    return Json{{"verdict", r.pass ? "pass" : "fail"},
                {"difference", poly_to_string(r.difference)},
                {"value", to_json(r.value)},
                {"threshold", to_json(r.threshold)}};
}

Json to_json(const ChainTransferResult& r) {
    if (!r.ok) {
        Json reachable = Json::array();
        for (std::size_t i : r.reachable) reachable.push_back(i);
        return Json{{"verdict", "fail"}, {"reachable", reachable}};
    }
    const ChainCertificate& cert = *r.certificate;
    Json chain = Json::array();
    for (std::size_t i : cert.chain) chain.push_back(i);
    Json diffs = Json::array();
    for (const Poly2& d : cert.differences)
        diffs.push_back(Json{{"poly", poly_to_string(d)}, {"member", true}});
    return Json{{"verdict", "pass"},
                {"t_alpha_index", cert.t_alpha_index},
                {"t_beta_index", cert.t_beta_index},
                {"chain", chain},
                {"differences", diffs}};
}

Json to_json(const WitnessSet& ws) {
    if (ws.kind == WitnessSet::Kind::single_point) {
        return Json{{"kind", "single_point"},
                    {"gamma", to_json(*ws.gamma)},
                    {"all_nonzero", ws.all_nonzero}};
    }
    if (ws.kind == WitnessSet::Kind::chart_ball) {
        Json factors = Json::array();
        for (const auto& md : ws.factors)
            factors.push_back(Json{{"g", poly_to_string(md.g)},
                                   {"e", md.e},
                                   {"f", md.f},
                                   {"w", poly_to_string(md.w)}});
        Json samples = Json::array();
        for (const auto& s : ws.samples) {
            Json gv = Json::array();
            for (const Rational& v : s.g_values) gv.push_back(rational_to_string(v));
            samples.push_back(Json{{"chart", Json::array({rational_to_string(s.cx),
                                                          rational_to_string(s.cy)})},
                                   {"plane", Json::array({rational_to_string(s.px),
                                                          rational_to_string(s.py)})},
                                   {"g_values", gv}});
        }
        Json positive = Json::array();
        for (const std::string& p : ws.positive) positive.push_back(p);
        return Json{{"kind", "chart_ball"},
                    {"r", ws.r},
                    {"epsilon", rational_to_string(ws.epsilon)},
                    {"positive", positive},
                    {"map", Json::array({poly_to_string(ws.map_x), poly_to_string(ws.map_y)})},
                    {"factors", factors},
                    {"samples", samples},
                    {"all_nonzero", ws.all_nonzero}};
    }
    Json samples = Json::array();
    for (const auto& s : ws.curve_samples)
        samples.push_back(Json{{"t", rational_to_string(s.t)},
                               {"point", Json::array({rational_to_string(s.px),
                                                      rational_to_string(s.py)})},
                               {"on", rational_to_string(s.on_value)},
                               {"above", rational_to_string(s.above_value)},
                               {"below", rational_to_string(s.below_value)}});
    return Json{{"kind", "curve_component"},
                {"curve", poly_to_string(*ws.curve)},
                {"gamma", to_json(*ws.gamma)},
                {"product", poly_to_string(*ws.product)},
                {"samples", samples},
                {"all_nonzero", ws.all_nonzero}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational (string \"p/q\" or integer)");
}

ExtValue ext_value_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ExtValue::infinity();
    if (!j.is_object()) throw ParseError("expected an extended value");
    ExtValue v;
    v.omega = require(j, "omega").get<long long>();
    v.finite = rational_from_json(require(j, "finite"));
    return v;
}

Poly2 poly_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a polynomial string");
    return parse_polynomial(j.get<std::string>());
}

PuiseuxPoly series_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a series array");
    std::vector<PuiseuxTerm> terms;
    for (const Json& t : j)
        terms.push_back(PuiseuxTerm{rational_from_json(require(t, "q")),
                                    rational_from_json(require(t, "c"))});
    try {
        return PuiseuxPoly(std::move(terms));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

BranchPoint branch_from_json(const Json& j) {
    BranchPoint b;
    const std::string orient = require(j, "orient").get<std::string>();
    if (orient == "+")
        b.orientation = +1;
    else if (orient == "-")
        b.orientation = -1;
    else
        throw ParseError("orient must be '+' or '-'");
    b.series = series_from_json(require(j, "series"));
    b.side = side_from_string(require(j, "side").get<std::string>());
    return b;
}

PiecewiseFunction piecewise_from_json(const Json& j) {
    PiecewiseFunction t;
    for (const Json& pj : require(j, "pieces")) {
        Piece p;
        for (const Json& cj : require(pj, "where"))
            p.where.push_back(SignCondition{poly_from_json(require(cj, "poly")),
                                            rel_from_string(require(cj, "rel").get<std::string>())});
        p.value = poly_from_json(require(pj, "value"));
        t.pieces.push_back(std::move(p));
    }
    if (t.pieces.empty()) throw ParseError("piecewise function needs at least one piece");
    return t;
}

std::vector<BranchPoint> branch_list_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of branch points");
    std::vector<BranchPoint> out;
    for (const Json& b : j) out.push_back(branch_from_json(b));
    return out;
}

std::vector<std::vector<Poly2>> poly_matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a matrix of polynomials");
    std::vector<std::vector<Poly2>> out;
    for (const Json& row : j) {
        if (!row.is_array()) throw ParseError("expected a matrix of polynomials");
        std::vector<Poly2> r;
        for (const Json& p : row) r.push_back(poly_from_json(p));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> adjacency_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an adjacency list of index pairs");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2) throw ParseError("adjacency entries are index pairs");
        out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return out;
}

}  // namespace pbcert
