#include "mwl/specfile.hpp"

#include <algorithm>

namespace mwl {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(Errc::ParseError, what); }

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail(std::string("missing field '") + key + "'");
    return *it;
}

std::string subset_key(const TowerSpec& t, std::size_t mask) {
    if (mask == 0) return "1";
    std::string key;
    for (std::size_t k = 0; (std::size_t{1} << k) <= mask; ++k)
        if (mask >> k & 1) {
            if (!key.empty()) key += "*";
            key += t.gen(k).name;
        }
    return key;
}

std::size_t parse_subset_key(const TowerSpec& t, const std::string& key) {
    if (key == "1") return 0;
    std::size_t mask = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t star = key.find('*', pos);
        std::string name = key.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        int idx = t.index_of(name);
        if (idx < 0) parse_fail("unknown generator '" + name + "' in element literal");
        std::size_t bit = std::size_t{1} << idx;
        if (mask & bit) parse_fail("repeated generator '" + name + "' in element literal");
        mask |= bit;
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return mask;
}

Complex parse_pin(const Json& j) {
    if (!j.is_object()) parse_fail("pin must be {\"re\": ..., \"im\": ...}");
    return Complex(BigFloat::parse(need(j, "re").get<std::string>()),
                   BigFloat::parse(need(j, "im").get<std::string>()));
}

} // namespace

FieldElem parse_elem(const TowerPtr& t, const Json& j) {
    if (j.is_string()) return FieldElem(t, parse_rational(j.get<std::string>()));
    if (!j.is_object()) parse_fail("element literal must be a rational string or a subset map");
    std::vector<Rational> c(t->dim(), Rational(0));
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t mask = parse_subset_key(*t, it.key());
        if (!it.value().is_string()) parse_fail("element coefficients must be rational strings");
        c[mask] = parse_rational(it.value().get<std::string>());
    }
    return FieldElem(t, std::move(c));
}

Poly parse_poly(const TowerPtr& t, char var, const Json& j) {
    if (!j.is_array()) parse_fail("polynomial literal must be an array of element literals");
    std::vector<FieldElem> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(parse_elem(t, e));
    return Poly(t, var, std::move(c));
}

RatFunc parse_ratfunc(const TowerPtr& t, char var, const Json& j) {
    if (j.is_array()) return RatFunc::from_poly(parse_poly(t, var, j));
    if (!j.is_object()) parse_fail("rational function must be a poly array or {num, den}");
    return RatFunc(parse_poly(t, var, need(j, "num")), parse_poly(t, var, need(j, "den")));
}

Point parse_point(const TowerPtr& t, const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "O") return Point::zero();
        parse_fail("point literal must be \"O\" or {x, y}");
    }
    if (!j.is_object()) parse_fail("point literal must be \"O\" or {x, y}");
    return Point(parse_ratfunc(t, 't', need(j, "x")), parse_ratfunc(t, 't', need(j, "y")));
}

BiPoly parse_bipoly(const TowerPtr& t, const Json& j) {
    if (!j.is_array()) parse_fail("bivariate literal must be an array of [deg_t, deg_x, elem]");
    BiPoly out(t);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3) parse_fail("bivariate term must be [deg_t, deg_x, elem]");
        int dt = term[0].get<int>(), dx = term[1].get<int>();
        if (dt < 0 || dx < 0) parse_fail("negative exponent in bivariate term");
        FieldElem c = parse_elem(t, term[2]);
        if (!out.coeff(dt, dx).is_zero()) parse_fail("duplicate bivariate term");
        out.set(dt, dx, c);
    }
    return out;
}

Json elem_json(const FieldElem& e) {
    if (e.is_rational()) return Json(rational_str(e.rational_part()));
    Json out = Json::object();
    const TowerSpec& t = *e.tower();
    for (std::size_t mask = 0; mask < e.coeffs().size(); ++mask)
        if (sgn(e.coeffs()[mask]) != 0)
            out[subset_key(t, mask)] = rational_str(e.coeffs()[mask]);
    return out;
}

Json poly_json(const Poly& p) {
    Json out = Json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(elem_json(p.coeff(i)));
    return out;
}

Json ratfunc_json(const RatFunc& r) {
    if (r.is_poly()) return poly_json(r.num());
    Json out = Json::object();
    out["num"] = poly_json(r.num());
    out["den"] = poly_json(r.den());
    return out;
}

Json point_json(const Point& p) {
    if (p.is_zero()) return Json("O");
    Json out = Json::object();
    out["x"] = ratfunc_json(p.x());
    out["y"] = ratfunc_json(p.y());
    return out;
}

Json bipoly_json(const BiPoly& b) {
    Json out = Json::array();
    for (auto& [k, v] : b.terms()) out.push_back(Json::array({k.first, k.second, elem_json(v)}));
    return out;
}

Json place_json(const Place& p) {
    if (p.is_infinity()) return Json("inf");
    return elem_json(*p.t0);
}

const Point& CurveSpec::point(const std::string& nm) const {
    auto it = points.find(nm);
    if (it == points.end()) fail(Errc::UnknownName, "no point named '" + nm + "'");
    return it->second;
}

CurveSpec parse_curve_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) parse_fail("spec must be a JSON object");
    if (need(j, "version").get<int>() != 1) parse_fail("unsupported spec version");

    CurveSpec spec;
    spec.name = j.value("name", "");

    // tower
    const Json& jt = need(j, "tower");
    std::vector<Generator> gens;
    std::vector<std::string> names;
    for (const auto& jg : need(jt, "generators")) {
        Generator g;
        g.name = need(jg, "name").get<std::string>();
        g.pin = parse_pin(need(jg, "pin"));
        // radicand literal is parsed over the prefix tower
        std::vector<Generator> prefix(gens);
        TowerPtr pt = TowerSpec::build(std::move(prefix));
        const Json& jr = need(jg, "radicand");
        if (!jr.is_object() && !jr.is_string()) parse_fail("radicand must be an element literal");
        FieldElem rad = parse_elem(pt, jr);
        g.radicand = rad.coeffs();
        gens.push_back(std::move(g));
    }
    spec.tower = TowerSpec::build(std::move(gens));
    const TowerPtr& tw = spec.tower;

    // plane components / quartic / explicit model
    if (j.contains("components")) {
        const Json& jc = j["components"];
        spec.cubic = PlaneCurve::make(parse_bipoly(tw, need(jc, "cubic")));
        spec.line = PlaneCurve::make(parse_bipoly(tw, need(jc, "line")));
        if (spec.cubic->degree != 3) parse_fail("components.cubic must have total degree 3");
        if (spec.line->degree != 1) parse_fail("components.line must have total degree 1");
    }
    if (j.contains("quartic"))
        spec.quartic = PlaneCurve::make(parse_bipoly(tw, j["quartic"]));
    else if (spec.cubic)
        spec.quartic = PlaneCurve::make(spec.cubic->poly * spec.line->poly);

    if (j.contains("model")) {
        const Json& jm = j["model"];
        spec.model = CurveModel::make(parse_poly(tw, 't', need(jm, "b2")),
                                      parse_poly(tw, 't', need(jm, "b3")),
                                      parse_poly(tw, 't', need(jm, "b4")));
        spec.transform = ModelTransform{FieldElem::one(tw)};
    } else if (spec.quartic) {
        auto [model, tr] = weierstrass_from_quartic(*spec.quartic);
        spec.model = std::move(model);
        spec.transform = tr;
    } else {
        parse_fail("spec needs either a quartic (or components) or an explicit model");
    }

    // points (validated on the curve)
    if (j.contains("points"))
        for (auto it = j["points"].begin(); it != j["points"].end(); ++it) {
            Point p = parse_point(tw, it.value());
            if (!on_curve(*spec.model, p))
                parse_fail("point '" + it.key() + "' does not satisfy the curve equation");
            spec.points.emplace(it.key(), std::move(p));
        }

    if (j.contains("place_hints"))
        for (const auto& h : j["place_hints"]) spec.place_hints.push_back(parse_elem(tw, h));

    if (j.contains("gamma_overrides"))
        for (const auto& jo : j["gamma_overrides"]) {
            GammaOverride ov;
            ov.point = spec.point(need(jo, "point").get<std::string>());
            const Json& jp = need(jo, "place");
            ov.place = (jp.is_string() && jp.get<std::string>() == "inf")
                           ? Place::infinity()
                           : Place::finite(parse_elem(tw, jp));
            ov.index = need(jo, "index").get<int>();
            spec.overrides.push_back(std::move(ov));
        }

    spec.arrangements = j.value("arrangements", Json::object());
    spec.checks = j.value("checks", Json::array());
    return spec;
}

int errc_exit_code(Errc c) {
    switch (c) {
        case Errc::PinMismatch:
        case Errc::MalformedRadicand:
        case Errc::TowerMismatch:
        case Errc::NotInTower:
        case Errc::DegreeBound:
        case Errc::SingularModel:
        case Errc::NonMinimalModel:
        case Errc::NotRationalElliptic:
        case Errc::NotQuarticNormalForm:
        case Errc::ParseError:
        case Errc::UnknownName:
        case Errc::BadRequest:
            return 2;
        default:
            return 1;
    }
}

} // namespace mwl
