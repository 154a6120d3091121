#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwl/mwlattice.hpp"
#include "mwl/planegeom.hpp"

namespace mwl {

using Json = nlohmann::ordered_json;

// Parsed curve-spec file (format version 1). All numeric literals are strings
// holding exact rationals; element literals map generator-subset keys like
// "r2*i" to rationals; pins are decimal strings.
struct CurveSpec {
    std::string name;
    TowerPtr tower;
    std::optional<PlaneCurve> cubic, line; // plane components, when given
    std::optional<PlaneCurve> quartic;     // given or derived as cubic*line
    std::optional<CurveModel> model;       // from "model" or via weierstrass_from_quartic
    ModelTransform transform;
    std::map<std::string, Point> points;
    std::vector<FieldElem> place_hints;
    std::vector<GammaOverride> overrides;
    Json arrangements; // named arrangement descriptors
    Json checks;       // golden checks for `reproduce`

    const CurveModel& curve() const { return *model; }
    const Point& point(const std::string& name) const; // UnknownName
};

CurveSpec parse_curve_spec(const std::string& text); // ParseError etc.

// literal parsers/serializers shared with the CLI surface
FieldElem parse_elem(const TowerPtr& t, const Json& j);
Poly parse_poly(const TowerPtr& t, char var, const Json& j);
RatFunc parse_ratfunc(const TowerPtr& t, char var, const Json& j);
Point parse_point(const TowerPtr& t, const Json& j);
BiPoly parse_bipoly(const TowerPtr& t, const Json& j);

Json elem_json(const FieldElem& e);
Json poly_json(const Poly& p);
Json ratfunc_json(const RatFunc& r);
Json point_json(const Point& p);
Json bipoly_json(const BiPoly& b);
Json place_json(const Place& p);

int errc_exit_code(Errc c); // 1 verification failure, 2 input error

} // namespace mwl
