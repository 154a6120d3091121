#include "mwl/session.hpp"

#include <algorithm>

#include "builtin_specs.inc"

namespace mwl {

namespace {

HeightContext make_context(const CurveSpec& spec) {
    return HeightContext(spec.curve(), spec.place_hints, spec.overrides);
}

Json fiber_json(const FiberReport& f) {
    Json out = Json::object();
    if (f.place)
        out["place"] = place_json(*f.place);
    else
        out["unresolved_factor"] = poly_json(*f.unresolved);
    out["type"] = kodaira_str(f.type, f.n);
    out["m"] = f.m_v;
    out["ord_delta"] = f.ord_delta;
    out["ord_c4"] = f.ord_c4;
    out["ord_c6"] = f.ord_c6;
    if (f.sing_x) out["sing_x"] = elem_json(*f.sing_x);
    return out;
}

Json gamma_json(const GammaVector& g) {
    Json out = Json::array();
    for (int e : g.entries) out.push_back(e);
    return out;
}

const PlaneCurve& require_quartic(const CurveSpec& spec) {
    if (!spec.quartic) fail(Errc::BadRequest, "this operation needs the plane quartic in the spec");
    return *spec.quartic;
}

Poly parse_r_with_b(const CurveSpec& spec, const Json& r_poly, const Json& b_literal) {
    Poly r = parse_poly(spec.tower, 't', r_poly);
    if (!b_literal.is_null()) {
        FieldElem b = parse_elem(spec.tower, b_literal);
        r = r + Poly::constant(spec.tower, 't', b);
    }
    return r;
}

Json contact_proof_json(const ContactProof& proof) {
    Json out = Json::object();
    out["chart"] = proof.chart.identity
                       ? Json("identity")
                       : Json::array({rational_str(proof.chart.alpha), rational_str(proof.chart.beta)});
    out["resultant_degree"] = proof.resultant.degree();
    Json dec = Json::array();
    for (auto& [f, e] : proof.decomposition)
        dec.push_back(Json::object({{"factor", poly_json(f)}, {"exponent", e}}));
    out["squarefree_decomposition"] = dec;
    out["contact_parameters"] = proof.contact_count;
    Json sing = Json::array();
    for (auto& [t0, x0] : proof.checked_singular_points)
        sing.push_back(Json::array({elem_json(t0), elem_json(x0)}));
    out["singular_points_checked"] = sing;
    return out;
}

Json certificate_json(const CurveSpec& spec, const std::string& point_name, const ConicCertificate& cert) {
    Json out = Json::object();
    out["point"] = point_name;
    out["r"] = poly_json(cert.r);
    out["conic_plane"] = bipoly_json(cert.conic.poly);
    out["conic_weierstrass"] = bipoly_json(cert.conic_weier);
    out["bisection_sign"] = cert.bisection_sign;
    out["contact"] = contact_proof_json(cert.contact);
    (void)spec;
    return out;
}

PlaneCurve arrangement_conic(const CurveSpec& spec, const Json& jc) {
    if (jc.contains("explicit")) return PlaneCurve::make(parse_bipoly(spec.tower, jc["explicit"]));
    const Point& P = spec.point(jc.at("point").get<std::string>());
    Poly r = parse_r_with_b(spec, jc.at("r"), jc.value("b", Json()));
    ConicCertificate cert =
        contact_conic(spec.curve(), spec.transform, P, r, require_quartic(spec), spec.place_hints);
    return cert.conic;
}

PlaneCurve arrangement_line(const CurveSpec& spec, const Json& jl) {
    if (jl.is_string()) {
        SectionImage img = section_image(spec.transform, spec.point(jl.get<std::string>()));
        if (img.kind != SectionImageKind::Line)
            fail(Errc::BadRequest, "point '" + jl.get<std::string>() + "' does not map to a line");
        return img.curve;
    }
    return PlaneCurve::make(parse_bipoly(spec.tower, jl));
}

std::vector<PlaneCurve> arrangement_curves(const CurveSpec& spec, const std::string& kind,
                                           const Json& desc) {
    if (!spec.cubic || !spec.line)
        fail(Errc::BadRequest, "arrangement verification needs the cubic and line components");
    std::vector<PlaneCurve> curves{*spec.cubic, *spec.line};
    if (kind == "1a" || kind == "1b") {
        for (const auto& jl : desc.at("lines")) curves.push_back(arrangement_line(spec, jl));
    } else if (kind == "2") {
        curves.push_back(arrangement_line(spec, desc.at("line")));
        curves.push_back(arrangement_conic(spec, desc.at("conic")));
    } else if (kind == "3a" || kind == "3b") {
        for (const auto& jc : desc.at("conics")) curves.push_back(arrangement_conic(spec, jc));
    } else {
        fail(Errc::BadRequest, "unknown combinatorics kind '" + kind + "'");
    }
    return curves;
}

Json report_json(const CombinatoricsReport& rep) {
    Json out = Json::object();
    out["kind"] = rep.kind;
    Json clauses = Json::array();
    for (const auto& c : rep.clauses) {
        Json jc = Json::object();
        jc["clause"] = c.clause;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        clauses.push_back(jc);
    }
    out["clauses"] = clauses;
    out["pass"] = rep.all_pass();
    return out;
}

} // namespace

Point resolve_point(const CurveSpec& spec, const Json& expr) {
    if (expr.is_string()) return spec.point(expr.get<std::string>());
    if (expr.is_object() && expr.contains("combine")) {
        Point acc = Point::zero();
        for (const auto& term : expr["combine"]) {
            long n = term.at(0).get<long>();
            const Point& P = spec.point(term.at(1).get<std::string>());
            acc = ec_add(spec.curve(), acc, ec_mul(spec.curve(), n, P));
        }
        return acc;
    }
    fail(Errc::BadRequest, "point expression must be a name or {combine: [[n, name], ...]}");
}

Json cmd_fibers(const CurveSpec& spec) {
    HeightContext ctx = make_context(spec); // validates sum ord delta = 12
    Json out = Json::object();
    out["curve"] = spec.name;
    Json places = Json::array();
    int tally = 0;
    for (const auto& f : ctx.fibers()) {
        places.push_back(fiber_json(f));
        tally += (f.m_v - 1) * (f.unresolved ? f.unresolved->degree() : 1);
    }
    out["fibers"] = places;
    out["sum_ord_delta"] = ctx.sum_ord_delta();
    out["sum_m_minus_1"] = tally;
    out["chi"] = ctx.chi();
    return out;
}

Json cmd_mw(const CurveSpec& spec, const std::vector<std::string>& basis_names,
            const std::vector<std::string>& target_names) {
    HeightContext ctx = make_context(spec);
    std::vector<Point> basis;
    for (const auto& nm : basis_names) basis.push_back(spec.point(nm));
    GramMatrix gm = gram(ctx, basis);

    Json out = Json::object();
    out["basis"] = basis_names;
    Json jg = Json::array();
    for (const auto& row : gm.entries) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(rational_str(v));
        jg.push_back(jr);
    }
    out["gram"] = jg;

    Json heights = Json::object();
    Json gammas = Json::object();
    Json torsions = Json::object();
    auto describe = [&](const std::string& nm, const Point& P) {
        heights[nm] = rational_str(height(ctx, P));
        gammas[nm] = gamma_json(gamma_vector(ctx, P));
        auto ord = torsion_order(spec.curve(), P, 12);
        torsions[nm] = ord ? Json(*ord) : Json();
    };
    for (const auto& nm : basis_names) describe(nm, spec.point(nm));
    for (const auto& nm : target_names) describe(nm, spec.point(nm));
    out["heights"] = heights;
    out["gamma"] = gammas;
    out["torsion_order"] = torsions;

    Json decomps = Json::object();
    for (const auto& nm : target_names) {
        Decomposition d = decompose(ctx, basis, gm, spec.point(nm));
        Json jd = Json::object();
        Json coeffs = Json::array();
        for (const auto& c : d.coeffs) coeffs.push_back(c.get_str());
        jd["coeffs"] = coeffs;
        jd["torsion_part"] = point_json(d.torsion_part);
        decomps[nm] = jd;
    }
    out["decompositions"] = decomps;
    return out;
}

CommandResult cmd_conic(const CurveSpec& spec, const std::string& point_name, const Json& r_poly,
                        const Json& b_literal) {
    const Point& P = spec.point(point_name);
    Poly r = parse_r_with_b(spec, r_poly, b_literal);
    ConicCertificate cert =
        contact_conic(spec.curve(), spec.transform, P, r, require_quartic(spec), spec.place_hints);
    return {certificate_json(spec, point_name, cert), true};
}

CommandResult cmd_verify(const CurveSpec& spec, const std::string& kind) {
    if (!spec.arrangements.contains(kind))
        fail(Errc::BadRequest, "spec has no arrangement for kind '" + kind + "'");
    const Json& desc = spec.arrangements[kind];
    std::vector<PlaneCurve> curves = arrangement_curves(spec, kind, desc);
    CombinatoricsReport rep = verify_combinatorics(kind, curves, spec.place_hints);
    return {report_json(rep), rep.all_pass()};
}

// ------------------------------------------------------------- reproduce

namespace {

struct CheckOutcome {
    bool pass;
    std::string detail;
};

CheckOutcome run_check(const CurveSpec& spec, HeightContext& ctx, const Json& jc);

bool gamma_matches_pattern(const std::vector<GammaVector>& gs, const Json& patterns,
                           const Json& alt_last, std::vector<int>& perm_out) {
    if (gs.empty()) return false;
    std::size_t n = gs[0].entries.size();
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end());
    do {
        bool match = true;
        for (std::size_t k = 0; k < gs.size() && match; ++k) {
            auto matches_one = [&](const Json& pat) {
                for (std::size_t i = 0; i < n; ++i)
                    if (pat[i].get<int>() != gs[k].entries[perm[i]]) return false;
                return true;
            };
            bool ok = matches_one(patterns[k]);
            if (!ok && k + 1 == gs.size() && !alt_last.is_null()) ok = matches_one(alt_last);
            match = ok;
        }
        if (match) {
            perm_out = perm;
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

CheckOutcome run_check(const CurveSpec& spec, HeightContext& ctx, const Json& jc) {
    const std::string kind = jc.at("kind").get<std::string>();

    if (kind == "fiber_census") {
        std::vector<std::string> types;
        int tally = 0;
        for (const auto& f : ctx.fibers()) {
            types.push_back(kodaira_str(f.type, f.n));
            tally += (f.m_v - 1) * (f.unresolved ? f.unresolved->degree() : 1);
        }
        std::vector<std::string> want = jc.at("expect_types").get<std::vector<std::string>>();
        if (types != want) return {false, "fiber types differ"};
        if (ctx.sum_ord_delta() != jc.at("sum_ord_delta").get<int>()) return {false, "sum ord delta"};
        if (tally != jc.at("sum_m_minus_1").get<int>()) return {false, "sum (m_v - 1)"};
        return {true, ""};
    }
    if (kind == "gram") {
        std::vector<Point> basis;
        for (const auto& nm : jc.at("basis")) basis.push_back(spec.point(nm.get<std::string>()));
        GramMatrix gm = gram(ctx, basis);
        const Json& want = jc.at("expect");
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (gm.entries[i][j] != parse_rational(want[i][j].get<std::string>()))
                    return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                       rational_str(gm.entries[i][j])};
        return {true, ""};
    }
    if (kind == "height") {
        Rational h = height(ctx, resolve_point(spec, jc.at("point")));
        Rational want = parse_rational(jc.at("expect").get<std::string>());
        return {h == want, h == want ? "" : "height = " + rational_str(h)};
    }
    if (kind == "pair") {
        Rational v = height_pair(ctx, resolve_point(spec, jc.at("p")), resolve_point(spec, jc.at("q")));
        Rational want = parse_rational(jc.at("expect").get<std::string>());
        return {v == want, v == want ? "" : "pairing = " + rational_str(v)};
    }
    if (kind == "intersect_zero") {
        int v = intersect_zero(ctx, resolve_point(spec, jc.at("point")));
        return {v == jc.at("expect").get<int>(), "(P.O) = " + std::to_string(v)};
    }
    if (kind == "torsion") {
        auto ord = torsion_order(spec.curve(), resolve_point(spec, jc.at("point")), 12);
        if (jc.at("expect").is_null()) return {!ord.has_value(), ""};
        return {ord && *ord == jc.at("expect").get<int>(), ""};
    }
    if (kind == "gamma") {
        GammaVector g = gamma_vector(ctx, resolve_point(spec, jc.at("point")));
        std::vector<int> want = jc.at("expect").get<std::vector<int>>();
        return {g.entries == want, ""};
    }
    if (kind == "gamma_xor") {
        GammaVector g = gamma_vector(ctx, resolve_point(spec, jc.at("point")));
        std::vector<int> acc(g.entries.size(), 0);
        for (const auto& nm : jc.at("of")) {
            GammaVector h = gamma_vector(ctx, resolve_point(spec, nm));
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= h.entries[i];
        }
        return {acc == g.entries, ""};
    }
    if (kind == "gamma_patterns") {
        std::vector<GammaVector> gs;
        for (const auto& nm : jc.at("points")) gs.push_back(gamma_vector(ctx, resolve_point(spec, nm)));
        std::vector<int> perm;
        bool ok = gamma_matches_pattern(gs, jc.at("patterns"), jc.value("alt_last", Json()), perm);
        std::string detail;
        if (ok) {
            detail = "place permutation:";
            for (int p : perm) detail += " " + std::to_string(p);
        }
        return {ok, detail};
    }
    if (kind == "group") {
        Point got = resolve_point(spec, Json::object({{"combine", jc.at("combine")}}));
        const Point& want = spec.point(jc.at("expect").get<std::string>());
        if (got == want) return {true, "exact match"};
        if (!got.is_zero() && !want.is_zero() && got.x() == want.x() && got.y() == -want.y())
            return {false, "hyperelliptic sign discrepancy (y negated)"};
        return {false, "coordinates differ"};
    }
    if (kind == "decompose") {
        std::vector<Point> basis;
        for (const auto& nm : jc.at("basis")) basis.push_back(spec.point(nm.get<std::string>()));
        GramMatrix gm = gram(ctx, basis);
        Decomposition d = decompose(ctx, basis, gm, resolve_point(spec, jc.at("point")));
        std::vector<std::string> want = jc.at("expect_coeffs").get<std::vector<std::string>>();
        if (want.size() != d.coeffs.size()) return {false, "coefficient count"};
        for (std::size_t i = 0; i < want.size(); ++i)
            if (Integer(want[i]) != d.coeffs[i]) return {false, "coefficients differ"};
        const Json& jt = jc.at("expect_torsion");
        Point wt = jt.is_string() && jt.get<std::string>() == "O" ? Point::zero()
                                                                  : spec.point(jt.get<std::string>());
        return {d.torsion_part == wt, d.torsion_part == wt ? "" : "torsion part differs"};
    }
    if (kind == "conic_golden") {
        const Point& P = spec.point(jc.at("point").get<std::string>());
        const Json& terms = jc.at("expect_terms"); // [deg_b, deg_t, deg_x, elem]
        int want_contacts = jc.at("expect_contacts").get<int>();
        for (const auto& jb : jc.at("b_values")) {
            FieldElem b = parse_elem(spec.tower, jb);
            Poly r = parse_r_with_b(spec, jc.at("r"), jb);
            ConicCertificate cert =
                contact_conic(spec.curve(), spec.transform, P, r, require_quartic(spec), spec.place_hints);
            // specialize the expected polynomial at this b
            BiPoly want(spec.tower);
            for (const auto& jt : terms) {
                int db = jt.at(0).get<int>(), dt = jt.at(1).get<int>(), dx = jt.at(2).get<int>();
                FieldElem c = parse_elem(spec.tower, jt.at(3));
                FieldElem bp = FieldElem::one(spec.tower);
                for (int i = 0; i < db; ++i) bp = bp * b;
                want.set(dt, dx, want.coeff(dt, dx) + c * bp);
            }
            // compare up to a nonzero scalar
            const BiPoly& got = cert.conic.poly;
            if (want.terms().size() != got.terms().size()) return {false, "term counts differ"};
            auto it = got.terms().begin();
            FieldElem w0 = want.coeff(it->first.first, it->first.second);
            if (w0.is_zero()) return {false, "support differs"};
            FieldElem scale = w0 * it->second.inverse();
            for (auto& [k, v] : got.terms())
                if (want.coeff(k.first, k.second) != v * scale)
                    return {false, "conic differs at b = " + b.str()};
            if (cert.contact.contact_count != want_contacts)
                return {false, "contact parameters = " + std::to_string(cert.contact.contact_count)};
        }
        return {true, "matches up to scalar at all sampled b"};
    }
    if (kind == "section_conic") {
        SectionImage img = section_image(spec.transform, resolve_point(spec, jc.at("point")));
        ContactProof proof = verify_contact(img.curve, require_quartic(spec), spec.place_hints);
        int want = jc.at("expect_contacts").get<int>();
        return {proof.contact_count == want,
                "contact parameters = " + std::to_string(proof.contact_count)};
    }
    if (kind == "tangent_line") {
        SectionImage img = section_image(spec.transform, resolve_point(spec, jc.at("point")));
        if (img.kind != SectionImageKind::Line) return {false, "section image is not a line"};
        if (!spec.cubic) fail(Errc::BadRequest, "tangent_line check needs the cubic component");
        Tangency tg = tangency_classify(img.curve, *spec.cubic, spec.place_hints);
        if (tg.kind != TangencyKind::Tangent) return {false, "not a simple tangent line"};
        FieldElem pt = parse_elem(spec.tower, jc.at("through").at(0));
        FieldElem px = parse_elem(spec.tower, jc.at("through").at(1));
        if (!img.curve.poly.eval_t(pt).eval(px).is_zero()) return {false, "line misses the base point"};
        if (tg.contact_t && *tg.contact_t == pt) return {false, "tangent at the base point itself"};
        return {true, ""};
    }
    if (kind == "combinatorics") {
        std::string arr = jc.at("arrangement").get<std::string>();
        if (!spec.arrangements.contains(arr))
            fail(Errc::BadRequest, "no arrangement named '" + arr + "'");
        const Json& desc = spec.arrangements[arr];
        std::string ck = desc.at("kind").get<std::string>();
        CombinatoricsReport rep = verify_combinatorics(ck, arrangement_curves(spec, ck, desc), spec.place_hints);
        if (rep.all_pass()) return {true, ""};
        std::string failing;
        for (const auto& c : rep.clauses)
            if (!c.pass) failing += (failing.empty() ? "" : ", ") + c.clause;
        return {false, "failing clauses: " + failing};
    }
    if (kind == "shioda_tate") {
        std::vector<Point> basis;
        for (const auto& nm : jc.at("basis")) basis.push_back(spec.point(nm.get<std::string>()));
        GramMatrix gm = gram(ctx, basis);
        // positive definiteness via leading principal minors (exact)
        std::size_t n = basis.size();
        std::vector<std::vector<Rational>> a = gm.entries;
        for (std::size_t k = 0; k < n; ++k) { // fraction-free is unnecessary at this size
            if (sgn(a[k][k]) <= 0) return {false, "gram not positive definite"};
            for (std::size_t i = k + 1; i < n; ++i) {
                Rational f = a[i][k] / a[k][k];
                for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            }
        }
        int rank = static_cast<int>(n);
        int tally = 0;
        for (const auto& f : ctx.fibers()) tally += (f.m_v - 1) * (f.unresolved ? f.unresolved->degree() : 1);
        int want = jc.at("expect_rank").get<int>();
        if (rank != want) return {false, "rank"};
        if (rank + tally != 8) return {false, "rank + sum(m_v - 1) = " + std::to_string(rank + tally)};
        return {true, ""};
    }
    fail(Errc::BadRequest, "unknown check kind '" + kind + "'");
}

} // namespace

const char* builtin_spec_text(const std::string& id) {
    for (const auto& s : kBuiltinSpecs)
        if (id == s.id) return s.body;
    return nullptr;
}

std::vector<std::string> builtin_spec_ids() {
    std::vector<std::string> out;
    for (const auto& s : kBuiltinSpecs) out.push_back(s.id);
    return out;
}

CommandResult cmd_reproduce(const std::string& example_id) {
    const char* text = builtin_spec_text(example_id);
    if (!text) fail(Errc::BadRequest, "unknown example id '" + example_id + "'");
    CurveSpec spec = parse_curve_spec(text);
    HeightContext ctx = make_context(spec);

    Json out = Json::object();
    out["example"] = example_id;
    Json checks = Json::array();
    bool all = true;
    for (const auto& jc : spec.checks) {
        Json one = Json::object();
        one["check"] = jc.value("label", jc.at("kind").get<std::string>());
        CheckOutcome o{false, ""};
        try {
            o = run_check(spec, ctx, jc);
        } catch (const Error& e) {
            o = {false, e.what()};
        }
        one["pass"] = o.pass;
        if (!o.detail.empty()) one["detail"] = o.detail;
        checks.push_back(one);
        all = all && o.pass;
    }
    out["checks"] = checks;
    out["pass"] = all;
    return {out, all};
}

} // namespace mwl
