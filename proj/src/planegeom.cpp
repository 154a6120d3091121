#include "mwl/planegeom.hpp"

#include <algorithm>

namespace mwl {

namespace {

FieldElem eval_point(const BiPoly& f, const FieldElem& t0, const FieldElem& x0) {
    return f.eval_t(t0).eval(x0);
}

// extended resultant: tolerates one argument of x-degree 0 (res = c(t)^deg_x(other))
Poly resultant_x_ext(const BiPoly& f, const BiPoly& g) {
    int m = f.deg_x(), n = g.deg_x();
    if (m > 0 && n > 0) return resultant_x(f, g);
    if (m <= 0 && n <= 0) fail(Errc::BadRequest, "resultant of two x-free polynomials");
    const BiPoly& cp = (m <= 0) ? f : g;
    int e = (m <= 0) ? n : m;
    Poly c = cp.coeff_of_x(0);
    Poly out = Poly::from_rationals(f.tower(), 't', {Rational(1)});
    for (int i = 0; i < e; ++i) out = out * c;
    return out;
}

} // namespace

PlaneCurve PlaneCurve::make(BiPoly p) {
    PlaneCurve c;
    c.degree = p.total_degree();
    c.poly = std::move(p);
    return c;
}

BiPoly ModelTransform::weier_to_plane(const BiPoly& f) const {
    BiPoly out(f.tower());
    for (auto& [k, v] : f.terms()) {
        FieldElem scale = FieldElem::one(f.tower());
        for (int i = 0; i < k.second; ++i) scale = scale * c;
        out.set(k.first, k.second, v * scale);
    }
    return out;
}

std::pair<CurveModel, ModelTransform> weierstrass_from_quartic(const PlaneCurve& q) {
    if (q.degree != 4) fail(Errc::NotQuarticNormalForm, "total degree is not 4");
    if (q.poly.deg_x() != 3)
        fail(Errc::NotQuarticNormalForm, "deg_x != 3 (the distinguished point is not at [0,1,0])");
    Poly lead = q.poly.coeff_of_x(3);
    if (lead.degree() != 0)
        fail(Errc::NotQuarticNormalForm, "leading x-coefficient is not constant");
    FieldElem c = lead.coeff(0);
    Poly a2 = q.poly.coeff_of_x(2);
    Poly a1 = q.poly.coeff_of_x(1);
    Poly a0 = q.poly.coeff_of_x(0);
    Poly cc = Poly::constant(q.poly.tower(), 't', c);
    CurveModel model = CurveModel::make(a2, cc * a1, cc * cc * a0);
    return {std::move(model), ModelTransform{c}};
}

SectionImage section_image(const ModelTransform& tr, const Point& P) {
    if (P.is_zero()) fail(Errc::NonIntegralSection, "the zero section has no affine plane image");
    if (!P.x().is_poly() || P.x().num().degree() > 2)
        fail(Errc::NonIntegralSection, "x-coordinate is not a polynomial of degree <= 2");
    const TowerPtr& tw = P.x().num().tower();
    BiPoly f(tw);
    f.set(0, 1, tr.c);
    f = f - BiPoly::from_poly_t(P.x().num());
    SectionImage img;
    img.curve = PlaneCurve::make(std::move(f));
    img.kind = P.x().num().degree() <= 1 ? SectionImageKind::Line : SectionImageKind::ConicCandidate;
    return img;
}

// ------------------------------------------------------------- charts

namespace {

// G(t', x') = F_h(t', 1 - alpha t' - beta x', x') for F of the given total degree
BiPoly apply_chart(const BiPoly& f, int degree, const Chart& ch) {
    if (ch.identity) return f;
    const TowerPtr& tw = f.tower();
    BiPoly lin(tw); // 1 - alpha t - beta x
    lin.set(0, 0, FieldElem::one(tw));
    lin.set(1, 0, FieldElem(tw, -ch.alpha));
    lin.set(0, 1, FieldElem(tw, -ch.beta));
    std::vector<BiPoly> powx; // powers of lin
    powx.reserve(degree + 1);
    BiPoly one(tw);
    one.set(0, 0, FieldElem::one(tw));
    powx.push_back(one);
    for (int i = 1; i <= degree; ++i) powx.push_back(powx.back() * lin);
    BiPoly out(tw);
    for (auto& [k, v] : f.terms()) {
        int dz = degree - k.first - k.second;
        // T^dt X^dx Z^dz -> t'^dt lin^dx x'^dz
        BiPoly term = powx[k.second].scaled(v);
        BiPoly shifted(tw);
        for (auto& [kk, vv] : term.terms()) shifted.set(kk.first + k.first, kk.second + dz, vv);
        out = out + shifted;
    }
    return out;
}

struct SingularLocus {
    std::vector<std::pair<FieldElem, FieldElem>> points; // genuine affine singular points
    std::vector<Poly> unresolved;                        // t-factors that could not be localized
};

SingularLocus singular_points(const BiPoly& q, const std::vector<FieldElem>& hints) {
    SingularLocus out;
    BiPoly qx = q.derivative_x();
    BiPoly qt = q.derivative_t();
    if (qx.is_zero() && qt.is_zero()) return out;
    Poly r1 = qx.is_zero() ? Poly() : resultant_x_ext(q, qx);
    Poly r2 = qt.is_zero() ? Poly() : resultant_x_ext(q, qt);
    Poly cand;
    if (r1.is_zero() || r2.is_zero()) // one derivative vanished identically: use the other locus
        cand = r1.is_zero() ? r2 : r1;
    else
        cand = poly_gcd(r1, r2);
    if (cand.is_zero() || cand.degree() == 0) return out;
    RootsResult roots = roots_in_tower(cand, hints);
    const TowerPtr& tw = q.tower();
    for (auto& [t0, mult] : roots.roots) {
        Poly a = q.eval_t(t0);
        Poly b = qx.eval_t(t0);
        Poly g = a.is_zero() ? b : (b.is_zero() ? a : poly_gcd(a, b));
        if (g.degree() < 1) continue;
        RootsResult xs = roots_in_tower(g, hints);
        for (auto& [x0, xm] : xs.roots) {
            if (!eval_point(qt, t0, x0).is_zero()) continue;
            if (!eval_point(q, t0, x0).is_zero()) continue;
            out.points.emplace_back(t0, x0);
        }
        if (!xs.unresolved.empty()) // potential singular x-locus over t0 we cannot pin down
            out.unresolved.push_back(Poly(tw, 't', {-t0, FieldElem::one(tw)}));
    }
    for (auto& [f, e] : roots.unresolved) out.unresolved.push_back(f);
    return out;
}

} // namespace

ContactProof verify_contact(const PlaneCurve& conic, const PlaneCurve& quartic,
                            const std::vector<FieldElem>& hints) {
    if (conic.degree < 1 || quartic.degree != 4)
        fail(Errc::BadRequest, "contact test expects a curve of positive degree against a quartic");
    const int expect = conic.degree * quartic.degree;

    static const std::pair<int, int> kSweep[] = {{0, 1},  {0, -1}, {1, 1},  {-1, 1}, {2, 1},
                                                 {0, 2},  {1, -1}, {3, 1},  {0, 3},  {-2, 1},
                                                 {2, 3},  {0, 5},  {5, 2},  {-3, 2}, {1, 4}};
    std::vector<Chart> charts;
    charts.push_back(Chart{});
    for (auto [a, b] : kSweep) charts.push_back(Chart{Rational(a), Rational(b), false});

    for (const Chart& ch : charts) {
        BiPoly C2 = apply_chart(conic.poly, conic.degree, ch);
        BiPoly Q2 = apply_chart(quartic.poly, quartic.degree, ch);
        if (C2.deg_x() < 1 || Q2.deg_x() < 1) continue;
        if (C2.coeff_of_x(C2.deg_x()).degree() != 0) continue;
        if (Q2.coeff_of_x(Q2.deg_x()).degree() != 0) continue;
        Poly R = resultant_x(C2, Q2);
        if (R.is_zero())
            fail(Errc::OddMultiplicity, "the curve shares a component with the quartic");
        if (R.degree() != expect) continue; // intersections escaped to infinity in this chart

        ContactProof proof;
        proof.chart = ch;
        proof.resultant = R;
        proof.decomposition = squarefree_decomp(R);
        for (auto& [f, e] : proof.decomposition) {
            if (e % 2 != 0)
                fail(Errc::OddMultiplicity,
                     "odd intersection multiplicity (exponent " + std::to_string(e) +
                         " on a degree-" + std::to_string(f.degree()) + " factor)");
            proof.contact_count += f.degree();
        }

        // contact points must avoid the singular locus of the quartic
        SingularLocus sing = singular_points(Q2, hints);
        for (auto& [t0, x0] : sing.points) {
            if (!eval_point(C2, t0, x0).is_zero()) continue;
            fail(Errc::SingularContact,
                 "contact at a singular point of the quartic (t = " + t0.str() + ", x = " + x0.str() + ")");
        }
        for (const Poly& f : sing.unresolved) {
            if (f.degree() < 1) continue;
            if (poly_gcd(f, R).degree() > 0)
                fail(Errc::SingularContact,
                     "cannot separate the contact locus from an unresolved singular-locus factor");
        }
        proof.checked_singular_points = sing.points;
        return proof;
    }
    fail(Errc::ChartFailure, "no admissible chart keeps every intersection finite");
}

ConicCertificate contact_conic(const CurveModel& C, const ModelTransform& tr, const Point& P,
                               const Poly& r, const PlaneCurve& quartic,
                               const std::vector<FieldElem>& hints) {
    if (P.is_zero() || !P.x().is_poly() || !P.y().is_poly())
        fail(Errc::NonIntegralSection, "contact conic construction needs polynomial coordinates");
    const TowerPtr& tw = C.tower();
    const Poly& xP = P.x().num();
    const Poly& yP = P.y().num();

    // l(t, x) = r(t) x + (yP - r xP);   g := (f_T - l^2) / (x - xP)
    BiPoly l(tw);
    for (int i = 0; i <= r.degree(); ++i) l.set(i, 1, r.coeff(i));
    l = l + BiPoly::from_poly_t(yP - r * xP);
    BiPoly h = C.trisection() - l * l;
    BiPoly g = h.divide_by_x_minus(xP); // throws DegenerateConic when not exact (P off curve)

    if (g.deg_x() != 2 || g.total_degree() != 2)
        fail(Errc::DegenerateConic,
             "g has total degree " + std::to_string(g.total_degree()) + " (expected 2); vary the free parameter b");

    // irreducibility: determinant of the homogeneous symmetric matrix
    FieldElem A = g.coeff(2, 0), B = g.coeff(0, 2), Cc = g.coeff(0, 0);
    FieldElem D = g.coeff(1, 1), E = g.coeff(1, 0), F = g.coeff(0, 1);
    FieldElem half(tw, Rational(1, 2));
    D = D * half;
    E = E * half;
    F = F * half;
    FieldElem det = A * (B * Cc - F * F) - D * (D * Cc - F * E) + E * (D * F - B * E);
    if (det.is_zero()) fail(Errc::DegenerateConic, "conic is reducible; vary the free parameter b");

    ConicCertificate cert;
    cert.conic_weier = g;
    cert.conic = PlaneCurve::make(tr.weier_to_plane(g));
    cert.point = P;
    cert.r = r;
    cert.bisection_sign = "s(C+) = -s_P";
    cert.contact = verify_contact(cert.conic, quartic, hints);
    return cert;
}

// ------------------------------------------------------------- tangency

Tangency tangency_classify(const PlaneCurve& line, const PlaneCurve& cubic,
                           const std::vector<FieldElem>& hints) {
    if (line.degree != 1) fail(Errc::BadRequest, "first argument must be a line");
    if (cubic.degree != 3) fail(Errc::BadRequest, "second argument must be a cubic");
    const TowerPtr& tw = line.poly.tower();
    FieldElem beta = line.poly.coeff(0, 1);
    Poly sub;
    if (!beta.is_zero()) {
        // x = -(alpha t + gamma)/beta
        FieldElem ib = beta.inverse();
        Poly xp(tw, 't', {-line.poly.coeff(0, 0) * ib, -line.poly.coeff(1, 0) * ib});
        sub = cubic.poly.subst_x(xp);
    } else {
        FieldElem alpha = line.poly.coeff(1, 0);
        FieldElem t0 = -line.poly.coeff(0, 0) * alpha.inverse();
        sub = cubic.poly.eval_t(t0);
    }
    if (sub.is_zero()) fail(Errc::ComponentLine, "the line is a component of the cubic");
    Tangency out;
    out.pattern = squarefree_decomp(sub);
    int maxe = 0;
    for (auto& [f, e] : out.pattern) maxe = std::max(maxe, e);
    out.kind = maxe >= 3   ? TangencyKind::Inflectional
               : maxe == 2 ? TangencyKind::Tangent
                           : TangencyKind::Transversal;
    if (maxe >= 2) {
        for (auto& [f, e] : out.pattern)
            if (e == maxe && f.degree() == 1) out.contact_t = -f.coeff(0);
    }
    (void)hints;
    return out;
}

CubicAnalysis cubic_analysis(const PlaneCurve& cubic, const std::vector<FieldElem>& hints) {
    if (cubic.degree != 3) fail(Errc::BadRequest, "cubic_analysis expects a cubic");
    const BiPoly& f = cubic.poly;
    if (f.deg_x() < 1) fail(Errc::NotIrreducible, "cubic splits into vertical lines");
    SingularLocus sing = singular_points(f, hints);

    // singular points on the line at infinity: common projective zeros of the
    // homogeneous partials restricted to Z = 0
    const TowerPtr& tw = f.tower();
    auto top_form = [&](const BiPoly& g, int deg) {
        std::vector<FieldElem> c(deg + 1, FieldElem::zero(tw)); // coefficient of T^i X^(deg-i)
        for (auto& [k, v] : g.terms())
            if (k.first + k.second == deg) c[k.first] = v;
        return Poly(tw, 'u', std::move(c)); // u = T/X
    };
    BiPoly FT = f.derivative_t(), FX = f.derivative_x();
    // on Z = 0: F_T and F_X restrict to the partials of the top cubic form,
    // and F_Z restricts to the degree-2 part of the affine equation
    Poly t2t = top_form(FT, 2), t2x = top_form(FX, 2), fz = top_form(f, 2);
    int inf_sing = 0;
    {
        Poly g = poly_gcd(poly_gcd(t2t, t2x), fz);
        if (g.degree() > 0) inf_sing += g.degree();
        // the point [1,0,0] (u -> infinity): every form must drop degree there
        auto drops = [](const Poly& p, int d) { return p.is_zero() || p.degree() < d; };
        if (drops(t2t, 2) && drops(t2x, 2) && drops(fz, 2)) inf_sing += 1;
    }

    CubicAnalysis out;
    std::size_t nsing = sing.points.size() + inf_sing;
    if (nsing >= 2) fail(Errc::NotIrreducible, "more than one singular point");
    if (!sing.unresolved.empty()) {
        out.kind = CubicKind::Other; // cannot certify; never happens for the data in scope
        return out;
    }
    if (nsing == 0) {
        out.kind = CubicKind::Smooth;
        return out;
    }
    if (sing.points.empty()) { // unique singular point at infinity
        out.kind = CubicKind::Other;
        return out;
    }
    auto [t0, x0] = sing.points.front();
    BiPoly ftt = FT.derivative_t(), ftx = FT.derivative_x(), fxx = FX.derivative_x();
    FieldElem det = eval_point(ftt, t0, x0) * eval_point(fxx, t0, x0) -
                    eval_point(ftx, t0, x0) * eval_point(ftx, t0, x0);
    if (det.is_zero()) {
        out.kind = CubicKind::Other;
        return out;
    }
    out.kind = CubicKind::Nodal;
    out.node = std::make_pair(t0, x0);
    return out;
}

// ------------------------------------------------------------- combinatorics

namespace {

struct LineCoeffs {
    FieldElem alpha, beta, gamma; // alpha t + beta x + gamma = 0
};

LineCoeffs line_coeffs(const PlaneCurve& l) {
    return {l.poly.coeff(1, 0), l.poly.coeff(0, 1), l.poly.coeff(0, 0)};
}

bool proportional(const BiPoly& a, const BiPoly& b) {
    if (a.terms().size() != b.terms().size()) return false;
    if (a.is_zero()) return true;
    auto it = a.terms().begin();
    auto jt = b.terms().find(it->first);
    if (jt == b.terms().end()) return false;
    FieldElem c = it->second * jt->second.inverse();
    for (auto& [k, v] : a.terms()) {
        auto w = b.terms().find(k);
        if (w == b.terms().end() || v != w->second * c) return false;
    }
    return true;
}

void push(CombinatoricsReport& rep, std::string clause, bool pass, std::string detail = "") {
    rep.clauses.push_back({std::move(clause), pass, std::move(detail)});
}

// the three intersection points of a non-vertical line with a cubic, when
// they all resolve in the tower
std::optional<std::vector<std::pair<FieldElem, FieldElem>>> line_cubic_points(
    const PlaneCurve& line, const PlaneCurve& cubic, const std::vector<FieldElem>& hints) {
    LineCoeffs lc = line_coeffs(line);
    if (lc.beta.is_zero()) return std::nullopt;
    FieldElem ib = lc.beta.inverse();
    Poly xp(line.poly.tower(), 't', {-lc.gamma * ib, -lc.alpha * ib});
    Poly sub = cubic.poly.subst_x(xp);
    if (sub.is_zero()) return std::nullopt;
    RootsResult roots = roots_in_tower(sub, hints);
    if (!roots.unresolved.empty()) return std::nullopt;
    std::vector<std::pair<FieldElem, FieldElem>> out;
    for (auto& [t0, m] : roots.roots)
        for (int i = 0; i < m; ++i) out.emplace_back(t0, xp.eval(t0));
    return out;
}

} // namespace

bool CombinatoricsReport::all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.pass; });
}

CombinatoricsReport verify_combinatorics(const std::string& kind,
                                         const std::vector<PlaneCurve>& curves,
                                         const std::vector<FieldElem>& hints) {
    CombinatoricsReport rep;
    rep.kind = kind;
    bool lines_kind = (kind == "1a" || kind == "1b");
    bool conics_kind = (kind == "3a" || kind == "3b");
    bool mixed_kind = (kind == "2");
    if (!lines_kind && !conics_kind && !mixed_kind)
        fail(Errc::BadRequest, "unknown combinatorics kind '" + kind + "'");
    if (curves.size() != (mixed_kind ? 4u : 5u))
        fail(Errc::BadRequest, "expected cubic + line + " + std::string(mixed_kind ? "line + conic" : "three curves"));

    const PlaneCurve& cubic = curves[0];
    const PlaneCurve& line0 = curves[1];
    std::vector<PlaneCurve> rest(curves.begin() + 2, curves.end());
    if (cubic.degree != 3 || line0.degree != 1)
        fail(Errc::BadRequest, "curves must start with a cubic and a transversal line");

    // (i) cubic type
    bool want_nodal = (kind == "1b" || kind == "2" || kind == "3b");
    CubicAnalysis ca = cubic_analysis(cubic, hints);
    if (want_nodal)
        push(rep, "cubic_nodal", ca.kind == CubicKind::Nodal);
    else
        push(rep, "cubic_smooth", ca.kind == CubicKind::Smooth);

    // (ii) line0 transversal with three tower-rational intersection points
    Tangency t0 = tangency_classify(line0, cubic, hints);
    push(rep, "line0_transversal", t0.kind == TangencyKind::Transversal);
    auto ps = line_cubic_points(line0, cubic, hints);
    push(rep, "base_points_resolved", ps.has_value() && ps->size() == 3);

    // reducedness: pairwise distinct components
    {
        bool ok = true;
        for (std::size_t i = 0; i < curves.size() && ok; ++i)
            for (std::size_t j = i + 1; j < curves.size() && ok; ++j) {
                if (curves[i].degree == curves[j].degree && proportional(curves[i].poly, curves[j].poly))
                    ok = false;
                if (curves[i].degree == 1 && curves[j].degree == 3) {
                    try {
                        tangency_classify(curves[i], curves[j], hints);
                    } catch (const Error&) {
                        ok = false; // the line is a component of the cubic
                    }
                }
            }
        push(rep, "components_distinct", ok);
    }

    if (lines_kind && ps) {
        // (iii) each line passes through exactly one base point, bijectively,
        // and is tangent to the cubic at a different point
        std::vector<int> assignment;
        for (std::size_t li = 0; li < rest.size(); ++li) {
            const PlaneCurve& L = rest[li];
            if (L.degree != 1) fail(Errc::BadRequest, "expected lines");
            int hit = -1, hits = 0;
            for (std::size_t pi = 0; pi < ps->size(); ++pi)
                if (eval_point(L.poly, (*ps)[pi].first, (*ps)[pi].second).is_zero()) {
                    hit = static_cast<int>(pi);
                    ++hits;
                }
            push(rep, "line" + std::to_string(li + 1) + "_through_one_base_point", hits == 1);
            assignment.push_back(hit);
            Tangency tg = tangency_classify(L, cubic, hints);
            bool tangent_ok = tg.kind == TangencyKind::Tangent;
            bool away = true;
            if (tangent_ok && hit >= 0 && tg.contact_t)
                away = !(*tg.contact_t == (*ps)[hit].first);
            push(rep, "line" + std::to_string(li + 1) + "_tangent_elsewhere", tangent_ok && away);
            if (kind == "1b" && ca.node) {
                bool avoids = !eval_point(L.poly, ca.node->first, ca.node->second).is_zero();
                push(rep, "line" + std::to_string(li + 1) + "_avoids_node", avoids);
            }
        }
        std::sort(assignment.begin(), assignment.end());
        bool biject = assignment == std::vector<int>{0, 1, 2};
        push(rep, "base_point_assignment_bijective", biject);

        // (iv) not concurrent
        LineCoeffs a = line_coeffs(rest[0]), b = line_coeffs(rest[1]), c = line_coeffs(rest[2]);
        FieldElem det = a.alpha * (b.beta * c.gamma - b.gamma * c.beta) -
                        a.beta * (b.alpha * c.gamma - b.gamma * c.alpha) +
                        a.gamma * (b.alpha * c.beta - b.beta * c.alpha);
        push(rep, "lines_not_concurrent", !det.is_zero());
    }

    PlaneCurve quartic = PlaneCurve::make(cubic.poly * line0.poly);

    if (mixed_kind && ps) {
        const PlaneCurve& L = rest[0];
        const PlaneCurve& conic = rest[1];
        if (L.degree != 1 || conic.degree != 2) fail(Errc::BadRequest, "expected a line and a conic");
        bool through_node = ca.node && eval_point(L.poly, ca.node->first, ca.node->second).is_zero();
        push(rep, "line_through_node", through_node);
        int hits = 0;
        for (auto& [pt, px] : *ps)
            if (eval_point(L.poly, pt, px).is_zero()) ++hits;
        push(rep, "line_through_one_base_point", hits == 1);
        try {
            ContactProof proof = verify_contact(conic, quartic, hints);
            push(rep, "conic_contact", true, std::to_string(proof.contact_count) + " contact parameters");
        } catch (const Error& e) {
            push(rep, "conic_contact", false, e.what());
        }
        // conic meets the extra line transversely
        LineCoeffs lc = line_coeffs(L);
        bool trans = false;
        if (!lc.beta.is_zero()) {
            FieldElem ib = lc.beta.inverse();
            Poly xp(L.poly.tower(), 't', {-lc.gamma * ib, -lc.alpha * ib});
            Poly sub = conic.poly.subst_x(xp);
            auto sf = squarefree_decomp(sub);
            trans = sub.degree() == 2 && sf.size() == 1 && sf[0].second == 1;
        }
        push(rep, "conic_meets_line_transversely", trans);
    }

    if (conics_kind) {
        for (std::size_t ci = 0; ci < rest.size(); ++ci) {
            const PlaneCurve& conic = rest[ci];
            if (conic.degree != 2) fail(Errc::BadRequest, "expected conics");
            try {
                ContactProof proof = verify_contact(conic, quartic, hints);
                push(rep, "conic" + std::to_string(ci + 1) + "_contact_at_four_points",
                     proof.contact_count == 4, std::to_string(proof.contact_count) + " contact parameters");
            } catch (const Error& e) {
                push(rep, "conic" + std::to_string(ci + 1) + "_contact_at_four_points", false, e.what());
            }
        }
        // pairwise transversal
        std::vector<Poly> res_first;
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j) {
                Poly R = resultant_x_ext(rest[i].poly, rest[j].poly);
                bool trans = false;
                if (!R.is_zero() && R.degree() == 4) {
                    auto sf = squarefree_decomp(R);
                    trans = std::all_of(sf.begin(), sf.end(), [](auto& fe) { return fe.second == 1; });
                }
                if (!trans) { // same t for two distinct intersections: decide in the x-direction
                    Poly Rx = resultant_x_ext(rest[i].poly.swap_vars(), rest[j].poly.swap_vars());
                    if (!Rx.is_zero() && Rx.degree() == 4) {
                        auto sf = squarefree_decomp(Rx);
                        trans = std::all_of(sf.begin(), sf.end(), [](auto& fe) { return fe.second == 1; });
                    }
                }
                push(rep, "conics" + std::to_string(i + 1) + std::to_string(j + 1) + "_transversal", trans);
                if (i == 0) res_first.push_back(R);
            }
        // triple intersection empty: common t of (C1,C2) and (C1,C3), then common x
        bool empty = true;
        std::string detail;
        Poly g = poly_gcd(res_first[0], res_first[1]);
        if (g.degree() > 0) {
            RootsResult roots = roots_in_tower(g, hints);
            if (!roots.unresolved.empty()) {
                empty = false;
                detail = "indeterminate: unresolved common factor";
            }
            for (auto& [t0, m] : roots.roots) {
                Poly g0 = poly_gcd(poly_gcd(rest[0].poly.eval_t(t0), rest[1].poly.eval_t(t0)),
                                   rest[2].poly.eval_t(t0));
                if (g0.degree() > 0) {
                    empty = false;
                    detail = "common point over t = " + t0.str();
                }
            }
        }
        push(rep, "triple_intersection_empty", empty, detail);
    }
    return rep;
}

} // namespace mwl
