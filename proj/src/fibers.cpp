#include "mwl/fibers.hpp"

#include <algorithm>

namespace mwl {

std::string kodaira_str(Kodaira k, int n) {
    switch (k) {
        case Kodaira::In: return "I" + std::to_string(n);
        case Kodaira::II: return "II";
        case Kodaira::III: return "III";
        case Kodaira::IV: return "IV";
        case Kodaira::InStar: return "I" + std::to_string(n) + "*";
        case Kodaira::IVStar: return "IV*";
        case Kodaira::IIIStar: return "III*";
        case Kodaira::IIStar: return "II*";
        case Kodaira::Unclassified: return "?";
    }
    return "?";
}

void model_invariants(const CurveModel& C, Poly& c4, Poly& c6, Poly& delta) {
    c4 = C.c4();
    c6 = C.c6();
    delta = C.delta();
}

namespace {

// s^w * p(1/s); polynomial iff deg p <= w
Poly reverse_into(const Poly& p, int w, char var) {
    const TowerPtr& t = p.tower();
    if (p.degree() > w) fail(Errc::DegreeBound, "coefficient degree exceeds chart weight");
    std::vector<FieldElem> out(w + 1, FieldElem::zero(t));
    for (int i = 0; i <= p.degree(); ++i) out[w - i] = p.coeff(i);
    return Poly(t, var, std::move(out));
}

RatFunc reverse_ratfunc(const RatFunc& r, int w, char var) {
    // s^w * r(1/s) = s^(w + deg den - deg num) * rev(num)/rev(den)
    const TowerPtr& t = r.num().tower();
    if (r.is_zero()) return RatFunc::zero(t, var);
    Poly num = reverse_into(r.num(), r.num().degree(), var);
    Poly den = reverse_into(r.den(), r.den().degree(), var);
    int shift = w + r.den().degree() - r.num().degree();
    if (shift >= 0) return RatFunc(num.shifted(shift), den);
    return RatFunc(num, den.shifted(-shift));
}

int ord_or_inf(const Poly& p, const FieldElem& t0) {
    if (p.is_zero()) return -1; // encodes +infinity
    return ord_at(p, t0);
}

struct TypeInfo {
    Kodaira type;
    int n;
    int m;
};

// standard char-0 Kodaira table from (ord c4, ord c6, ord delta); -1 = infinite order
TypeInfo kodaira_from_orders(int vc4, int vc6, int vd) {
    auto ge = [](int v, int bound) { return v == -1 || v >= bound; };
    if (vc4 == 0) return {Kodaira::In, vd, std::max(vd, 1)};
    if (vd >= 12 && ge(vc4, 4) && ge(vc6, 6))
        fail(Errc::NonMinimalModel, "non-minimal place (ord delta >= 12, ord c4 >= 4, ord c6 >= 6)");
    if (vd == 2 && vc6 == 1) return {Kodaira::II, 0, 1};
    if (vd == 3 && vc4 == 1) return {Kodaira::III, 0, 2};
    if (vd == 4 && vc6 == 2) return {Kodaira::IV, 0, 3};
    if (vd == 6 && ge(vc4, 2) && ge(vc6, 3)) return {Kodaira::InStar, 0, 5};
    if (vd > 6 && vc4 == 2 && vc6 == 3) return {Kodaira::InStar, vd - 6, vd - 1};
    if (vd == 8 && vc6 == 4) return {Kodaira::IVStar, 0, 7};
    if (vd == 9 && vc4 == 3) return {Kodaira::IIIStar, 0, 8};
    if (vd == 10 && vc6 == 5) return {Kodaira::IIStar, 0, 9};
    return {Kodaira::Unclassified, 0, 0};
}

// singular x of the degenerate Weierstrass cubic at t0 (multiple root)
FieldElem fiber_singular_x(const CurveModel& C, const FieldElem& t0) {
    const TowerPtr& tw = C.tower();
    Poly cub(tw, 'x',
             {C.b4().eval(t0), C.b3().eval(t0), C.b2().eval(t0), FieldElem::one(tw)});
    Poly g = poly_gcd(cub, cub.derivative());
    if (g.degree() == 1) return -g.coeff(0);
    if (g.degree() == 2) // (x - x0)^2: x0 = -coeff(1)/2
        return g.coeff(1) * FieldElem(tw, Rational(-1, 2));
    fail(Errc::SingularModel, "unexpected multiple-root structure in a singular fiber");
}

} // namespace

CurveModel chart_at_infinity(const CurveModel& C) {
    if (C.b2().degree() > 2 || C.b3().degree() > 3 || C.b4().degree() > 4)
        fail(Errc::DegreeBound, "infinity chart needs deg b_i <= i");
    char v = C.var() == 's' ? 't' : 's';
    return CurveModel::make_unbounded(reverse_into(C.b2(), 2, v), reverse_into(C.b3(), 4, v),
                                      reverse_into(C.b4(), 6, v));
}

Point point_at_infinity_chart(const Point& P) {
    if (P.is_zero()) return P;
    char v = P.x().var() == 's' ? 't' : 's';
    return Point(reverse_ratfunc(P.x(), 2, v), reverse_ratfunc(P.y(), 3, v));
}

std::vector<FiberReport> classify_fibers(const CurveModel& C, const std::vector<FieldElem>& hints) {
    const TowerPtr& tw = C.tower();
    std::vector<FiberReport> out;

    RootsResult roots = roots_in_tower(C.delta(), hints);
    std::sort(roots.roots.begin(), roots.roots.end(),
              [](const auto& a, const auto& b) { return FieldElem::order_cmp(a.first, b.first) < 0; });

    for (auto& [t0, vd] : roots.roots) {
        FiberReport r;
        r.place = Place::finite(t0);
        r.ord_delta = vd;
        r.ord_c4 = ord_or_inf(C.c4(), t0);
        r.ord_c6 = ord_or_inf(C.c6(), t0);
        TypeInfo ti = kodaira_from_orders(r.ord_c4, r.ord_c6, r.ord_delta);
        r.type = ti.type;
        r.n = ti.n;
        r.m_v = ti.m;
        if (r.m_v == 2) r.sing_x = fiber_singular_x(C, t0);
        out.push_back(std::move(r));
    }

    for (auto& [f, e] : roots.unresolved) {
        FiberReport r;
        r.unresolved = f;
        r.ord_delta = e; // per root of the factor
        Poly g = poly_gcd(f, C.c4());
        if (g.degree() == 0) {
            r.type = Kodaira::In;
            r.n = e;
            r.m_v = std::max(e, 1);
            r.ord_c4 = 0;
            r.ord_c6 = 0;
        } else {
            r.type = Kodaira::Unclassified; // additive place hiding in an unresolved factor
        }
        out.push_back(std::move(r));
    }

    // the fiber over t = infinity, via the s-chart at s = 0
    CurveModel Ci = chart_at_infinity(C);
    FieldElem z = FieldElem::zero(tw);
    int vd = Ci.delta().is_zero() ? 0 : (Ci.delta().eval(z).is_zero() ? ord_at(Ci.delta(), z) : 0);
    if (vd > 0) {
        FiberReport r;
        r.place = Place::infinity();
        r.ord_delta = vd;
        r.ord_c4 = ord_or_inf(Ci.c4(), z);
        r.ord_c6 = ord_or_inf(Ci.c6(), z);
        TypeInfo ti = kodaira_from_orders(r.ord_c4, r.ord_c6, r.ord_delta);
        r.type = ti.type;
        r.n = ti.n;
        r.m_v = ti.m;
        if (r.m_v == 2) r.sing_x = fiber_singular_x(Ci, z);
        out.push_back(std::move(r));
    }
    return out;
}

int component_index(const CurveModel& C, const FiberReport& report, const Point& P) {
    if (P.is_zero()) return 0;
    if (!report.place.has_value())
        fail(Errc::UnsupportedFiber, "component detection over an unresolved place");
    if (report.m_v != 2)
        fail(Errc::UnsupportedFiber,
             "automatic component detection only for 2-component fibers (" +
                 kodaira_str(report.type, report.n) + " has m_v = " + std::to_string(report.m_v) + ")");
    if (report.place->is_infinity()) {
        CurveModel Ci = chart_at_infinity(C);
        FiberReport local = report;
        local.place = Place::finite(FieldElem::zero(C.tower()));
        local.sing_x = report.sing_x;
        return component_index(Ci, local, point_at_infinity_chart(P));
    }
    const FieldElem& t0 = *report.place->t0;
    if (P.x().has_pole_at(t0)) return 0; // meets the zero section, hence the identity component
    FieldElem ex = P.x().eval(t0);
    FieldElem ey = P.y().eval(t0);
    if (ex == *report.sing_x && ey.is_zero()) return 1;
    return 0;
}

Rational contribution(const FiberReport& r, int i) { return contribution(r, i, i); }

Rational contribution(const FiberReport& r, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= std::max(r.m_v, 1)) fail(Errc::BadIndex, "component index out of range");
    if (i == 0 || j == 0) return Rational(0);
    switch (r.type) {
        case Kodaira::In: // indices along the cycle
            return Rational(i * (r.n - j), r.n);
        case Kodaira::II:
        case Kodaira::IIStar:
            return Rational(0);
        case Kodaira::III:
            return Rational(1, 2);
        case Kodaira::IIIStar:
            return Rational(3, 2);
        case Kodaira::IV:
            return i == j ? Rational(2, 3) : Rational(1, 3);
        case Kodaira::IVStar:
            return i == j ? Rational(4, 3) : Rational(2, 3);
        case Kodaira::InStar: {
            // index 1 = the near simple component, 2..3 = far components
            bool ni = (i == 1), nj = (j == 1);
            if (i == j) return ni ? Rational(1) : Rational(1) + Rational(r.n, 4);
            if (ni || nj) return Rational(1, 2);
            return Rational(2 + r.n, 4);
        }
        case Kodaira::Unclassified:
            fail(Errc::UnsupportedFiber, "contribution of an unclassified fiber");
    }
    fail(Errc::BadIndex, "unhandled fiber type");
}

} // namespace mwl
