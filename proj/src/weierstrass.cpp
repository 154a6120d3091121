#include "mwl/weierstrass.hpp"

namespace mwl {

CurveModel CurveModel::make(Poly b2, Poly b3, Poly b4) { return build(std::move(b2), std::move(b3), std::move(b4), true); }
CurveModel CurveModel::make_unbounded(Poly b2, Poly b3, Poly b4) { return build(std::move(b2), std::move(b3), std::move(b4), false); }

CurveModel CurveModel::build(Poly b2, Poly b3, Poly b4, bool check_bounds) {
    if (check_bounds) {
        if (b2.degree() > 2) fail(Errc::DegreeBound, "deg b2 > 2");
        if (b3.degree() > 3) fail(Errc::DegreeBound, "deg b3 > 3");
        if (b4.degree() > 4) fail(Errc::DegreeBound, "deg b4 > 4");
    }
    const TowerPtr& t = b3.tower();
    char v = b3.var();
    auto k = [&](long n) { return Poly::from_rationals(t, v, {Rational(n)}); };
    Poly c4 = k(16) * b2 * b2 - k(48) * b3;
    Poly c6 = k(-64) * b2 * b2 * b2 + k(288) * b2 * b3 - k(864) * b4;
    Poly num = c4 * c4 * c4 - c6 * c6;
    auto [delta, rem] = poly_divrem(num, k(1728));
    if (!rem.is_zero()) fail(Errc::SingularModel, "c4^3 - c6^2 not divisible by 1728");
    if (delta.is_zero()) fail(Errc::SingularModel, "discriminant vanishes identically");
    return CurveModel(std::move(b2), std::move(b3), std::move(b4), std::move(c4), std::move(c6), std::move(delta));
}

BiPoly CurveModel::trisection() const {
    BiPoly f(tower());
    f.set(0, 3, FieldElem::one(tower()));
    BiPoly x2 = BiPoly::from_poly_t(b2_);
    for (auto& [k, v] : x2.terms()) f.set(k.first, 2, v);
    BiPoly x1 = BiPoly::from_poly_t(b3_);
    for (auto& [k, v] : x1.terms()) f.set(k.first, 1, v);
    BiPoly x0 = BiPoly::from_poly_t(b4_);
    for (auto& [k, v] : x0.terms()) f.set(k.first, 0, v);
    return f;
}

bool Point::operator==(const Point& o) const {
    if (zero_ != o.zero_) return false;
    if (zero_) return true;
    return x_ == o.x_ && y_ == o.y_;
}

std::string Point::str() const {
    if (zero_) return "O";
    return "(" + x_.str() + ", " + y_.str() + ")";
}

bool on_curve(const CurveModel& C, const Point& P) {
    if (P.is_zero()) return true;
    if (!C.tower()->same_as(*P.x().num().tower()))
        fail(Errc::TowerMismatch, "point and curve live in different towers");
    RatFunc x = P.x(), y = P.y();
    RatFunc b2 = RatFunc::from_poly(C.b2());
    RatFunc b3 = RatFunc::from_poly(C.b3());
    RatFunc b4 = RatFunc::from_poly(C.b4());
    RatFunc rhs = ((x + b2) * x + b3) * x + b4;
    return (y * y - rhs).is_zero();
}

Point ec_neg(const CurveModel&, const Point& P) {
    if (P.is_zero()) return P;
    return Point(P.x(), -P.y());
}

Point ec_add(const CurveModel& C, const Point& P, const Point& Q) {
    if (P.is_zero()) return Q;
    if (Q.is_zero()) return P;
    const RatFunc &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    const TowerPtr& tw = C.tower();
    char v = C.var();
    auto k = [&](long n) { return RatFunc::from_poly(Poly::from_rationals(tw, v, {Rational(n)})); };
    RatFunc lambda;
    if (x1 == x2) {
        if (y1 == -y2) return Point::zero(); // includes the y = 0 two-torsion case
        // tangent slope (3x^2 + 2 b2 x + b3) / (2y)
        RatFunc b2 = RatFunc::from_poly(C.b2());
        RatFunc b3 = RatFunc::from_poly(C.b3());
        lambda = (k(3) * x1 * x1 + k(2) * b2 * x1 + b3) / (k(2) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    RatFunc b2 = RatFunc::from_poly(C.b2());
    RatFunc x3 = lambda * lambda - b2 - x1 - x2;
    RatFunc y3 = lambda * (x1 - x3) - y1;
    return Point(std::move(x3), std::move(y3));
}

Point ec_sub(const CurveModel& C, const Point& P, const Point& Q) { return ec_add(C, P, ec_neg(C, Q)); }
Point ec_double(const CurveModel& C, const Point& P) { return ec_add(C, P, P); }

Point ec_mul(const CurveModel& C, long n, const Point& P) {
    if (n < 0) return ec_neg(C, ec_mul(C, -n, P));
    Point acc = Point::zero();
    Point base = P;
    while (n) {
        if (n & 1) acc = ec_add(C, acc, base);
        n >>= 1;
        if (n) base = ec_double(C, base);
    }
    return acc;
}

std::optional<int> torsion_order(const CurveModel& C, const Point& P, int bound) {
    Point acc = Point::zero();
    for (int n = 1; n <= bound; ++n) {
        acc = ec_add(C, acc, P);
        if (acc.is_zero()) return n;
    }
    return std::nullopt;
}

} // namespace mwl
