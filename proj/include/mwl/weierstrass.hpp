#pragma once

#include <optional>

#include "mwl/funcfield.hpp"

namespace mwl {

// y^2 = x^3 + b2(t) x^2 + b3(t) x + b4(t) over K(t), deg b_i <= i,
// nonsingular generic fiber (delta != 0). c4/c6/delta are cached exactly:
//   c4 = 16 b2^2 - 48 b3
//   c6 = -64 b2^3 + 288 b2 b3 - 864 b4
//   delta = (c4^3 - c6^2)/1728 = 16 disc_x(f_T)
class CurveModel {
public:
    // validated (degree bounds + nonsingularity). Throws DegreeBound / SingularModel.
    static CurveModel make(Poly b2, Poly b3, Poly b4);
    // skips the degree bounds (used by the t = 1/s chart, where they relax)
    static CurveModel make_unbounded(Poly b2, Poly b3, Poly b4);

    const Poly& b2() const { return b2_; }
    const Poly& b3() const { return b3_; }
    const Poly& b4() const { return b4_; }
    const Poly& c4() const { return c4_; }
    const Poly& c6() const { return c6_; }
    const Poly& delta() const { return delta_; }
    const TowerPtr& tower() const { return b3_.tower(); }
    char var() const { return b3_.var(); }

    BiPoly trisection() const; // f_T(t,x) as a bivariate polynomial

private:
    CurveModel(Poly b2, Poly b3, Poly b4, Poly c4, Poly c6, Poly delta)
        : b2_(std::move(b2)), b3_(std::move(b3)), b4_(std::move(b4)),
          c4_(std::move(c4)), c6_(std::move(c6)), delta_(std::move(delta)) {}
    static CurveModel build(Poly b2, Poly b3, Poly b4, bool check_bounds);
    Poly b2_, b3_, b4_, c4_, c6_, delta_;
};

// A K(t)-rational point: the zero section O or an affine pair (x, y).
class Point {
public:
    Point() : zero_(true) {}                       // O
    Point(RatFunc x, RatFunc y) : zero_(false), x_(std::move(x)), y_(std::move(y)) {}

    static Point zero() { return Point(); }
    bool is_zero() const { return zero_; }
    const RatFunc& x() const { return x_; }
    const RatFunc& y() const { return y_; }

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }

    std::string str() const;

private:
    bool zero_;
    RatFunc x_, y_;
};

bool on_curve(const CurveModel& C, const Point& P); // exact identity in K(t)

Point ec_neg(const CurveModel& C, const Point& P);
Point ec_add(const CurveModel& C, const Point& P, const Point& Q);
Point ec_sub(const CurveModel& C, const Point& P, const Point& Q);
Point ec_double(const CurveModel& C, const Point& P);
Point ec_mul(const CurveModel& C, long n, const Point& P);

// least n <= bound with [n]P = O, nullopt when none
std::optional<int> torsion_order(const CurveModel& C, const Point& P, int bound = 12);

} // namespace mwl
