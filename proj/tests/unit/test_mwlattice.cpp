#include <doctest.h>

#include "helpers.hpp"

using namespace mwl;
using testutil::Rng;

namespace {

HeightContext make_ctx(const CurveSpec& s) { return HeightContext(s.curve(), s.place_hints, s.overrides); }

// independent intersect-zero oracle via s-chart valuations of x
int intersect_zero_oracle(const Point& P) {
    const RatFunc& x = P.x();
    int total = 0;
    for (auto& [f, e] : squarefree_decomp(x.den())) total += e * f.degree();
    Point Pi = point_at_infinity_chart(P);
    if (!Pi.x().is_zero()) {
        int ord_inf = Pi.x().den().degree() == 0 ? 0 : 0;
        // pole order of X(s) at s = 0
        FieldElem zero = FieldElem::zero(x.num().tower());
        int num_ord = Pi.x().num().is_zero() ? 0 : ord_at(Pi.x().num(), zero);
        int den_ord = ord_at(Pi.x().den(), zero);
        ord_inf = den_ord - num_ord;
        if (ord_inf > 0) total += ord_inf;
    }
    return total / 2;
}

} // namespace

TEST_CASE("context rejects non-rational-elliptic input") {
    TowerPtr t = testutil::tower_q();
    CurveModel flat =
        CurveModel::make(Poly(t, 't'), Poly(t, 't'), Poly::from_rationals(t, 't', {-1}));
    CHECK_THROWS_AS(HeightContext(flat, {}), Error);
}

TEST_CASE("intersect_zero") {
    const CurveSpec& s = testutil::spec51a();
    HeightContext ctx = make_ctx(s);
    CHECK(intersect_zero(ctx, s.point("P1")) == 0);
    Point d0 = ec_double(s.curve(), s.point("P0"));
    CHECK(intersect_zero(ctx, d0) == 3);
    CHECK(intersect_zero(ctx, d0) == intersect_zero_oracle(d0));
    Point d1 = ec_double(s.curve(), s.point("P1"));
    CHECK(intersect_zero(ctx, d1) == 1);
    CHECK(intersect_zero(ctx, d1) == intersect_zero_oracle(d1));
    CHECK_THROWS_AS(intersect_zero(ctx, Point::zero()), Error);
}

TEST_CASE("heights on 1-(a)") {
    const CurveSpec& s = testutil::spec51a();
    HeightContext ctx = make_ctx(s);
    CHECK(height(ctx, s.point("Ptau")) == Rational(0));
    CHECK(height(ctx, s.point("P0")) == Rational(2));
    CHECK(height(ctx, s.point("P1")) == Rational(1));
    CHECK(height(ctx, s.point("P4")) == Rational(1));
}

TEST_CASE("pairings") {
    const CurveSpec& s = testutil::spec51a();
    HeightContext ctx = make_ctx(s);
    CHECK(height_pair(ctx, s.point("P0"), s.point("P1")) == Rational(1));
    for (const char* nm : {"P0", "P1", "P2", "P3"})
        CHECK(height_pair(ctx, s.point(nm), s.point("Ptau")) == Rational(0));

    const CurveSpec& sb = testutil::spec51b();
    HeightContext ctxb = make_ctx(sb);
    CHECK(height_pair(ctxb, sb.point("P1"), sb.point("P2")) == Rational(0));
    CHECK(height(ctxb, sb.point("P1")) == Rational(1, 2));
}

TEST_CASE("gram matrices of both examples") {
    const CurveSpec& s = testutil::spec51a();
    HeightContext ctx = make_ctx(s);
    GramMatrix g = gram(ctx, {s.point("P0"), s.point("P1"), s.point("P2"), s.point("P3")});
    std::vector<std::vector<Rational>> want = {
        {Rational(2), Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(1), Rational(1, 2), Rational(1, 2)},
        {Rational(1), Rational(1, 2), Rational(1), Rational(1, 2)},
        {Rational(1), Rational(1, 2), Rational(1, 2), Rational(1)}};
    CHECK(g.entries == want);

    const CurveSpec& sb = testutil::spec51b();
    HeightContext ctxb = make_ctx(sb);
    GramMatrix gb = gram(ctxb, {sb.point("P1"), sb.point("P2"), sb.point("P3")});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(gb.entries[i][j] == (i == j ? Rational(1, 2) : Rational(0)));

    GramMatrix gt = gram(ctx, {s.point("Ptau")});
    CHECK(gt.entries == std::vector<std::vector<Rational>>{{Rational(0)}});
}

TEST_CASE("decompose") {
    const CurveSpec& s = testutil::spec53();
    HeightContext ctx = make_ctx(s);
    std::vector<Point> basis{s.point("P0"), s.point("P1"), s.point("P2"), s.point("P3")};
    GramMatrix g = gram(ctx, basis);

    Point P4 = s.point("P4");
    Decomposition d = decompose(ctx, basis, g, P4);
    CHECK(d.coeffs == std::vector<Integer>{0, 0, 1, -1});
    CHECK(d.torsion_part == s.point("Ptau"));

    Decomposition dq = decompose(ctx, basis, g, s.point("Q1"));
    CHECK(dq.coeffs == std::vector<Integer>{-1, 2, 0, 0});
    CHECK(dq.torsion_part.is_zero());

    Decomposition dz = decompose(ctx, basis, g, Point::zero());
    CHECK(dz.coeffs == std::vector<Integer>{0, 0, 0, 0});
    CHECK(dz.torsion_part.is_zero());

    // a point outside the integral span of a partial basis
    std::vector<Point> partial{s.point("P1"), s.point("P2"), s.point("P3")};
    GramMatrix gp = gram(ctx, partial);
    CHECK_THROWS_AS(decompose(ctx, partial, gp, s.point("P0")), Error);
}

TEST_CASE("rebuilding a decomposition reproduces the input") {
    const CurveSpec& s = testutil::spec53();
    HeightContext ctx = make_ctx(s);
    std::vector<Point> basis{s.point("P0"), s.point("P1"), s.point("P2"), s.point("P3")};
    GramMatrix g = gram(ctx, basis);
    for (const char* nm : {"Q0", "Q1", "Q2", "P4"}) {
        const Point& P = s.point(nm);
        Decomposition d = decompose(ctx, basis, g, P);
        Point rebuilt = d.torsion_part;
        for (std::size_t i = 0; i < basis.size(); ++i)
            rebuilt = ec_add(s.curve(), rebuilt, ec_mul(s.curve(), d.coeffs[i].get_si(), basis[i]));
        CHECK(rebuilt == P);
    }
}

TEST_CASE("bilinearity and scaling laws, randomized" * doctest::timeout(300)) {
    const CurveSpec& s = testutil::spec51b();
    HeightContext ctx = make_ctx(s);
    const CurveModel& C = s.curve();
    std::vector<Point> gens{s.point("P1"), s.point("P2"), s.point("P3"), s.point("Ptau")};
    Rng rng;
    std::vector<Point> pool;
    for (int n = 0; n < 10; ++n) {
        Point p = Point::zero();
        for (const auto& g : gens) p = ec_add(C, p, ec_mul(C, rng.small(-1, 1), g));
        pool.push_back(p);
    }
    int checked = 0;
    for (int n = 0; n < 60; ++n) {
        const Point& a = pool[rng.small(0, static_cast<int>(pool.size()) - 1)];
        const Point& b = pool[rng.small(0, static_cast<int>(pool.size()) - 1)];
        const Point& c = pool[rng.small(0, static_cast<int>(pool.size()) - 1)];
        // <a+b, c> = <a,c> + <b,c>
        CHECK(height_pair(ctx, ec_add(C, a, b), c) ==
              height_pair(ctx, a, c) + height_pair(ctx, b, c));
        // h([2]a) = 4 h(a), h([3]a) = 9 h(a)
        CHECK(height(ctx, ec_mul(C, 2, a)) == Rational(4) * height(ctx, a));
        CHECK(height(ctx, ec_mul(C, 3, a)) == Rational(9) * height(ctx, a));
        // h = 0 iff torsion
        bool tor = torsion_order(C, a, 12).has_value();
        CHECK((height(ctx, a) == 0) == tor);
        checked += 4;
    }
    CHECK(checked >= 200);
}

TEST_CASE("gram positive definite on the golden bases") {
    for (const CurveSpec* sp : {&testutil::spec51a(), &testutil::spec51b()}) {
        const CurveSpec& s = *sp;
        HeightContext ctx = make_ctx(s);
        std::vector<Point> basis;
        for (const char* nm : {"P0", "P1", "P2", "P3"})
            if (s.points.count(nm)) basis.push_back(s.point(nm));
        GramMatrix g = gram(ctx, basis);
        // leading principal minors > 0 via exact elimination
        std::size_t n = basis.size();
        auto a = g.entries;
        for (std::size_t k = 0; k < n; ++k) {
            REQUIRE(sgn(a[k][k]) > 0);
            for (std::size_t i = k + 1; i < n; ++i) {
                Rational f = a[i][k] / a[k][k];
                for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            }
        }
    }
}
