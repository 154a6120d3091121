#include <doctest.h>

#include "helpers.hpp"

using namespace mwl;

TEST_CASE("model invariants and the c4^3 - c6^2 = 1728 delta identity") {
    const CurveSpec& s = testutil::spec51b();
    Poly c4, c6, delta;
    model_invariants(s.curve(), c4, c6, delta);
    Poly k1728 = Poly::from_rationals(s.tower, 't', {Rational(1728)});
    CHECK(c4 * c4 * c4 - c6 * c6 == k1728 * delta);
    // and against an independent expansion for the 1-(a) shape (b2 = b4 = 0)
    const CurveSpec& sa = testutil::spec51a();
    Poly b3 = sa.curve().b3();
    CHECK(sa.curve().delta() == Poly::from_rationals(sa.tower, 't', {-64}) * b3 * b3 * b3);
}

TEST_CASE("chart at infinity") {
    const CurveSpec& s = testutil::spec51a();
    CurveModel Ci = chart_at_infinity(s.curve());
    // b3 = -(t^3 + 3t^2 + 2t)  ->  b3* = -(s + 3 s^2 + 2 s^3)
    CHECK(Ci.b3() == Poly::from_rationals(s.tower, 's', {0, -1, -3, -2}));
    CHECK(Ci.b2().is_zero());
    // constant model is unchanged up to the weights
    TowerPtr t = testutil::tower_q();
    CurveModel flat = CurveModel::make(Poly(t, 't'), Poly::from_rationals(t, 't', {-1}), Poly(t, 't'));
    CurveModel flati = chart_at_infinity(flat);
    CHECK(flati.b3() == Poly::from_rationals(t, 's', {0, 0, 0, 0, -1}));
}

TEST_CASE("fiber classification: 1-(a) has four III fibers") {
    const CurveSpec& s = testutil::spec51a();
    auto fibers = classify_fibers(s.curve(), s.place_hints);
    REQUIRE(fibers.size() == 4);
    int total = 0;
    for (const auto& f : fibers) {
        CHECK(f.type == Kodaira::III);
        CHECK(f.m_v == 2);
        CHECK(f.ord_delta == 3);
        CHECK(f.ord_c4 == 1);
        REQUIRE(f.sing_x.has_value());
        CHECK(f.sing_x->is_zero());
        total += f.ord_delta;
    }
    CHECK(total == 12);
    // canonical order: -2, -1, 0, infinity
    CHECK(*fibers[0].place->t0 == FieldElem(s.tower, Rational(-2)));
    CHECK(*fibers[1].place->t0 == FieldElem(s.tower, Rational(-1)));
    CHECK(*fibers[2].place->t0 == FieldElem(s.tower, Rational(0)));
    CHECK(fibers[3].place->is_infinity());
}

TEST_CASE("fiber classification: 1-(b) has three I2 and two III") {
    const CurveSpec& s = testutil::spec51b();
    auto fibers = classify_fibers(s.curve(), s.place_hints);
    REQUIRE(fibers.size() == 5);
    std::vector<std::string> types;
    for (const auto& f : fibers) types.push_back(kodaira_str(f.type, f.n));
    CHECK(types == std::vector<std::string>{"III", "I2", "I2", "I2", "III"});
    // singular x-coordinates sit at the base points of the quartic
    CHECK(*fibers[1].sing_x == FieldElem(s.tower, Rational(3, 8))); // t = -3/4
    CHECK(*fibers[3].sing_x == FieldElem(s.tower, Rational(6)));    // t = 3
    int total = 0;
    for (const auto& f : fibers) total += f.ord_delta;
    CHECK(total == 12);
}

TEST_CASE("smooth places are excluded; non-minimal models are rejected") {
    TowerPtr t = testutil::tower_q();
    auto qp = [&](std::vector<Rational> cs) { return Poly::from_rationals(t, 't', cs); };
    // y^2 = x^3 + t x + 1: irreducible I1 places end up as unresolved factors
    CurveModel C = CurveModel::make(qp({}), qp({0, 1}), qp({1}));
    auto fibers = classify_fibers(C, {});
    int weighted = 0;
    for (const auto& f : fibers) {
        CHECK(f.ord_delta >= 1);
        weighted += f.ord_delta * (f.unresolved ? f.unresolved->degree() : 1);
    }
    CHECK(weighted == 12);
    // y^2 = x^3 - 1 over P^1 is non-minimal at infinity
    CurveModel flat = CurveModel::make(qp({}), qp({}), qp({-1}));
    CHECK_THROWS_AS(classify_fibers(flat, {}), Error);
}

TEST_CASE("component indices reproduce the gamma vectors") {
    const CurveSpec& s = testutil::spec51a();
    HeightContext ctx(s.curve(), s.place_hints, s.overrides);
    CHECK(gamma_vector(ctx, s.point("Ptau")).entries == std::vector<int>{1, 1, 1, 1});
    CHECK(gamma_vector(ctx, Point::zero()).entries == std::vector<int>{0, 0, 0, 0});
    CHECK(gamma_vector(ctx, s.point("P0")).entries == std::vector<int>{0, 0, 0, 0});
    CHECK(gamma_vector(ctx, s.point("P1")).entries == std::vector<int>{0, 0, 1, 1});
    CHECK(gamma_vector(ctx, s.point("P2")).entries == std::vector<int>{0, 1, 0, 1});
    CHECK(gamma_vector(ctx, s.point("P3")).entries == std::vector<int>{1, 0, 0, 1});
    CHECK(gamma_vector(ctx, s.point("P4")).entries == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("gamma is additive mod 2 on sampled pairs") {
    const CurveSpec& s = testutil::spec51b();
    HeightContext ctx(s.curve(), s.place_hints, s.overrides);
    const char* names[] = {"P1", "P2", "P3", "Ptau", "P5"};
    for (const char* a : names)
        for (const char* b : names) {
            GammaVector ga = gamma_vector(ctx, s.point(a));
            GammaVector gb = gamma_vector(ctx, s.point(b));
            GammaVector gs = gamma_vector(ctx, ec_add(s.curve(), s.point(a), s.point(b)));
            for (std::size_t i = 0; i < gs.entries.size(); ++i)
                CHECK(gs.entries[i] == (ga.entries[i] ^ gb.entries[i]));
        }
}

TEST_CASE("component detection refuses fibers with more than two components") {
    // y^2 = x^3 - t^2 x has I0* fibers at t = 0 and infinity
    TowerPtr t = testutil::tower_q();
    CurveModel C = CurveModel::make(Poly(t, 't'), Poly::from_rationals(t, 't', {0, 0, -1}), Poly(t, 't'));
    auto fibers = classify_fibers(C, {});
    REQUIRE(fibers.size() == 2);
    CHECK(fibers[0].type == Kodaira::InStar);
    CHECK(fibers[0].n == 0);
    CHECK(fibers[0].m_v == 5);
    Point P(RatFunc::from_poly(Poly::from_rationals(t, 't', {0, 1})),
            RatFunc::from_poly(Poly(t, 't')));
    REQUIRE(on_curve(C, P)); // (t, 0) lies on the curve
    try {
        component_index(C, fibers[0], P);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnsupportedFiber);
    }
    // a manual override through the height context is accepted instead
    std::vector<GammaOverride> ov;
    ov.push_back({P, Place::finite(FieldElem::zero(t)), 2});
    ov.push_back({P, Place::infinity(), 2});
    HeightContext ctx(C, {}, ov);
    CHECK(gamma_vector(ctx, P).entries == std::vector<int>{2, 2});
    CHECK(height(ctx, P) == Rational(0)); // 2 + 0 - 1 - 1: indeed a torsion section
    CHECK(torsion_order(C, P) == 2);
}

TEST_CASE("contribution table") {
    FiberReport iii;
    iii.type = Kodaira::III;
    iii.m_v = 2;
    CHECK(contribution(iii, 1) == Rational(1, 2));
    CHECK(contribution(iii, 0) == Rational(0));
    CHECK(contribution(iii, 0, 1) == Rational(0));

    FiberReport i4;
    i4.type = Kodaira::In;
    i4.n = 4;
    i4.m_v = 4;
    // oracle: i(n-j)/n over the cycle
    for (int i = 0; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            Rational want = (i == 0 || j == 0) ? Rational(0) : Rational(i * (4 - j), 4);
            CHECK(contribution(i4, i, j) == want);
        }
    CHECK(contribution(i4, 2) == Rational(1));
    CHECK_THROWS_AS(contribution(i4, 5), Error);

    FiberReport i0s;
    i0s.type = Kodaira::InStar;
    i0s.n = 0;
    i0s.m_v = 5;
    CHECK(contribution(i0s, 1) == Rational(1));
    CHECK(contribution(i0s, 2) == Rational(1));
    CHECK(contribution(i0s, 2, 3) == Rational(1, 2));
    CHECK(contribution(i0s, 1, 2) == Rational(1, 2));

    FiberReport i2s; // I2*: near 1, far 1 + 2/4
    i2s.type = Kodaira::InStar;
    i2s.n = 2;
    i2s.m_v = 7;
    CHECK(contribution(i2s, 1) == Rational(1));
    CHECK(contribution(i2s, 2) == Rational(3, 2));
    CHECK(contribution(i2s, 2, 3) == Rational(1));

    FiberReport iv;
    iv.type = Kodaira::IV;
    iv.m_v = 3;
    CHECK(contribution(iv, 1) == Rational(2, 3));
    CHECK(contribution(iv, 1, 2) == Rational(1, 3));
}
