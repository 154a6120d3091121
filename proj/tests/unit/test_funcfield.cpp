#include <doctest.h>

#include "helpers.hpp"

using namespace mwl;
using testutil::Rng;

namespace {

Poly qpoly(const TowerPtr& t, std::vector<Rational> cs, char var = 't') {
    return Poly::from_rationals(t, var, cs);
}

} // namespace

TEST_CASE("gcd and divrem basics") {
    TowerPtr t = testutil::tower_q();
    Poly a = qpoly(t, {-1, 0, 1}); // t^2 - 1
    Poly b = qpoly(t, {-1, 1});    // t - 1
    CHECK(poly_gcd(a, b) == b);

    Poly p = qpoly(t, {0, 2, 3, 1}); // t^3 + 3t^2 + 2t
    auto [q, r] = poly_divrem(p, qpoly(t, {0, 1}));
    CHECK(q == qpoly(t, {2, 3, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(poly_divrem(p, Poly(t, 't')), Error);
}

TEST_CASE("gcd over Q(sqrt2)") {
    TowerPtr t = testutil::tower_qi_r2();
    FieldElem r2 = FieldElem::generator(t, 1);
    Poly a = qpoly(t, {-2, 0, 1});                                 // t^2 - 2
    Poly b(t, 't', {-r2, FieldElem::one(t)});                      // t - r2
    Poly g = poly_gcd(a, b);
    CHECK(g == b);
    // divisibility oracle: (t - r2)(t + r2) = t^2 - 2
    Poly c(t, 't', {r2, FieldElem::one(t)});
    CHECK(b * c == a);
}

TEST_CASE("squarefree decomposition") {
    TowerPtr t = testutil::tower_q();
    // t^2 (t+1)
    Poly p = qpoly(t, {0, 0, 1}) * qpoly(t, {1, 1});
    auto sf = squarefree_decomp(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].first == qpoly(t, {1, 1}));
    CHECK(sf[0].second == 1);
    CHECK(sf[1].first == qpoly(t, {0, 1}));
    CHECK(sf[1].second == 2);

    // (t^2 + 9t + 9)^2, expanded first
    Poly f = qpoly(t, {9, 9, 1});
    auto sf2 = squarefree_decomp(f * f);
    REQUIRE(sf2.size() == 1);
    CHECK(sf2[0].first == f);
    CHECK(sf2[0].second == 2);
}

TEST_CASE("discriminant of the 1-(a) model decomposes as t^3 (t+1)^3 (t+2)^3") {
    const CurveSpec& s = testutil::spec51a();
    // oracle: for b2 = b4 = 0 the discriminant is 16 disc_x(x^3 + b3 x) = -64 b3^3
    Poly b3 = s.curve().b3();
    const TowerPtr& t = s.tower;
    Poly oracle = qpoly(t, {-64}) * b3 * b3 * b3;
    CHECK(s.curve().delta() == oracle);
    auto sf = squarefree_decomp(s.curve().delta());
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].second == 3);
    CHECK(sf[0].first == qpoly(t, {0, 2, 3, 1}).monic()); // t(t+1)(t+2)
}

TEST_CASE("resultants") {
    TowerPtr t = testutil::tower_q();
    BiPoly f(t), g(t);
    // x - t vs x + t -> 2t up to unit
    f.set(0, 1, FieldElem::one(t));
    f.set(1, 0, -FieldElem::one(t));
    g.set(0, 1, FieldElem::one(t));
    g.set(1, 0, FieldElem::one(t));
    Poly r = resultant_x(f, g);
    CHECK(r.degree() == 1);
    CHECK(r.eval(FieldElem::zero(t)).is_zero());

    BiPoly h(t); // x^2 - t vs x -> t up to unit
    h.set(0, 2, FieldElem::one(t));
    h.set(1, 0, -FieldElem::one(t));
    BiPoly xonly(t);
    xonly.set(0, 1, FieldElem::one(t));
    Poly r2 = resultant_x(h, xonly);
    CHECK(r2.degree() == 1);
    CHECK(r2.eval(FieldElem::zero(t)).is_zero());
}

TEST_CASE("resultant of a golden conic with the quartic is a degree-8 perfect square") {
    const CurveSpec& s = testutil::spec52();
    // conic from Q1 with r = t/sqrt6 + 1
    const TowerPtr& t = s.tower;
    FieldElem r6inv(t, Rational(1, 6));
    FieldElem r6 = FieldElem::generator(t, 1) * FieldElem::generator(t, 2); // r2*r3
    Poly r(t, 't', {FieldElem::one(t), r6 * r6inv});
    ConicCertificate cert = contact_conic(s.curve(), s.transform, s.point("Q1"), r, *s.quartic, s.place_hints);
    Poly R = resultant_x(cert.conic.poly, s.quartic->poly);
    CHECK(R.degree() == 8);
    auto sf = squarefree_decomp(R);
    for (auto& [f, e] : sf) CHECK(e % 2 == 0);
    int params = 0;
    for (auto& [f, e] : sf) params += f.degree();
    CHECK(params == 4);
}

TEST_CASE("ord_at") {
    TowerPtr t = testutil::tower_q();
    RatFunc f = RatFunc::from_poly(qpoly(t, {0, 0, 1})); // t^2
    CHECK(ord_at(f, Place::finite(FieldElem::zero(t))) == 2);
    RatFunc g(qpoly(t, {1}), qpoly(t, {1, 1})); // 1/(t+1)
    CHECK(ord_at(g, Place::finite(FieldElem(t, Rational(-1)))) == -1);
    RatFunc h = RatFunc::from_poly(qpoly(t, {0, 2, 3, 1}));
    CHECK(ord_at(h, Place::finite(FieldElem(t, Rational(-2)))) == 1);
    CHECK(ord_at(g, Place::infinity()) == 1);
    // NotInTower
    TowerPtr t2 = testutil::tower_qi();
    CHECK_THROWS_AS(ord_at(f, Place::finite(FieldElem::one(t2))), Error);
}

TEST_CASE("roots_in_tower") {
    TowerPtr t = testutil::tower_q();
    // 64 t^3 (t+1)^3 (t+2)^3
    Poly p = qpoly(t, {64});
    Poly f = qpoly(t, {0, 2, 3, 1});
    p = p * f * f * f;
    auto res = roots_in_tower(p, {});
    REQUIRE(res.roots.size() == 3);
    CHECK(res.unresolved.empty());
    for (auto& [root, mult] : res.roots) CHECK(mult == 3);

    // t^2 + 1 over Q: unresolved; over Q(i): resolved
    Poly q1 = qpoly(t, {1, 0, 1});
    auto r1 = roots_in_tower(q1, {});
    CHECK(r1.roots.empty());
    REQUIRE(r1.unresolved.size() == 1);
    CHECK(r1.unresolved[0].first == q1);
    CHECK(r1.unresolved[0].second == 1);

    TowerPtr ti = testutil::tower_qi();
    Poly q2 = Poly::from_rationals(ti, 't', {1, 0, 1});
    auto r2 = roots_in_tower(q2, {});
    CHECK(r2.roots.size() == 2);
    CHECK(r2.unresolved.empty());
}

TEST_CASE("divrem and valuation properties, randomized" * doctest::timeout(120)) {
    TowerPtr t = testutil::tower_qi();
    Rng rng;
    FieldElem zero = FieldElem::zero(t);
    for (int n = 0; n < 210; ++n) {
        Poly a = rng.poly(t, 't', 6);
        Poly b = rng.nonzero_poly(t, 't', 4);
        auto [q, r] = poly_divrem(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());

        // ord is a valuation at t = 0
        Poly f = rng.nonzero_poly(t, 't', 4);
        RatFunc rf(f, b);
        RatFunc rg(b, rng.nonzero_poly(t, 't', 3));
        Place v = Place::finite(zero);
        CHECK(ord_at(rf * rg, v) == ord_at(rf, v) + ord_at(rg, v));
        RatFunc sum = rf + rg;
        if (!sum.is_zero()) CHECK(ord_at(sum, v) >= std::min(ord_at(rf, v), ord_at(rg, v)));
    }
}

TEST_CASE("squarefree decomposition reconstructs its input, randomized") {
    TowerPtr t = testutil::tower_q();
    Rng rng;
    for (int n = 0; n < 200; ++n) {
        // build with known square structure
        Poly a = rng.nonzero_poly(t, 't', 2);
        Poly b = rng.nonzero_poly(t, 't', 2);
        Poly p = a * a * b;
        if (p.degree() < 1) continue;
        auto sf = squarefree_decomp(p);
        Poly rebuilt = Poly::constant(t, 't', p.lead());
        for (auto& [f, e] : sf)
            for (int i = 0; i < e; ++i) rebuilt = rebuilt * f;
        CHECK(rebuilt == p);
    }
}

TEST_CASE("resultant swap antisymmetry, randomized" * doctest::timeout(300)) {
    TowerPtr t = testutil::tower_qi();
    Rng rng;
    int done = 0;
    while (done < 200) {
        BiPoly f(t), g(t);
        int df = rng.small(1, 2), dg = rng.small(1, 2);
        for (int i = 0; i <= df; ++i) f.set(rng.small(0, 2), i, rng.elem(t, 3));
        for (int i = 0; i <= dg; ++i) g.set(rng.small(0, 2), i, rng.elem(t, 3));
        if (f.deg_x() < 1 || g.deg_x() < 1) continue;
        Poly r1 = resultant_x(f, g);
        Poly r2 = resultant_x(g, f);
        if ((f.deg_x() * g.deg_x()) % 2 == 1) r2 = -r2;
        CHECK(r1 == r2);
        ++done;
    }
}

TEST_CASE("roots tally equals the degree, randomized") {
    TowerPtr t = testutil::tower_qi();
    Rng rng;
    for (int n = 0; n < 200; ++n) {
        Poly p = rng.nonzero_poly(t, 't', 5);
        if (p.degree() < 1) continue;
        auto res = roots_in_tower(p, {});
        int tally = 0;
        for (auto& [root, m] : res.roots) tally += m;
        for (auto& [f, e] : res.unresolved) tally += f.degree() * e;
        CHECK(tally == p.degree());
    }
}
