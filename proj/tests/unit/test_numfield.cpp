#include <doctest.h>

#include "helpers.hpp"

using namespace mwl;
using testutil::Rng;

namespace {

FieldElem gen(const TowerPtr& t, const char* name) {
    return FieldElem::generator(t, t->index_of(name));
}

} // namespace

TEST_CASE("gaussian rationals") {
    TowerPtr t = testutil::tower_qi();
    FieldElem i = gen(t, "i");
    CHECK(i * i == FieldElem(t, Rational(-1)));
    // (1+i)(1-i) = 2
    FieldElem one = FieldElem::one(t);
    CHECK((one + i) * (one - i) == FieldElem(t, Rational(2)));
}

TEST_CASE("sqrt2 defining relation and inverse") {
    TowerPtr t = testutil::tower_qi_r2();
    FieldElem r2 = gen(t, "r2");
    CHECK(r2 * r2 == FieldElem(t, Rational(2)));
    // 1/(1+r2) = r2 - 1
    FieldElem one = FieldElem::one(t);
    FieldElem inv = (one + r2).inverse();
    CHECK(inv == r2 - one);
    CHECK((one + r2) * inv == one);
    CHECK(FieldElem(t, Rational(2)).inverse() == FieldElem(t, Rational(1, 2)));
}

TEST_CASE("nested radical sqrt(2-2i) squares back and matches its pin") {
    const CurveSpec& s = testutil::spec51a();
    const TowerPtr& t = s.tower;
    FieldElem i = gen(t, "i"), s22i = gen(t, "s22i");
    FieldElem rad = FieldElem(t, Rational(2)) - FieldElem(t, Rational(2)) * i;
    CHECK(s22i * s22i == rad);
    // embedding agrees with pin^2 to 30 digits
    Complex sq = s22i.embed() * s22i.embed();
    Complex want = rad.embed();
    BigFloat err = (sq - want).abs();
    BigFloat tol = BigFloat(Rational(Integer(1), Integer("1000000000000000000000000000000")));
    CHECK(err < tol);
}

TEST_CASE("tower_build rejects bad pins and malformed radicands") {
    Generator i{"i", {Rational(-1)}, Complex(BigFloat(0.0), BigFloat(1.0))};
    Generator bad_pin{"r2", {Rational(2), Rational(0)}, Complex(BigFloat(1.5), BigFloat(0.0))};
    CHECK_THROWS_AS(TowerSpec::build({i, bad_pin}), Error);
    try {
        TowerSpec::build({i, bad_pin});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PinMismatch);
    }
    // radicand referencing a generator not yet defined (wrong vector length)
    Generator fwd{"g", {Rational(1), Rational(1)}, Complex(BigFloat(1.0), BigFloat(0.0))};
    try {
        TowerSpec::build({fwd});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MalformedRadicand);
    }
}

TEST_CASE("redundant generator is caught lazily at inversion") {
    // sqrt(8) = 2 sqrt(2): the element sqrt8 - 2 sqrt2 is a nonzero vector but a zero divisor
    Generator r2{"r2",
                 {Rational(2)},
                 Complex(BigFloat::parse("1.41421356237309504880168872420969807857"), BigFloat(0.0))};
    Generator r8{"r8",
                 {Rational(8), Rational(0)},
                 Complex(BigFloat::parse("2.82842712474619009760337744841939615714"), BigFloat(0.0))};
    TowerPtr t = TowerSpec::build({r2, r8});
    FieldElem e = gen(t, "r8") - FieldElem(t, Rational(2)) * gen(t, "r2");
    CHECK(!e.is_zero());
    try {
        e.inverse();
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == Errc::InvalidTower);
    }
    CHECK_THROWS_AS(FieldElem::zero(t).inverse(), Error);
}

TEST_CASE("tower mismatch is rejected") {
    TowerPtr a = testutil::tower_qi();
    TowerPtr b = testutil::tower_qi_r2();
    CHECK_THROWS_AS(FieldElem::one(a) + FieldElem::one(b), Error);
}

TEST_CASE("embedding values") {
    TowerPtr t = testutil::tower_qi_r2();
    CHECK(gen(t, "i").embed_str(10) == "0 + 1i");
    FieldElem v = gen(t, "r2") - FieldElem::one(t);
    CHECK(v.embed_str(10) == "0.4142135624");
}

TEST_CASE("sqrt(-1-i) as a tower element squares to -1-i") {
    const CurveSpec& s = testutil::spec51a();
    const TowerPtr& t = s.tower;
    // sm1mi = s22i (1 - i)/2
    FieldElem i = gen(t, "i"), s22i = gen(t, "s22i");
    FieldElem half(t, Rational(1, 2));
    FieldElem sm1mi = s22i * (FieldElem::one(t) - i) * half;
    CHECK(sm1mi * sm1mi == -(FieldElem::one(t) + i));
    Complex sq = sm1mi.embed() * sm1mi.embed();
    Complex want = (-(FieldElem::one(t) + i)).embed();
    BigFloat tol = BigFloat(Rational(Integer(1), Integer("1000000000000000000000000000000")));
    CHECK((sq - want).abs() < tol);
}

TEST_CASE("ring axioms on random triples, 1-b tower" * doctest::timeout(120)) {
    const TowerPtr& t = testutil::spec51b().tower;
    Rng rng;
    for (int n = 0; n < 220; ++n) {
        FieldElem a = rng.elem(t), b = rng.elem(t), c = rng.elem(t);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == FieldElem::one(t));
    }
}

TEST_CASE("embedding is a homomorphism within float tolerance") {
    const TowerPtr& t = testutil::spec51a().tower;
    Rng rng;
    BigFloat e20 = BigFloat(Rational(Integer(1), Integer("100000000000000000000")));
    for (int n = 0; n < 200; ++n) {
        FieldElem a = rng.elem(t), b = rng.elem(t);
        Complex prod = (a * b).embed();
        Complex sep = a.embed() * b.embed();
        BigFloat scale = BigFloat(1.0) + prod.abs();
        CHECK((prod - sep).abs() < e20 * scale);
    }
}

TEST_CASE("equality is structural") {
    TowerPtr t = testutil::tower_qi_r2();
    FieldElem a = gen(t, "r2") * gen(t, "r2");
    CHECK(a.is_rational());
    CHECK(a.rational_part() == Rational(2));
    CHECK(a == FieldElem(t, Rational(2)));
}
