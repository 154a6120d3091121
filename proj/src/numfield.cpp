#include "mwl/numfield.hpp"

#include <algorithm>
#include <cassert>
#include <span>

namespace mwl {

namespace {

using RSpan = std::span<const Rational>;

bool span_zero(RSpan a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// out = a*b over the first k generators of t; all spans have length 2^k.
// (lo + hi*g)(lo' + hi'*g) = lo*lo' + hi*hi'*rad + (lo*hi' + hi*lo')*g,
// computed Karatsuba-style with three recursive products.
void mul_rec(const TowerSpec& t, std::size_t k, RSpan a, RSpan b, std::span<Rational> out) {
    if (k == 0) {
        out[0] = a[0] * b[0];
        return;
    }
    std::size_t h = std::size_t{1} << (k - 1);
    RSpan alo = a.first(h), ahi = a.subspan(h);
    RSpan blo = b.first(h), bhi = b.subspan(h);
    bool ahz = span_zero(ahi), bhz = span_zero(bhi);
    if (ahz && bhz) {
        mul_rec(t, k - 1, alo, blo, out.first(h));
        std::fill(out.begin() + h, out.end(), Rational(0));
        return;
    }
    std::vector<Rational> m1(h), m2(h), m3(h), sa(h), sb(h);
    mul_rec(t, k - 1, alo, blo, m1);
    mul_rec(t, k - 1, ahi, bhi, m2);
    for (std::size_t i = 0; i < h; ++i) {
        sa[i] = alo[i] + ahi[i];
        sb[i] = blo[i] + bhi[i];
    }
    mul_rec(t, k - 1, sa, sb, m3);
    // lo = m1 + m2 * radicand(g_{k-1})
    const std::vector<Rational>& rad = t.gen(k - 1).radicand;
    if (span_zero(m2)) {
        std::copy(m1.begin(), m1.end(), out.begin());
    } else {
        std::vector<Rational> m2r(h);
        mul_rec(t, k - 1, m2, RSpan(rad.data(), h), m2r);
        for (std::size_t i = 0; i < h; ++i) out[i] = m1[i] + m2r[i];
    }
    for (std::size_t i = 0; i < h; ++i) out[h + i] = m3[i] - m1[i] - m2[i];
}

void inv_rec(const TowerSpec& t, std::size_t k, RSpan a, std::span<Rational> out) {
    if (k == 0) {
        if (sgn(a[0]) == 0) fail(Errc::DivisionByZero, "inverse of zero");
        out[0] = Rational(1) / a[0];
        return;
    }
    std::size_t h = std::size_t{1} << (k - 1);
    RSpan lo = a.first(h), hi = a.subspan(h);
    if (span_zero(hi)) {
        if (span_zero(lo)) fail(Errc::DivisionByZero, "inverse of zero");
        inv_rec(t, k - 1, lo, out.first(h));
        std::fill(out.begin() + h, out.end(), Rational(0));
        return;
    }
    // norm = lo^2 - hi^2 * rad in the prefix tower
    std::vector<Rational> lo2(h), hi2(h), hr(h), n(h);
    mul_rec(t, k - 1, lo, lo, lo2);
    mul_rec(t, k - 1, hi, hi, hi2);
    const std::vector<Rational>& rad = t.gen(k - 1).radicand;
    mul_rec(t, k - 1, hi2, RSpan(rad.data(), h), hr);
    for (std::size_t i = 0; i < h; ++i) n[i] = lo2[i] - hr[i];
    if (span_zero(n))
        fail(Errc::InvalidTower,
             "conjugation norm vanished at generator '" + t.gen(k - 1).name +
                 "': its radicand is already a square in the prefix tower");
    std::vector<Rational> ninv(h), tmp(h);
    inv_rec(t, k - 1, n, ninv);
    mul_rec(t, k - 1, lo, ninv, tmp);
    std::copy(tmp.begin(), tmp.end(), out.begin());
    mul_rec(t, k - 1, hi, ninv, tmp);
    for (std::size_t i = 0; i < h; ++i) out[h + i] = -tmp[i];
}

} // namespace

TowerPtr TowerSpec::build(std::vector<Generator> gens) {
    if (gens.size() > kMaxGenerators)
        fail(Errc::MalformedRadicand, "more than 16 generators");
    for (std::size_t k = 0; k < gens.size(); ++k) {
        for (std::size_t j = 0; j < k; ++j)
            if (gens[j].name == gens[k].name)
                fail(Errc::MalformedRadicand, "duplicate generator name '" + gens[k].name + "'");
        if (gens[k].radicand.size() != (std::size_t{1} << k))
            fail(Errc::MalformedRadicand,
                 "radicand of generator '" + gens[k].name +
                     "' must have coefficients over the preceding generators only");
        if (span_zero(gens[k].radicand))
            fail(Errc::MalformedRadicand, "zero radicand for generator '" + gens[k].name + "'");
        for (auto& q : gens[k].radicand) q.canonicalize();
    }
    auto tower = TowerPtr(new TowerSpec(std::move(gens)));
    // pin consistency: pin^2 must approximate the radicand embedding
    for (std::size_t k = 0; k < tower->size(); ++k) {
        const Generator& g = tower->gen(k);
        Complex want = embed_prefix(*tower, g.radicand);
        Complex got = g.pin * g.pin;
        BigFloat err = (got - want).abs();
        BigFloat scale = BigFloat(1.0) + want.abs();
        BigFloat e20 = BigFloat(Rational(Integer(1), Integer("100000000000000000000")));
        if (!(err < e20 * scale))
            fail(Errc::PinMismatch, "pin of generator '" + g.name +
                                        "' does not square to its radicand (|pin^2 - radicand| = " +
                                        err.str(6) + ")");
    }
    return tower;
}

int TowerSpec::index_of(const std::string& name) const {
    for (std::size_t k = 0; k < gens_.size(); ++k)
        if (gens_[k].name == name) return static_cast<int>(k);
    return -1;
}

bool TowerSpec::same_as(const TowerSpec& o) const {
    if (this == &o) return true;
    if (gens_.size() != o.gens_.size()) return false;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (gens_[k].name != o.gens_[k].name) return false;
        if (gens_[k].radicand != o.gens_[k].radicand) return false;
    }
    return true;
}

Complex embed_prefix(const TowerSpec& t, const std::vector<Rational>& coeffs) {
    Complex total;
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        if (sgn(coeffs[idx]) == 0) continue;
        Complex mono(BigFloat(coeffs[idx]), BigFloat());
        for (std::size_t k = 0; (std::size_t{1} << k) <= idx; ++k)
            if (idx >> k & 1) mono = mono * t.gen(k).pin;
        total = total + mono;
    }
    return total;
}

FieldElem::FieldElem(TowerPtr tower, Rational q) : tower_(std::move(tower)) {
    q.canonicalize();
    c_.assign(tower_->dim(), Rational(0));
    c_[0] = std::move(q);
}

FieldElem::FieldElem(TowerPtr tower, std::vector<Rational> coeffs) : tower_(std::move(tower)), c_(std::move(coeffs)) {
    if (c_.size() != tower_->dim())
        fail(Errc::MalformedRadicand, "coefficient vector length does not match tower dimension");
    for (auto& q : c_) q.canonicalize(); // canonical form is the equality invariant
}

FieldElem FieldElem::generator(const TowerPtr& t, std::size_t k) {
    std::vector<Rational> c(t->dim(), Rational(0));
    c[std::size_t{1} << k] = 1;
    return FieldElem(t, std::move(c));
}

bool FieldElem::is_zero() const { return span_zero(c_); }

bool FieldElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

void FieldElem::check_same_tower(const FieldElem& o) const {
    if (!tower_ || !o.tower_ || !tower_->same_as(*o.tower_))
        fail(Errc::TowerMismatch, "elements of different towers");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_tower(o);
    FieldElem r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_tower(o);
    FieldElem r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_tower(o);
    std::vector<Rational> out(c_.size());
    mul_rec(*tower_, tower_->size(), c_, o.c_, out);
    return FieldElem(tower_, std::move(out));
}

FieldElem FieldElem::scaled_rational(const Rational& q) const {
    FieldElem r(*this);
    for (auto& c : r.c_) c *= q;
    return r;
}

FieldElem FieldElem::inverse() const {
    std::vector<Rational> out(c_.size());
    inv_rec(*tower_, tower_->size(), c_, out);
    return FieldElem(tower_, std::move(out));
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_tower(o);
    return c_ == o.c_; // structural: coefficient vectors are canonical
}

Complex FieldElem::embed() const { return embed_prefix(*tower_, c_); }

std::string FieldElem::embed_str(int digits) const {
    Complex z = embed();
    std::string re = z.re.str(digits), im = z.im.str(digits);
    if (im == "0" || im == "-0" || im == "0.0") return re;
    return re + (im[0] == '-' ? " - " + im.substr(1) : " + " + im) + "i";
}

int FieldElem::order_cmp(const FieldElem& a, const FieldElem& b) {
    if (a == b) return 0;
    Complex za = a.embed(), zb = b.embed();
    // numeric separation threshold 2^-200; below it fall back to structural order
    BigFloat eps = BigFloat(Rational(Integer(1), Integer(1) << 200));
    BigFloat dre = (za.re - zb.re).abs();
    if (!(dre < eps)) return za.re < zb.re ? -1 : 1;
    BigFloat dim = (za.im - zb.im).abs();
    if (!(dim < eps)) return za.im < zb.im ? -1 : 1;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    return 0;
}

std::string FieldElem::str() const {
    std::string out;
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
        if (sgn(c_[idx]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += rational_str(c_[idx]);
        for (std::size_t k = 0; (std::size_t{1} << k) <= idx; ++k)
            if (idx >> k & 1) out += "*" + tower_->gen(k).name;
    }
    return out.empty() ? "0" : out;
}

} // namespace mwl
