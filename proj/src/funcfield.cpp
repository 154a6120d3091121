#include "mwl/funcfield.hpp"

#include <algorithm>
#include <cassert>

namespace mwl {

// ---------------------------------------------------------------- Poly

Poly::Poly(TowerPtr tower, char var, std::vector<FieldElem> coeffs)
    : tower_(std::move(tower)), var_(var), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const TowerPtr& t, char var, const FieldElem& c) {
    return Poly(t, var, std::vector<FieldElem>{c});
}

Poly Poly::from_rationals(const TowerPtr& t, char var, const std::vector<Rational>& cs) {
    std::vector<FieldElem> v;
    v.reserve(cs.size());
    for (const auto& q : cs) v.emplace_back(t, q);
    return Poly(t, var, std::move(v));
}

Poly Poly::variable(const TowerPtr& t, char var) {
    return Poly(t, var, {FieldElem::zero(t), FieldElem::one(t)});
}

FieldElem Poly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return FieldElem::zero(tower_);
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElem> out(std::max(c_.size(), o.c_.size()), FieldElem::zero(tower_));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < c_.size()) out[i] = out[i] + c_[i];
        if (i < o.c_.size()) out[i] = out[i] + o.c_[i];
    }
    return Poly(tower_, var_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<FieldElem> out(c_);
    for (auto& e : out) e = -e;
    return Poly(tower_, var_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(tower_, var_);
    std::vector<FieldElem> out(c_.size() + o.c_.size() - 1, FieldElem::zero(tower_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out[i + j] = out[i + j] + c_[i] * o.c_[j];
        }
    }
    return Poly(tower_, var_, std::move(out));
}

Poly Poly::scaled(const FieldElem& c) const {
    std::vector<FieldElem> out(c_);
    for (auto& e : out) e = e * c;
    return Poly(tower_, var_, std::move(out));
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<FieldElem> out(c_.size() + k, FieldElem::zero(tower_));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return Poly(tower_, var_, std::move(out));
}

FieldElem Poly::eval(const FieldElem& t0) const {
    FieldElem acc = FieldElem::zero(tower_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(tower_, var_);
    std::vector<FieldElem> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        out.push_back(c_[i] * FieldElem(tower_, Rational(static_cast<long>(i))));
    return Poly(tower_, var_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

Poly Poly::with_var(char v) const {
    Poly p(*this);
    p.var_ = v;
    return p;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].str() + ")";
        if (i == 1) out += std::string("*") + var_;
        if (i > 1) out += std::string("*") + var_ + "^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly(a.tower(), a.var()), a};
    FieldElem lcinv = b.lead().inverse();
    std::vector<FieldElem> r(a.coeffs());
    std::vector<FieldElem> q(a.degree() - b.degree() + 1, FieldElem::zero(a.tower()));
    int db = b.degree();
    for (int d = static_cast<int>(r.size()) - 1 - db; d >= 0; --d) {
        FieldElem c = r[d + db] * lcinv;
        if (c.is_zero()) continue;
        q[d] = c;
        for (int i = 0; i <= db; ++i) r[d + i] = r[d + i] - c * b.coeffs()[i];
    }
    return {Poly(a.tower(), a.var(), std::move(q)), Poly(a.tower(), a.var(), std::move(r))};
}

namespace {

// positive rational c with p/c integral and entrywise-coprime; 1 for p = 0
Rational rational_content(const Poly& p) {
    Integer num_gcd(0), den_lcm(1);
    for (const auto& e : p.coeffs())
        for (const auto& q : e.coeffs()) {
            if (sgn(q) == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
    if (sgn(num_gcd) == 0) return Rational(1);
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Rational c = rational_content(p);
    if (c == 1) return p;
    Rational inv = 1 / c;
    std::vector<FieldElem> out;
    out.reserve(p.coeffs().size());
    for (const auto& e : p.coeffs()) out.push_back(e.scaled_rational(inv));
    return Poly(p.tower(), p.var(), std::move(out));
}

// pseudo-remainder with content control; scalar factors are irrelevant to gcds
Poly pseudo_rem(const Poly& a, const Poly& b) {
    Poly r = a;
    const FieldElem& d = b.lead();
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        Poly shifted = b.scaled(r.lead()).shifted(r.degree() - db);
        r = r.scaled(d) - shifted;
        r = primitive_part(r);
    }
    return r;
}

} // namespace

Poly poly_gcd(const Poly& a0, const Poly& b0) {
    Poly a = primitive_part(a0), b = primitive_part(b0);
    while (!b.is_zero()) {
        Poly r = pseudo_rem(a, b);
        a = b;
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomp(const Poly& p) {
    if (p.is_zero()) fail(Errc::DivisionByZero, "squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly P = p.monic();
    if (P.degree() < 1) return out;
    Poly dP = P.derivative();
    Poly g = poly_gcd(P, dP);
    if (g.degree() == 0) {
        out.emplace_back(P, 1);
        return out;
    }
    Poly c = poly_divrem(P, g).first;
    Poly w = poly_divrem(dP, g).first;
    int i = 1;
    while (c.degree() > 0) {
        Poly z = w - c.derivative();
        Poly y = poly_gcd(c, z);
        if (y.degree() > 0) out.emplace_back(y.monic(), i);
        c = poly_divrem(c, y).first;
        w = poly_divrem(z, y).first;
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------- Place

bool Place::operator==(const Place& o) const {
    if (is_infinity() != o.is_infinity()) return false;
    if (is_infinity()) return true;
    return *t0 == *o.t0;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly(num.tower(), num.var());
        den_ = Poly::from_rationals(num.tower(), num.var(), {Rational(1)});
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divrem(num, g).first;
        den = poly_divrem(den, g).first;
    }
    FieldElem lcinv = den.lead().inverse();
    num_ = num.scaled(lcinv);
    den_ = den.scaled(lcinv);
}

RatFunc RatFunc::from_poly(Poly p) {
    auto t = p.tower();
    char v = p.var();
    return RatFunc(std::move(p), Poly::from_rationals(t, v, {Rational(1)}));
}

RatFunc RatFunc::zero(const TowerPtr& t, char var) {
    return RatFunc(Poly(t, var), Poly::from_rationals(t, var, {Rational(1)}));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(Errc::DivisionByZero, "division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

FieldElem RatFunc::eval(const FieldElem& t0) const {
    FieldElem d = den_.eval(t0);
    if (d.is_zero()) fail(Errc::DivisionByZero, "evaluation at a pole");
    return num_.eval(t0) * d.inverse();
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

int ord_at(const Poly& p, const FieldElem& t0) {
    if (p.is_zero()) fail(Errc::DivisionByZero, "ord of the zero polynomial");
    if (!p.tower()->same_as(*t0.tower())) fail(Errc::NotInTower, "place lies outside the coefficient tower");
    Poly lin(p.tower(), p.var(), {-t0, FieldElem::one(p.tower())});
    Poly a = p;
    int n = 0;
    while (true) {
        auto [q, r] = poly_divrem(a, lin);
        if (!r.is_zero()) return n;
        a = q;
        ++n;
        if (a.is_zero()) return n; // unreachable for nonzero input
    }
}

int ord_at(const RatFunc& r, const Place& v) {
    if (r.is_zero()) fail(Errc::DivisionByZero, "ord of the zero function");
    if (v.is_infinity()) return r.den().degree() - r.num().degree();
    return ord_at(r.num(), *v.t0) - ord_at(r.den(), *v.t0);
}

// ---------------------------------------------------------------- roots

namespace {

// all positive divisors of |n|, capped; empty when the factor base is too big
std::vector<Integer> divisors_capped(Integer n, std::size_t cap) {
    std::vector<Integer> out;
    n = abs(n);
    if (sgn(n) == 0) return out;
    std::vector<std::pair<Integer, int>> fac;
    Integer m = n;
    for (Integer p(2); p * p <= m && p < 1000000; p = p + 1) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (m > 1) fac.emplace_back(m, 1); // residual treated as prime (fine for divisor listing)
    out.push_back(Integer(1));
    for (auto& [p, e] : fac) {
        std::size_t base = out.size();
        Integer pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
                if (out.size() > cap) return {};
            }
        }
    }
    return out;
}

// strip all factors (t - root) from p, returning the multiplicity
int strip_root(Poly& p, const FieldElem& root) {
    Poly lin(p.tower(), p.var(), {-root, FieldElem::one(p.tower())});
    int n = 0;
    while (p.degree() >= 1) {
        auto [q, r] = poly_divrem(p, lin);
        if (!r.is_zero()) break;
        p = q;
        ++n;
    }
    return n;
}

// square root of `d` in the tower: rational squares, basis monomials times
// rational squares, and hints (times rational squares). nullopt when absent.
std::optional<FieldElem> tower_sqrt(const FieldElem& d, const std::vector<FieldElem>& hints) {
    const TowerPtr& t = d.tower();
    if (d.is_zero()) return FieldElem::zero(t);
    if (d.is_rational()) {
        Rational r;
        if (rational_square_root(d.rational_part(), r)) return FieldElem(t, r);
    }
    std::size_t dim = t->dim();
    if (dim <= 1024) {
        for (std::size_t mask = 1; mask < dim; ++mask) {
            std::vector<Rational> mono(dim, Rational(0));
            mono[mask] = 1;
            FieldElem g(t, std::move(mono));
            FieldElem q = d * (g * g).inverse();
            if (!q.is_rational()) continue;
            Rational r;
            if (rational_square_root(q.rational_part(), r)) return g * FieldElem(t, r);
            if (rational_square_root(-q.rational_part(), r)) continue; // wrong sign, other monomials may fit
        }
    }
    for (const FieldElem& h : hints) {
        if (h.is_zero()) continue;
        FieldElem q = d * (h * h).inverse();
        if (!q.is_rational()) continue;
        Rational r;
        if (rational_square_root(q.rational_part(), r)) return h * FieldElem(t, r);
    }
    return std::nullopt;
}

} // namespace

RootsResult roots_in_tower(const Poly& p0, const std::vector<FieldElem>& hints) {
    if (p0.is_zero()) fail(Errc::DivisionByZero, "roots of the zero polynomial");
    RootsResult res;
    const TowerPtr& t = p0.tower();
    Poly p = p0.monic();

    auto note_root = [&](const FieldElem& r) {
        int m = strip_root(p, r);
        if (m > 0) res.roots.emplace_back(r, m);
        return m > 0;
    };

    // zero roots first
    if (p.degree() >= 1 && p.coeff(0).is_zero()) note_root(FieldElem::zero(t));

    // rational-root candidates when every coefficient is rational
    bool all_rational = true;
    for (const auto& c : p.coeffs()) all_rational = all_rational && c.is_rational();
    if (all_rational && p.degree() >= 1) {
        Integer lcmden(1);
        for (const auto& c : p.coeffs())
            mpz_lcm(lcmden.get_mpz_t(), lcmden.get_mpz_t(), c.rational_part().get_den_mpz_t());
        std::vector<Integer> zc;
        for (const auto& c : p.coeffs()) {
            Rational q = c.rational_part() * Rational(lcmden);
            zc.push_back(q.get_num());
        }
        auto ps = divisors_capped(zc.front(), 2048);
        auto qs = divisors_capped(zc.back(), 2048);
        for (const auto& pn : ps)
            for (const auto& qn : qs) {
                Rational cand(pn, qn);
                cand.canonicalize();
                for (int s : {1, -1}) {
                    FieldElem r(t, s > 0 ? cand : -cand);
                    if (p.degree() >= 1 && p.eval(r).is_zero()) note_root(r);
                }
            }
    }

    // hint roots
    for (const auto& h : hints)
        if (p.degree() >= 1 && p.eval(h).is_zero()) note_root(h);

    // leftovers by squarefree pieces; quadratic factors get the quadratic formula
    if (p.degree() >= 1) {
        for (auto& [f, e] : squarefree_decomp(p)) {
            if (f.degree() == 2) {
                FieldElem b = f.coeff(1), c = f.coeff(0);
                FieldElem disc = b * b - FieldElem(t, Rational(4)) * c;
                if (auto s = tower_sqrt(disc, hints)) {
                    FieldElem half = FieldElem(t, Rational(1, 2));
                    FieldElem r1 = (-b + *s) * half, r2 = (-b - *s) * half;
                    res.roots.emplace_back(r1, e);
                    if (r1 != r2) res.roots.emplace_back(r2, e);
                    continue;
                }
            }
            res.unresolved.emplace_back(f, e);
        }
    }
    return res;
}

// ---------------------------------------------------------------- BiPoly

void BiPoly::set(int dt, int dx, FieldElem c) {
    if (c.is_zero())
        terms_.erase({dt, dx});
    else
        terms_[{dt, dx}] = std::move(c);
}

FieldElem BiPoly::coeff(int dt, int dx) const {
    auto it = terms_.find({dt, dx});
    if (it == terms_.end()) return FieldElem::zero(tower_);
    return it->second;
}

int BiPoly::deg_t() const {
    int d = -1;
    for (auto& [k, v] : terms_) d = std::max(d, k.first);
    return d;
}
int BiPoly::deg_x() const {
    int d = -1;
    for (auto& [k, v] : terms_) d = std::max(d, k.second);
    return d;
}
int BiPoly::total_degree() const {
    int d = -1;
    for (auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out(*this);
    for (auto& [k, v] : o.terms_) {
        auto it = out.terms_.find(k);
        if (it == out.terms_.end())
            out.terms_[k] = v;
        else {
            it->second = it->second + v;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + o.scaled(FieldElem(tower_, Rational(-1))); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out(tower_);
    for (auto& [ka, va] : terms_)
        for (auto& [kb, vb] : o.terms_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            FieldElem p = va * vb;
            auto it = out.terms_.find(k);
            if (it == out.terms_.end()) {
                if (!p.is_zero()) out.terms_[k] = p;
            } else {
                it->second = it->second + p;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

BiPoly BiPoly::scaled(const FieldElem& c) const {
    BiPoly out(tower_);
    if (c.is_zero()) return out;
    for (auto& [k, v] : terms_) out.terms_[k] = v * c;
    return out;
}

BiPoly BiPoly::from_poly_t(const Poly& p) {
    BiPoly out(p.tower());
    for (int i = 0; i <= p.degree(); ++i) out.set(i, 0, p.coeff(i));
    return out;
}

BiPoly BiPoly::from_poly_x(const Poly& p) {
    BiPoly out(p.tower());
    for (int i = 0; i <= p.degree(); ++i) out.set(0, i, p.coeff(i));
    return out;
}

Poly BiPoly::coeff_of_x(int j) const {
    std::vector<FieldElem> out;
    for (auto& [k, v] : terms_) {
        if (k.second != j) continue;
        if (static_cast<int>(out.size()) <= k.first) out.resize(k.first + 1, FieldElem::zero(tower_));
        out[k.first] = v;
    }
    return Poly(tower_, 't', std::move(out));
}

Poly BiPoly::eval_t(const FieldElem& t0) const {
    std::vector<FieldElem> out;
    for (auto& [k, v] : terms_) {
        if (static_cast<int>(out.size()) <= k.second) out.resize(k.second + 1, FieldElem::zero(tower_));
        FieldElem tp = FieldElem::one(tower_);
        for (int i = 0; i < k.first; ++i) tp = tp * t0;
        out[k.second] = out[k.second] + v * tp;
    }
    return Poly(tower_, 'x', std::move(out));
}

Poly BiPoly::subst_x(const Poly& xp) const {
    Poly acc(tower_, 't');
    for (int j = deg_x(); j >= 0; --j) acc = acc * xp + coeff_of_x(j);
    return acc;
}

BiPoly BiPoly::divide_by_x_minus(const Poly& xp) const {
    // synthetic division by (x - xp(t)) in K[t][x]
    int dx = deg_x();
    if (dx < 1) fail(Errc::DivisionByZero, "bivariate division needs positive x-degree");
    std::vector<Poly> q(dx);
    Poly carry = coeff_of_x(dx);
    for (int j = dx - 1; j >= 0; --j) {
        q[j] = carry;
        carry = coeff_of_x(j) + carry * xp;
    }
    if (!carry.is_zero()) fail(Errc::DegenerateConic, "factorization by (x - x_P) is not exact");
    BiPoly out(tower_);
    for (int j = 0; j < dx; ++j)
        for (int i = 0; i <= q[j].degree(); ++i) out.set(i, j, q[j].coeff(i));
    return out;
}

BiPoly BiPoly::derivative_t() const {
    BiPoly out(tower_);
    for (auto& [k, v] : terms_)
        if (k.first > 0) out.set(k.first - 1, k.second, v * FieldElem(tower_, Rational(k.first)));
    return out;
}

BiPoly BiPoly::derivative_x() const {
    BiPoly out(tower_);
    for (auto& [k, v] : terms_)
        if (k.second > 0) out.set(k.first, k.second - 1, v * FieldElem(tower_, Rational(k.second)));
    return out;
}

BiPoly BiPoly::swap_vars() const {
    BiPoly out(tower_);
    for (auto& [k, v] : terms_) out.set(k.second, k.first, v);
    return out;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [k, v] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + v.str() + ")";
        if (k.first) out += "*t^" + std::to_string(k.first);
        if (k.second) out += "*x^" + std::to_string(k.second);
    }
    return out;
}

Poly resultant_x(const BiPoly& f, const BiPoly& g) {
    int m = f.deg_x(), n = g.deg_x();
    if (m <= 0 || n <= 0) fail(Errc::BadRequest, "resultant needs positive x-degrees");
    const TowerPtr& tw = f.tower();
    int N = m + n;
    std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N, Poly(tw, 't')));
    std::vector<Poly> fc(m + 1), gc(n + 1);
    for (int j = 0; j <= m; ++j) fc[j] = f.coeff_of_x(j);
    for (int j = 0; j <= n; ++j) gc[j] = g.coeff_of_x(j);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = fc[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = gc[n - j];

    // Bareiss fraction-free elimination
    Poly prev = Poly::from_rationals(tw, 't', {Rational(1)});
    int sign = 1;
    for (int k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero()) { piv = r; break; }
            if (piv < 0) return Poly(tw, 't'); // resultant vanishes identically
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                Poly a = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto [q, r] = poly_divrem(a, prev);
                assert(r.is_zero());
                M[i][j] = q;
            }
            M[i][k] = Poly(tw, 't');
        }
        prev = M[k][k];
    }
    Poly res = M[N - 1][N - 1];
    if (sign < 0) res = -res;
    return res;
}

} // namespace mwl
