#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mwl/numfield.hpp"

namespace mwl {

// Dense univariate polynomial over a tower field, ascending degree,
// normalized so the leading coefficient is nonzero (zero poly = empty).
class Poly {
public:
    Poly() = default;
    Poly(TowerPtr tower, char var) : tower_(std::move(tower)), var_(var) {}
    Poly(TowerPtr tower, char var, std::vector<FieldElem> coeffs);

    static Poly constant(const TowerPtr& t, char var, const FieldElem& c);
    static Poly from_rationals(const TowerPtr& t, char var, const std::vector<Rational>& cs);
    static Poly variable(const TowerPtr& t, char var); // the monomial v

    const TowerPtr& tower() const { return tower_; }
    char var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<FieldElem>& coeffs() const { return c_; }
    const FieldElem& lead() const { return c_.back(); }
    FieldElem coeff(std::size_t i) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const FieldElem& c) const;
    Poly shifted(int k) const; // * var^k

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    FieldElem eval(const FieldElem& t0) const;
    Poly derivative() const;
    Poly monic() const;
    Poly with_var(char v) const;

    std::string str() const;

private:
    void normalize();
    TowerPtr tower_;
    char var_ = 't';
    std::vector<FieldElem> c_;
};

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b); // DivisionByZero
Poly poly_gcd(const Poly& a, const Poly& b);                     // monic

// Yun squarefree decomposition (char 0): p = lc * prod factor^e,
// factors monic, squarefree, pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomp(const Poly& p);

// A place of P^1: finite t0 (exact tower element) or t = infinity.
struct Place {
    std::optional<FieldElem> t0; // nullopt = infinity
    bool is_infinity() const { return !t0.has_value(); }
    static Place infinity() { return Place{}; }
    static Place finite(FieldElem v) { return Place{std::move(v)}; }
    bool operator==(const Place& o) const;
};

// Rational function, normalized: gcd(num, den) = 1, den monic.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly num, Poly den); // normalizes; DivisionByZero when den = 0
    static RatFunc from_poly(Poly p);
    static RatFunc zero(const TowerPtr& t, char var);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    char var() const { return den_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    bool has_pole_at(const FieldElem& t0) const { return den_.eval(t0).is_zero(); }
    FieldElem eval(const FieldElem& t0) const; // DivisionByZero on pole

    std::string str() const;

private:
    Poly num_, den_;
};

// order of vanishing at a place (negative = pole); NotInTower when t0 is not
// an element of the function's tower. Errors on the zero function.
int ord_at(const RatFunc& r, const Place& v);
int ord_at(const Poly& p, const FieldElem& t0);

// Hint-driven root extraction: rational-root search on Q-only polynomials,
// trial division by hints, quadratic formula when the discriminant's square
// root exists among basis monomials or hints (up to rational squares).
struct RootsResult {
    std::vector<std::pair<FieldElem, int>> roots;   // (root, multiplicity)
    std::vector<std::pair<Poly, int>> unresolved;   // (factor, multiplicity)
};
RootsResult roots_in_tower(const Poly& p, const std::vector<FieldElem>& hints);

// Bivariate polynomial in (t, x); no zero coefficients stored.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (deg_t, deg_x)

    BiPoly() = default;
    explicit BiPoly(TowerPtr tower) : tower_(std::move(tower)) {}

    const TowerPtr& tower() const { return tower_; }
    const std::map<Key, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set(int dt, int dx, FieldElem c);
    FieldElem coeff(int dt, int dx) const;

    int deg_t() const;
    int deg_x() const;
    int total_degree() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const FieldElem& c) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    static BiPoly from_poly_t(const Poly& p);
    static BiPoly from_poly_x(const Poly& p); // p's variable becomes x

    Poly coeff_of_x(int j) const;         // coefficient of x^j as Poly in t
    Poly eval_t(const FieldElem& t0) const; // Poly in x
    Poly subst_x(const Poly& xp) const;     // substitute x := xp(t)
    BiPoly divide_by_x_minus(const Poly& xp) const; // exact; throws on nonzero remainder
    BiPoly derivative_t() const;
    BiPoly derivative_x() const;
    BiPoly swap_vars() const; // (t,x) -> (x,t)

    std::string str() const;

private:
    TowerPtr tower_;
    std::map<Key, FieldElem> terms_;
};

// Sylvester resultant eliminating x, via fraction-free (Bareiss) elimination
// over K[t]. Both arguments must have positive degree in x.
Poly resultant_x(const BiPoly& f, const BiPoly& g);

} // namespace mwl
