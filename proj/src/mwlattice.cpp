#include "mwl/mwlattice.hpp"

namespace mwl {

HeightContext::HeightContext(CurveModel curve, std::vector<FieldElem> place_hints,
                             std::vector<GammaOverride> overrides)
    : curve_(std::move(curve)), overrides_(std::move(overrides)) {
    fibers_ = classify_fibers(curve_, place_hints);
    for (const auto& f : fibers_) {
        int weight = f.unresolved ? f.unresolved->degree() : 1;
        sum_ord_delta_ += f.ord_delta * weight;
    }
    if (fibers_.empty())
        fail(Errc::NotRationalElliptic, "no singular fibers: not an elliptic fibration in scope");
    if (sum_ord_delta_ != 12)
        fail(Errc::NotRationalElliptic,
             "sum of ord delta is " + std::to_string(sum_ord_delta_) +
                 ", expected 12 (chi = 1 rational elliptic surface)");
}

int HeightContext::index_at(const FiberReport& f, const Point& P) const {
    for (const auto& ov : overrides_) {
        if (!f.place || !(ov.place == *f.place)) continue;
        if (ov.point == P) return ov.index;
    }
    return component_index(curve_, f, P);
}

GammaVector gamma_vector(const HeightContext& ctx, const Point& P) {
    GammaVector g;
    for (const auto& f : ctx.fibers())
        if (f.reducible()) g.entries.push_back(ctx.index_at(f, P));
    return g;
}

int intersect_zero(const HeightContext& ctx, const Point& P) {
    if (P.is_zero()) fail(Errc::BadRequest, "(P.O) is defined for affine sections only");
    const RatFunc& x = P.x();
    // every local pole order of x is 2 (P.O)_v on a Weierstrass model; odd
    // orders cannot come from a point on the curve
    for (const auto& [f, e] : squarefree_decomp(x.den()))
        if (e % 2 != 0)
            fail(Errc::OddPoleOrder, "odd pole order of x at a finite place; input is not on the curve");
    int finite = x.den().degree();
    int infinite = std::max(0, x.num().degree() - x.den().degree() - 2);
    if (infinite % 2 != 0)
        fail(Errc::OddPoleOrder, "odd pole order of x at infinity; input is not on the curve");
    return (finite + infinite) / 2;
}

Rational height(const HeightContext& ctx, const Point& P) {
    if (P.is_zero()) return Rational(0);
    Rational h = Rational(2) * ctx.chi() + Rational(2 * intersect_zero(ctx, P));
    for (const auto& f : ctx.fibers()) {
        if (!f.reducible()) continue;
        int idx = ctx.index_at(f, P);
        if (idx != 0) h -= contribution(f, idx);
    }
    return h;
}

Rational height_pair(const HeightContext& ctx, const Point& P, const Point& Q) {
    Rational hpq = height(ctx, ec_add(ctx.curve(), P, Q));
    return (hpq - height(ctx, P) - height(ctx, Q)) / 2;
}

GramMatrix gram(const HeightContext& ctx, const std::vector<Point>& basis) {
    GramMatrix g;
    g.basis = basis;
    std::size_t n = basis.size();
    g.entries.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        g.entries[i][i] = height(ctx, basis[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            g.entries[i][j] = g.entries[j][i] = height_pair(ctx, basis[i], basis[j]);
    }
    return g;
}

Decomposition decompose(const HeightContext& ctx, const std::vector<Point>& basis,
                        const GramMatrix& gm, const Point& P) {
    std::size_t n = basis.size();
    // rhs_i = <P, basis_i>
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = height_pair(ctx, P, basis[i]);

    // exact Gaussian elimination on a copy of the Gram matrix
    std::vector<std::vector<Rational>> A(gm.entries);
    for (std::size_t i = 0; i < n; ++i) A[i].push_back(rhs[i]);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(A[piv][col]) == 0) ++piv;
        if (piv == n) fail(Errc::NotInSpan, "gram matrix is singular");
        std::swap(A[piv], A[col]);
        Rational inv = Rational(1) / A[col][col];
        for (auto& v : A[col]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(A[r][col]) == 0) continue;
            Rational f = A[r][col];
            for (std::size_t c = col; c <= n; ++c) A[r][c] -= f * A[col][c];
        }
    }
    Decomposition d;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& c = A[i][n];
        if (!is_integer(c))
            fail(Errc::NotInSpan, "non-integral coefficient " + rational_str(c) + " on basis element " +
                                      std::to_string(i));
        d.coeffs.push_back(c.get_num());
    }
    Point rest = P;
    for (std::size_t i = 0; i < n; ++i) {
        if (!d.coeffs[i].fits_slong_p()) fail(Errc::NotInSpan, "decomposition coefficient overflow");
        rest = ec_sub(ctx.curve(), rest, ec_mul(ctx.curve(), d.coeffs[i].get_si(), basis[i]));
    }
    if (!rest.is_zero()) {
        auto ord = torsion_order(ctx.curve(), rest, 12);
        if (!ord) fail(Errc::NotInSpan, "residue after projection is not torsion");
    }
    d.torsion_part = rest;
    return d;
}

} // namespace mwl
