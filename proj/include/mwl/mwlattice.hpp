#pragma once

#include <vector>

#include "mwl/fibers.hpp"

namespace mwl {

// Manual component-index override for one (point, fiber) pair; needed only
// when a section meets a fiber with m_v > 2 (I0*, I4, ...).
struct GammaOverride {
    Point point;
    Place place;
    int index = 0;
};

// Curve + classified fibers + overrides. chi = (sum ord delta)/12 is required
// to be exactly 1 (rational elliptic surface); NotRationalElliptic otherwise.
class HeightContext {
public:
    HeightContext(CurveModel curve, std::vector<FieldElem> place_hints,
                  std::vector<GammaOverride> overrides = {});

    const CurveModel& curve() const { return curve_; }
    const std::vector<FiberReport>& fibers() const { return fibers_; }
    int chi() const { return 1; }
    int sum_ord_delta() const { return sum_ord_delta_; }

    int index_at(const FiberReport& f, const Point& P) const; // override-aware

private:
    CurveModel curve_;
    std::vector<FiberReport> fibers_;
    std::vector<GammaOverride> overrides_;
    int sum_ord_delta_ = 0;
};

// gamma vector of P over the reducible fibers, canonical order
GammaVector gamma_vector(const HeightContext& ctx, const Point& P);

// (P.O): half the total pole order of x_P (all pole orders must be even;
// OddPoleOrder otherwise). Rejects P = O.
int intersect_zero(const HeightContext& ctx, const Point& P);

// h(P) = 2 chi + 2 (P.O) - sum_v contr_v(P); exact
Rational height(const HeightContext& ctx, const Point& P);

// polarization: <P,Q> = (h(P+Q) - h(P) - h(Q))/2
Rational height_pair(const HeightContext& ctx, const Point& P, const Point& Q);

struct GramMatrix {
    std::vector<Point> basis;
    std::vector<std::vector<Rational>> entries;
};
GramMatrix gram(const HeightContext& ctx, const std::vector<Point>& basis);

struct Decomposition {
    std::vector<Integer> coeffs;
    Point torsion_part;
};

// Solve gram * c = (<P, basis_i>) over Q; c must be integral and
// P - sum c_i basis_i must be torsion (order <= 12). NotInSpan otherwise.
Decomposition decompose(const HeightContext& ctx, const std::vector<Point>& basis,
                        const GramMatrix& gram, const Point& P);

} // namespace mwl
