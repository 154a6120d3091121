#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwl/weierstrass.hpp"

namespace mwl {

enum class Kodaira { In, II, III, IV, InStar, IVStar, IIIStar, IIStar, Unclassified };

std::string kodaira_str(Kodaira k, int n); // "I2", "I0*", "III", ...

// One singular fiber. For fibers found as roots of an unresolved delta-factor
// the place is absent and `unresolved` holds the factor (typed I_n uniformly
// when coprime to c4, else Unclassified).
struct FiberReport {
    std::optional<Place> place;
    std::optional<Poly> unresolved;
    Kodaira type = Kodaira::Unclassified;
    int n = 0; // the n of I_n / I_n*
    int m_v = 0;
    int ord_delta = 0;
    int ord_c4 = 0; // -1 encodes +infinity (c4 = 0 identically)
    int ord_c6 = 0;
    std::optional<FieldElem> sing_x; // for 2-component fibers (I2, III)
    bool reducible() const { return m_v >= 2; }
};

struct GammaVector {
    std::vector<int> entries; // component index per reducible fiber, canonical order
    bool operator==(const GammaVector& o) const { return entries == o.entries; }
};

// c4/c6/delta of the model (cached at construction; re-exposed here)
void model_invariants(const CurveModel& C, Poly& c4, Poly& c6, Poly& delta);

// t = 1/s chart: b2* = s^2 b2(1/s), b3* = s^4 b3(1/s), b4* = s^6 b4(1/s).
// Polynomial exactly because deg b_i <= i (DegreeBound otherwise).
CurveModel chart_at_infinity(const CurveModel& C);

// transported point in the s-chart: (X, Y) = (s^2 x(1/s), s^3 y(1/s))
Point point_at_infinity_chart(const Point& P);

// All singular fibers: finite places found via roots_in_tower(delta, hints)
// (sorted by complex-pin (re, im)), unresolved factors, infinity last.
// Throws NonMinimalModel at a non-minimal place.
std::vector<FiberReport> classify_fibers(const CurveModel& C, const std::vector<FieldElem>& hints);

// Component met by the section at a 2-component fiber: 1 iff the section
// passes through the singular point of the Weierstrass fiber.
// UnsupportedFiber for m_v > 2 (callers may override via gamma overrides).
int component_index(const CurveModel& C, const FiberReport& report, const Point& P);

// Contribution terms from the standard height-pairing table.
Rational contribution(const FiberReport& report, int i);
Rational contribution(const FiberReport& report, int i, int j);

} // namespace mwl
