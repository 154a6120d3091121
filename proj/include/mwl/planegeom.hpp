#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwl/weierstrass.hpp"

namespace mwl {

// Affine plane curve in the chart (t, x); the projective closure is implied.
struct PlaneCurve {
    BiPoly poly;
    int degree = 0; // total degree
    static PlaneCurve make(BiPoly p);
};

// Plane <-> Weierstrass coordinates: (t, x, y) <-> (t, X = c x, Y = c y),
// where c is the (constant) leading x-coefficient of the quartic.
struct ModelTransform {
    FieldElem c;
    BiPoly weier_to_plane(const BiPoly& f) const; // substitute X := c * x_plane
};

std::pair<CurveModel, ModelTransform> weierstrass_from_quartic(const PlaneCurve& q);

// Plane image of an integral section: the curve c*x - x_P(t) = 0
// (line when deg x_P <= 1, conic candidate when deg x_P = 2).
enum class SectionImageKind { Line, ConicCandidate };
struct SectionImage {
    PlaneCurve curve;
    SectionImageKind kind;
};
SectionImage section_image(const ModelTransform& tr, const Point& P);

// projective chart used by contact certification:
// [T, X, Z] = [T', Z' - alpha T' - beta X', X']  (identity when absent)
struct Chart {
    Rational alpha, beta;
    bool identity = true;
};

struct ContactProof {
    Chart chart;
    Poly resultant;                            // R(t') in the chart
    std::vector<std::pair<Poly, int>> decomposition; // squarefree, all even
    int contact_count = 0;                     // distinct contact parameters
    std::vector<std::pair<FieldElem, FieldElem>> checked_singular_points;
};

// Certificate for the conic built from a point and a slope polynomial:
// f_T - l_P^2 = (x - x_P) g with l_P = r (x - x_P) + y_P, deg g = 2, g irreducible.
struct ConicCertificate {
    BiPoly conic_weier;   // g in Weierstrass coordinates
    PlaneCurve conic;     // g mapped to plane coordinates
    Point point;
    Poly r;
    ContactProof contact;
    std::string bisection_sign; // fixed convention: pullback component with s(C+) = -s_P
};

ConicCertificate contact_conic(const CurveModel& C, const ModelTransform& tr, const Point& P,
                               const Poly& r, const PlaneCurve& quartic,
                               const std::vector<FieldElem>& hints);

// Even-multiplicity contact test of an arbitrary curve against a reduced
// quartic. Throws OddMultiplicity / SingularContact / ChartFailure.
ContactProof verify_contact(const PlaneCurve& conic, const PlaneCurve& quartic,
                            const std::vector<FieldElem>& hints);

enum class TangencyKind { Transversal, Tangent, Inflectional };
struct Tangency {
    TangencyKind kind;
    std::optional<FieldElem> contact_t; // double/triple root when linear over the tower
    std::vector<std::pair<Poly, int>> pattern;
};
Tangency tangency_classify(const PlaneCurve& line, const PlaneCurve& cubic,
                           const std::vector<FieldElem>& hints);

enum class CubicKind { Smooth, Nodal, Other };
struct CubicAnalysis {
    CubicKind kind;
    std::optional<std::pair<FieldElem, FieldElem>> node;
};
CubicAnalysis cubic_analysis(const PlaneCurve& cubic, const std::vector<FieldElem>& hints);

struct ClauseResult {
    std::string clause;
    bool pass;
    std::string detail;
};
struct CombinatoricsReport {
    std::string kind;
    std::vector<ClauseResult> clauses;
    bool all_pass() const;
};

// kinds: "1a" / "1b": curves = cubic, line, 3 lines
//        "2":         curves = cubic, line, 1 line, 1 conic
//        "3a" / "3b": curves = cubic, line, 3 conics
CombinatoricsReport verify_combinatorics(const std::string& kind,
                                         const std::vector<PlaneCurve>& curves,
                                         const std::vector<FieldElem>& hints);

} // namespace mwl
