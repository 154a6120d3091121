#pragma once

#include <random>

#include "mwl/session.hpp"

// Shared fixtures: the built-in golden specs, parsed once, plus small
// towers and random generators for property tests.
namespace testutil {

using namespace mwl;

inline const CurveSpec& spec(const char* id) {
    static std::map<std::string, CurveSpec> cache;
    auto it = cache.find(id);
    if (it == cache.end())
        it = cache.emplace(id, parse_curve_spec(builtin_spec_text(id))).first;
    return it->second;
}

inline const CurveSpec& spec51a() { return spec("5.1a"); }
inline const CurveSpec& spec51b() { return spec("5.1b"); }
inline const CurveSpec& spec52() { return spec("5.2"); }
inline const CurveSpec& spec53() { return spec("5.3"); }

inline TowerPtr tower_q() { return TowerSpec::build({}); }

inline TowerPtr tower_qi() {
    Generator i{"i", {Rational(-1)}, Complex(BigFloat(0.0), BigFloat(1.0))};
    return TowerSpec::build({i});
}

inline TowerPtr tower_qi_r2() {
    Generator i{"i", {Rational(-1)}, Complex(BigFloat(0.0), BigFloat(1.0))};
    Generator r2{"r2",
                 {Rational(2), Rational(0)},
                 Complex(BigFloat::parse("1.41421356237309504880168872420969807857"), BigFloat(0.0))};
    return TowerSpec::build({i, r2});
}

struct Rng {
    std::mt19937_64 eng{0x5eed5eedULL};
    int small(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng);
    }
    Rational rat(int bound = 6) {
        int num = small(-bound, bound);
        int den = small(1, bound);
        return Rational(num, den);
    }
    FieldElem elem(const TowerPtr& t, int bound = 6) {
        std::vector<Rational> c(t->dim());
        for (auto& q : c) q = rat(bound);
        return FieldElem(t, std::move(c));
    }
    Poly poly(const TowerPtr& t, char var, int maxdeg, int bound = 4) {
        std::vector<FieldElem> c;
        int d = small(0, maxdeg);
        for (int i = 0; i <= d; ++i) c.push_back(elem(t, bound));
        return Poly(t, var, std::move(c));
    }
    Poly nonzero_poly(const TowerPtr& t, char var, int maxdeg, int bound = 4) {
        for (;;) {
            Poly p = poly(t, var, maxdeg, bound);
            if (!p.is_zero()) return p;
        }
    }
};

} // namespace testutil
