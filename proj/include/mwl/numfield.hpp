#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mwl/bigfloat.hpp"
#include "mwl/errors.hpp"
#include "mwl/rational.hpp"

namespace mwl {

class TowerSpec;
using TowerPtr = std::shared_ptr<const TowerSpec>;

// One quadratic generator g with g^2 = radicand, where the radicand lives in
// the tower spanned by the preceding generators (coefficient vector of length
// 2^k for generator index k). The pin fixes which complex square root the
// generator denotes; exact arithmetic never consults it.
struct Generator {
    std::string name;
    std::vector<Rational> radicand;
    Complex pin;
};

class TowerSpec : public std::enable_shared_from_this<TowerSpec> {
public:
    static constexpr std::size_t kMaxGenerators = 16;

    // Validates radicand shapes and pins (pin^2 must match the radicand's
    // embedding to 1e-20 relative error). Throws MalformedRadicand / PinMismatch.
    static TowerPtr build(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    std::size_t dim() const { return std::size_t{1} << gens_.size(); }
    const Generator& gen(std::size_t k) const { return gens_[k]; }
    int index_of(const std::string& name) const; // -1 when absent

    bool same_as(const TowerSpec& o) const; // pointer or structural equality

private:
    explicit TowerSpec(std::vector<Generator> gens) : gens_(std::move(gens)) {}
    std::vector<Generator> gens_;
};

// Element of a tower: dense coefficient vector over the multilinear basis
// prod g_k^{e_k}, e_k in {0,1}, indexed by the bitmask of the generator set.
class FieldElem {
public:
    FieldElem() = default; // unbound zero; usable only after binding
    FieldElem(TowerPtr tower, Rational q);
    FieldElem(TowerPtr tower, std::vector<Rational> coeffs);

    static FieldElem zero(const TowerPtr& t) { return FieldElem(t, Rational(0)); }
    static FieldElem one(const TowerPtr& t) { return FieldElem(t, Rational(1)); }
    static FieldElem generator(const TowerPtr& t, std::size_t k);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const; // only the constant coordinate may be nonzero
    const Rational& rational_part() const { return c_[0]; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem scaled_rational(const Rational& q) const; // entrywise, no tower product
    FieldElem operator-() const;
    FieldElem inverse() const; // DivisionByZero / InvalidTower
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    Complex embed() const;                   // at working precision
    std::string embed_str(int digits) const; // "re<+/-)im i" rendering

    // deterministic total order: complex-pin (re, im), structural tie-break
    static int order_cmp(const FieldElem& a, const FieldElem& b);

    std::string str() const; // debug rendering "1/2*r2*i + ..."

private:
    void check_same_tower(const FieldElem& o) const;

    TowerPtr tower_;
    std::vector<Rational> c_;
};

// embed an explicit coefficient vector over the first k generators of `t`
Complex embed_prefix(const TowerSpec& t, const std::vector<Rational>& coeffs);

} // namespace mwl
