#pragma once

#include <mpfr.h>

#include <string>

#include "mwl/rational.hpp"

namespace mwl {

// Thin RAII wrapper over mpfr at a fixed working precision. Only what the
// pin checks and embeddings need: field ops, abs, comparisons, decimal I/O.
class BigFloat {
public:
    static constexpr mpfr_prec_t kPrec = 256;

    BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    explicit BigFloat(double d) : BigFloat() { mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit BigFloat(const Rational& q) : BigFloat() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat parse(const std::string& s); // decimal string, throws ParseError

    BigFloat operator+(const BigFloat& o) const { BigFloat r; mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator-(const BigFloat& o) const { BigFloat r; mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator*(const BigFloat& o) const { BigFloat r; mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator/(const BigFloat& o) const { BigFloat r; mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator-() const { BigFloat r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    BigFloat abs() const { BigFloat r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sqrt_nonneg() const { BigFloat r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool is_zero() const { return mpfr_zero_p(v_); }

    // shortest-ish decimal with the given significant digits
    std::string str(int digits) const;

private:
    mpfr_t v_;
};

struct Complex {
    BigFloat re, im;

    Complex() = default;
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigFloat abs() const { return (re * re + im * im).sqrt_nonneg(); }
};

} // namespace mwl
