#pragma once

#include <gmpxx.h>

#include <string>

namespace mwl {

// Exact rationals. mpq_class is kept canonical (gcd-reduced, positive
// denominator) by gmp as long as values are built through arithmetic;
// parse_rational canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& s); // "p/q" or "p", throws ParseError
std::string rational_str(const Rational& q);   // canonical "p/q" / "p"

inline bool is_integer(const Rational& q) { return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0; }

// floor(sqrt(n)) test: returns true and sets r when n is a perfect square >= 0
bool integer_sqrt(const Integer& n, Integer& r);
bool rational_square_root(const Rational& q, Rational& r); // r*r == q, r >= 0

} // namespace mwl
