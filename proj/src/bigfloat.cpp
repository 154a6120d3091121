#include "mwl/bigfloat.hpp"

#include <cstdio>
#include <vector>

#include "mwl/errors.hpp"

namespace mwl {

BigFloat BigFloat::parse(const std::string& s) {
    BigFloat r;
    if (s.empty()) fail(Errc::ParseError, "empty decimal literal");
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        fail(Errc::ParseError, "bad decimal literal '" + s + "'");
    return r;
}

std::string BigFloat::str(int digits) const {
    if (digits < 1) digits = 1;
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

} // namespace mwl
