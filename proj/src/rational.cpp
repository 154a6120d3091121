#include "mwl/rational.hpp"

#include "mwl/errors.hpp"

namespace mwl {

Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(Errc::ParseError, "empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            fail(Errc::ParseError, "bad rational literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(Errc::ParseError, "bad rational literal '" + s + "'");
    if (mpz_sgn(q.get_den_mpz_t()) == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

bool integer_sqrt(const Integer& n, Integer& r) {
    if (mpz_sgn(n.get_mpz_t()) < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return true;
}

bool rational_square_root(const Rational& q, Rational& r) {
    if (sgn(q) < 0) return false;
    Integer n, d;
    if (!integer_sqrt(q.get_num(), n)) return false;
    if (!integer_sqrt(q.get_den(), d)) return false;
    r = Rational(n) / Rational(d);
    return true;
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::PinMismatch: return "PinMismatch";
        case Errc::MalformedRadicand: return "MalformedRadicand";
        case Errc::TowerMismatch: return "TowerMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::InvalidTower: return "InvalidTower";
        case Errc::NotInTower: return "NotInTower";
        case Errc::DegreeBound: return "DegreeBound";
        case Errc::SingularModel: return "SingularModel";
        case Errc::NonMinimalModel: return "NonMinimalModel";
        case Errc::NotRationalElliptic: return "NotRationalElliptic";
        case Errc::OddPoleOrder: return "OddPoleOrder";
        case Errc::UnsupportedFiber: return "UnsupportedFiber";
        case Errc::BadIndex: return "BadIndex";
        case Errc::NotInSpan: return "NotInSpan";
        case Errc::NotQuarticNormalForm: return "NotQuarticNormalForm";
        case Errc::NonIntegralSection: return "NonIntegralSection";
        case Errc::DegenerateConic: return "DegenerateConic";
        case Errc::OddMultiplicity: return "OddMultiplicity";
        case Errc::SingularContact: return "SingularContact";
        case Errc::ChartFailure: return "ChartFailure";
        case Errc::ComponentLine: return "ComponentLine";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::ParseError: return "ParseError";
        case Errc::UnknownName: return "UnknownName";
        case Errc::BadRequest: return "BadRequest";
    }
    return "Error";
}

} // namespace mwl
