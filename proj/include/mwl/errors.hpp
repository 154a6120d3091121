#pragma once

#include <stdexcept>
#include <string>

namespace mwl {

// Machine-readable failure codes. Every user-facing error carries one.
enum class Errc {
    PinMismatch,
    MalformedRadicand,
    TowerMismatch,
    DivisionByZero,
    InvalidTower,
    NotInTower,
    DegreeBound,
    SingularModel,
    NonMinimalModel,
    NotRationalElliptic,
    OddPoleOrder,
    UnsupportedFiber,
    BadIndex,
    NotInSpan,
    NotQuarticNormalForm,
    NonIntegralSection,
    DegenerateConic,
    OddMultiplicity,
    SingularContact,
    ChartFailure,
    ComponentLine,
    NotIrreducible,
    ParseError,
    UnknownName,
    BadRequest,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace mwl
