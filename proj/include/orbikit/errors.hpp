#pragma once

#include <stdexcept>
#include <string>

namespace orbikit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands live in different number fields") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct InvalidField : Error {
    using Error::Error;
};

struct NonEuclideanRing : Error {
    using Error::Error;
};

struct NotPrincipalPath : Error {
    using Error::Error;
};

struct ModeMismatch : Error {
    ModeMismatch() : Error("cannot mix exact and numeric Moebius transformations") {}
};

struct NotUnimodular : Error {
    using Error::Error;
};

struct FixesInfinity : Error {
    FixesInfinity() : Error("transformation fixes infinity; isometric sphere undefined") {}
};

struct InvalidGraph : Error {
    using Error::Error;
};

struct NotSpherical : Error {
    using Error::Error;
};

struct DegenerateLattice : Error {
    DegenerateLattice() : Error("lattice generators are linearly dependent over R") {}
};

struct UnknownVolume : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace orbikit
