#pragma once

#include <stdexcept>
#include <string>

namespace superber {

/* Base class for all domain errors raised by the library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Zero body, singular block, or otherwise no inverse exists. */
struct NonInvertibleError : Error {
    using Error::Error;
};

/* Inhomogeneous element where a parity was required, or a parameter of
   the wrong parity. */
struct ParityError : Error {
    using Error::Error;
};

/* Generator-count, shape, length or dimension mismatch between operands. */
struct MismatchError : Error {
    using Error::Error;
};

/* The two Berezinian block formulas disagreed under checked mode. */
struct FormulaMismatchError : Error {
    using Error::Error;
};

/* e_T^2 turned out not to be proportional to e_T. */
struct NotProportionalError : Error {
    using Error::Error;
};

/* A tensor component lies outside the rational span of the basis. */
struct SpanViolationError : Error {
    using Error::Error;
};

/* The supplied basis is linearly dependent over the rationals. */
struct DependentBasisError : Error {
    using Error::Error;
};

/* A duality pairing that must be nonzero evaluated to zero. */
struct ZeroPairingError : Error {
    using Error::Error;
};

/* Malformed input file or text form. */
struct ParseError : Error {
    using Error::Error;
};

} // namespace superber
