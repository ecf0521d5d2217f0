#pragma once

#include <stdexcept>
#include <string>

namespace haarbvp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ResolutionCeiling : Error {
    using Error::Error;
};

struct NegativeBaseFractionalPower : Error {
    using Error::Error;
};

struct SingularPoint : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct UnsupportedBoundary : Error {
    using Error::Error;
};

struct MaxIterations : Error {
    using Error::Error;
};

struct DampingExhausted : Error {
    using Error::Error;
};

struct NonFinite : Error {
    using Error::Error;
};

struct MissingCell : Error {
    using Error::Error;
};

struct GridMismatch : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace haarbvp
