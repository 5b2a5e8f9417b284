#pragma once

#include <stdexcept>

namespace cnr {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// shape/dimension/contract/parse/config -> input error (2), numeric -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct ContractError : Error {
    using Error::Error;
};
struct NumericError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

} // namespace cnr
