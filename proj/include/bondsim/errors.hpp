#pragma once

#include <stdexcept>
#include <string>

namespace bondsim {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter or configuration value violates a model invariant.
// The message names the offending field and the rule.
struct ValidationError : Error {
    using Error::Error;
};

// A config file failed to parse; the message carries file/line context.
struct ConfigError : Error {
    using Error::Error;
};

// A numerical method failed to converge or produced an unusable result.
struct NumericalError : Error {
    using Error::Error;
};

// Evaluation requested at or beyond a pole of a model function.
struct SingularityError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace bondsim
