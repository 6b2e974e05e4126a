#pragma once

#include <stdexcept>
#include <string>

namespace mei {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor/vector dimension mismatch in a numerical kernel.
struct ShapeError : Error {
    using Error::Error;
};

// Invalid model or training configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed input file; message carries the offending line number.
struct ParseError : Error {
    using Error::Error;
};

// Numerical failure during training (non-finite loss).
struct TrainingError : Error {
    using Error::Error;
};

// Checkpoint file unreadable or incompatible.
struct CheckpointError : Error {
    using Error::Error;
};

}  // namespace mei
