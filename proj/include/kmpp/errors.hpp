#pragma once

#include <stdexcept>
#include <string>

namespace kmpp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller broke an API precondition (dimension mismatch, out-of-range target, ...).
struct ContractViolation : Error {
    using Error::Error;
};

/// Requested k is outside [1, n].
struct InvalidK : Error {
    using Error::Error;
};

/// All selection weights are zero: fewer distinct points than requested centers.
struct DegenerateWeights : Error {
    using Error::Error;
};

/// Dataset ingestion failed (unreadable file, ragged rows, no surviving rows, ...).
struct LoadError : Error {
    using Error::Error;
};

}  // namespace kmpp
