// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mile {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor / matrix dimension mismatches.
struct ShapeError : Error {
    using Error::Error;
};

// Invalid configuration values, labels, ranks, task sequencing.
struct ValidationError : Error {
    using Error::Error;
};

// Corrupt, truncated, or wrong-version serialized payloads.
struct DecodeError : Error {
    using Error::Error;
};

// Unknown task ids, missing registry entries, empty prototype lists.
struct LookupError : Error {
    using Error::Error;
};

// Filesystem failures.
struct IoError : Error {
    using Error::Error;
};

} // namespace mile
