// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gemmsim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand dimensions do not admit the requested operation.
struct ShapeError : Error {
    using Error::Error;
};

// A serialized buffer does not match its declared layout.
struct StructuralError : Error {
    using Error::Error;
};

// Layer geometry yields a non-positive output dimension.
struct GeometryError : Error {
    using Error::Error;
};

// Malformed input file or option value.
struct ParseError : Error {
    using Error::Error;
};

// Configuration exceeds the resource budget it was evaluated against.
struct FeasibilityError : Error {
    using Error::Error;
};

// Inconsistent caller-supplied inputs (e.g. mismatched key sets).
struct InputError : Error {
    using Error::Error;
};

} // namespace gemmsim
