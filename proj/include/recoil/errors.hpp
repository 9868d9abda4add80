#pragma once

#include <stdexcept>

namespace recoil {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid physical or configuration input (bad species data, non-unit axis,
// detuning below the weak-coupling floor, singular separation, ...).
struct ValidationError : Error {
    using Error::Error;
};

// File access or parse failure.
struct IoError : Error {
    using Error::Error;
};

// A numerical cross-check that must hold does not.
struct VerificationError : Error {
    using Error::Error;
};

} // namespace recoil
