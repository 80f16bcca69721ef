#pragma once

#include <stdexcept>
#include <string>

namespace xorgens {

// Errors carry a distinct type per failure class so the CLI can map them
// to distinct exit codes.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (w, n) or n not present in the shipped tables.
struct UnlistedError : Error {
    using Error::Error;
};

// Shipped or user-supplied data failed validation (factor product mismatch,
// composite listed as prime, malformed factor file).
struct IntegrityError : Error {
    using Error::Error;
};

// Argument outside an operation's contract (zero modulus, non-divisor, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// A verification run produced a value that contradicts the stored table.
struct VerificationError : Error {
    using Error::Error;
};

}  // namespace xorgens
