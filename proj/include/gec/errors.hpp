#pragma once

#include <stdexcept>
#include <string>

namespace gec {

/// Root of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the set an operation is defined on
/// (non-regular residue, mismatched idempotent classes, ...).
class domain_error : public error {
public:
    using error::error;
};

/// A result or intermediate value does not fit in 63 bits.
class range_error : public error {
public:
    using error::error;
};

/// A linear scan would exceed the configured residue budget.
class scan_limit_error : public error {
public:
    using error::error;
};

/// An internal postcondition failed. Seeing one of these is a bug.
class invariant_violation : public error {
public:
    using error::error;
};

} // namespace gec
