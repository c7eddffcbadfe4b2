#pragma once

#include <stdexcept>
#include <string>

namespace decarec {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A denominator of the map (or of a closed-form product factor) is exactly
/// zero.  `index` is the orbit index at which the map became undefined, or
/// the block index s of the vanishing product factor, depending on the
/// throwing operation.
struct ForbiddenSetError : Error {
    long long index;
    explicit ForbiddenSetError(long long idx, const std::string& what_arg)
        : Error(what_arg), index(idx) {}
};

/// A term that must be nonzero (a factor of the window invariant) is zero.
/// `index` is the first offending term index.
struct ZeroTermError : Error {
    long long index;
    explicit ZeroTermError(long long idx, const std::string& what_arg)
        : Error(what_arg), index(idx) {}
};

/// A tabulated coefficient sequence was read past its end.
struct TableExhaustedError : Error {
    long long index;
    explicit TableExhaustedError(long long idx, const std::string& what_arg)
        : Error(what_arg), index(idx) {}
};

/// Malformed user input (rational strings, IC lists, coefficient files).
struct ParseError : Error {
    using Error::Error;
};

} // namespace decarec
