#ifndef PADICLAB_ERRORS_HPP
#define PADICLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padiclab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Precondition violation (bad argument, unsupported parameter range).
struct DomainError : Error {
    using Error::Error;
};

/// A value is not invertible modulo p^K (it is divisible by p).
struct NotInvertible : Error {
    using Error::Error;
};

/// A p-adic result would carry no significant digits, or a congruence
/// cannot be decided at the available working precision.
struct InsufficientPrecision : Error {
    using Error::Error;
};

/// Bernoulli-number computation hit an index m with (p-1) | m, where the
/// von Staudt-Clausen pole makes B_m non p-integral.
struct IrregularIndex : Error {
    using Error::Error;
};

/// Syntax error with a position (byte offset plus 1-based line/column).
struct ParseError : Error {
    std::size_t offset;
    int line;
    int column;

    ParseError(const std::string& msg, std::size_t off, int ln, int col)
        : Error(msg + " at line " + std::to_string(ln) + ", column " +
                std::to_string(col)),
          offset(off), line(ln), column(col) {}
};

} // namespace padiclab

#endif
