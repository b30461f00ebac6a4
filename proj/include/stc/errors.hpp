#ifndef STC_ERRORS_HPP
#define STC_ERRORS_HPP

#include <stdexcept>
#include <utility>
#include <string>

namespace stc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Out-of-range or duplicate entries in a structured system.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed system document. Carries the location of the failure when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column, std::string field)
        : Error(what), line_(line), column_(column), field_(std::move(field)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    int column_;
    std::string field_;
};

/// The requested operation is not defined for this system (e.g. multi-input).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A documented precondition does not hold (inaccessible graph, non-elementary input).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Cycle enumeration exceeded its cap.
class EnumerationOverflow : public Error {
public:
    using Error::Error;
};

/// A structural prediction did not match the computed matrix.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain where an operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace stc

#endif  // STC_ERRORS_HPP
