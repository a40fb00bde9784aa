#pragma once

#include <stdexcept>
#include <string>

namespace gencliff {

enum class Errc {
    MalformedRingSpec,
    NotPrime,
    RingMismatch,
    NotInvertible,
    DivisionByZero,
    ContextMismatch,
    ParseError,
    UnknownGenerator,
    NotHomogeneous,
    InconsistentForm,
    NotAField,
    BoundTooSmall,
    BoundExceeded,
    TooLarge,
    DegreeMismatch,
    WeightMismatch,
    SquareNotZero,
    InvalidInput,
};

const char* errc_name(Errc c);

/// Domain error carrying a machine-checkable code. Parse failures also carry
/// a 1-based line/column position (0 when not applicable).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code), line_(line), column_(column)
    {
    }

    Errc code() const { return code_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    Errc code_;
    int line_;
    int column_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg)
{
    throw Error(code, msg);
}

[[noreturn]] inline void fail_at(Errc code, const std::string& msg, int line, int column)
{
    throw Error(code, msg, line, column);
}

}  // namespace gencliff
