#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthoform {

// Base class for every error the library reports on bad input or failed
// preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical precondition or hypothesis does not hold for the arguments.
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

// Arguments live over different fields or ambient spaces.
class MismatchError : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration would exceed the configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t needed, std::size_t cap)
        : Error("enumeration cap exceeded: " + std::to_string(needed) + " > " +
                std::to_string(cap)),
          needed_(needed), cap_(cap) {}

    std::size_t needed() const noexcept { return needed_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t needed_;
    std::size_t cap_;
};

// Text input failed to parse. line() is 1-based, 0 when no line applies.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Two independent computations of the same quantity disagreed. Always a bug.
class InternalFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace orthoform
