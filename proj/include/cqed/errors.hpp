#pragma once

#include <stdexcept>
#include <string>

namespace cqed {

// Bad input: malformed config, violated invariant, unsupported size.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
public:
    ParseError(int line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Valid input, but a numerical procedure failed (no convergence, singular system).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cqed
