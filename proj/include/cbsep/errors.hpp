#pragma once

#include <stdexcept>
#include <string>

namespace cbsep {

/// Input text could not be parsed; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A structural claim that the library re-checks at runtime failed.  This is
/// never a caller mistake: it means two independent computations of the same
/// fact disagreed, so the result cannot be trusted.
class PropertyViolation : public std::logic_error {
public:
    explicit PropertyViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cbsep
