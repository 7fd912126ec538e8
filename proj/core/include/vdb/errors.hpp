#pragma once

#include <stdexcept>
#include <string>

namespace vdb {

/// Input text could not be parsed; carries the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A structurally valid request violates a domain restriction (isolated
/// vertex, vertex count out of range, loop arcs, unknown names, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vdb
