#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphdim {

/// Precondition violated by a caller-supplied argument (bad vertex id,
/// self-loop, wrong family parameter, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured work budget (clique count, search nodes, rejection
/// attempts) was exhausted before an exact answer was found.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text. `line()` is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace graphdim
