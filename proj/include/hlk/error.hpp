#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlk {

// Malformed diagram or matrix text. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed diagram whose crossing data cannot produce a linking number
// (odd crossing sum, loops from the same component, unknown loop id).
class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hlk
