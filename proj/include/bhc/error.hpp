#pragma once

#include <stdexcept>
#include <string>

namespace bhc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer arithmetic left its checked range; results are never wrapped.
struct OverflowError : Error {
    using Error::Error;
};

// Malformed input text; positions are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

} // namespace bhc
