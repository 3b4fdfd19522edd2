#pragma once

#include <stdexcept>
#include <string>

namespace ontoalign {

// Malformed input text. `position` is a byte offset when known, -1 otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, long position = -1)
        : std::runtime_error(std::move(msg)), position_(position) {}
    long position() const { return position_; }

private:
    long position_;
};

// Structurally invalid document: dangling reference, cycle, duplicate id.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad parameter value (threshold out of range, negative ratio, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The coupled similarity update produced an exactly-zero matrix.
class ZeroUpdateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ontoalign
