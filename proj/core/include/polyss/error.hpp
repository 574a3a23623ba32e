#pragma once

#include <stdexcept>
#include <string>

namespace polyss {

/// Category of a failure. The CLI maps these onto exit codes.
enum class ErrorKind {
    field_mismatch,
    division_by_zero,
    dimension_mismatch,
    containment,
    induced_map,
    shape,
    axiom,
    parse,
    invalid_subset,
    snake_input,
    hypothesis,
    internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

} // namespace polyss
