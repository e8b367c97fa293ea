#pragma once

#include <stdexcept>
#include <string>

namespace newton {

// Thrown when an input violates a documented precondition (exit code 3 in the CLI).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two independent computation paths disagree (exit code 4 in the CLI).
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the expression parser; carries the byte offset of the failure.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset(offset) {}
    std::size_t offset;
};

}  // namespace newton
