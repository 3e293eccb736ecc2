#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlie {

// Precondition violations of library operations (alphabet mismatch,
// words ending in b0 where forbidden, inputs outside Q<Dbi>, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : DomainError {
    ParseError(const std::string& msg, std::size_t position)
        : DomainError(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct ResourceLimitError : DomainError {
    using DomainError::DomainError;
};

}  // namespace qlie
