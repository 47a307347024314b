#ifndef KNOTSURG_ERROR_HPP
#define KNOTSURG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotsurg {

// Input lies outside the mathematical domain of an operation
// (zero polynomial where a nonzero one is required, x = 0 with negative
// exponents, d above the configured cap, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input is well formed but violates a stated precondition
// (non-coprime surgery slope, even q, d not dividing |H1|, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Polynomial text could not be read.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::invalid_argument("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace knotsurg

#endif
