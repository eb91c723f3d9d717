#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fhopf {

/// Malformed textual or JSON input. `position` is a 0-based byte offset into
/// the text being parsed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An operand lies outside the domain of an operation, e.g. a non-RBF basis
/// element passed to the diamond product.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested weight is not supported by the operation.
class WeightError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fhopf
