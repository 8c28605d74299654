#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bwf {

/// Malformed textual input. `position` is the byte offset of the offending
/// character in the parsed string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A caller broke an operation's precondition (wrong context, operation
/// undefined for this kind of semigroup, family not closed, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace bwf
