#ifndef SCOMP_ERRORS_HPP
#define SCOMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scomp {

// Malformed set-specification text. `position` is a 0-based offset into the
// input string pointing at the offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// The requested operation is not defined for this input (e.g. a counting
// engine applied to a set family it cannot represent).
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A resource guard tripped (enumeration ceiling).
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace scomp

#endif
