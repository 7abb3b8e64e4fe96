#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nullfil {

// Library errors carry a short machine-readable tag alongside the human
// message, so callers (and the CLI JSON mode) can dispatch without string
// matching on prose.
class error : public std::runtime_error {
public:
    error(std::string tag, const std::string& message)
        : std::runtime_error(message), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

// Syntax errors report the byte offset of the offending token.
class parse_error : public error {
public:
    parse_error(const std::string& message, std::size_t position)
        : error("parse_error", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace nullfil
