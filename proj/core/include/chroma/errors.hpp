#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chroma {

// Input could not be decoded. `position` is a byte offset for binary-ish
// formats (graph6) and a 1-based line number for line-oriented ones
// (DIMACS, edge lists); the message says which.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An exact (exponential-time) operation was asked to run above its
// configured order cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chroma
