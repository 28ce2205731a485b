#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spheresample {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (empty input, counts out of range...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed input document. offset() is the byte position of the failure
// when it is known, npos otherwise.
class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ParseError(const std::string& what, std::size_t offset)
        : Error(offset == npos ? what : what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Geometry that violates ElementShape invariants: self-intersections,
// holes outside any outer loop, zero area.
class ShapeInvalidError : public Error {
public:
    using Error::Error;
};

// Geometry that is valid but cannot be sampled (collinear boundary...).
class DegenerateShapeError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Point generation gave up (e.g. a sliver shape the interior sampler cannot hit).
class GenerationError : public Error {
public:
    using Error::Error;
};

} // namespace spheresample
