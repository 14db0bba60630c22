#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpc {

// A configured resource cap (cover count, solver nodes, enumeration size)
// was hit. Callers must treat this as a hard failure, never a partial result.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (graph6 or edge-list). `offset` is the byte position
// of the first offending byte.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " (byte " + std::to_string(offset_) + ")"), offset(offset_) {}
};

// A stated precondition or construction hypothesis does not hold for the input
// (e.g. t below the construction threshold, graph not critical).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dpc
