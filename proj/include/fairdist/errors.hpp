#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairdist {

// Malformed input: files, fraction strings, labels, flags.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a modeling assumption ("empty graph", "no edges",
// "element uncoverable: x", "empty restricted family", "too many groups",
// "size limit", ...).
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration hit the configured cap. Carries the cap and how many members
// had been produced when it tripped.
struct CapExceededError : std::runtime_error {
    std::size_t cap;
    std::size_t partial_count;
    CapExceededError(std::size_t cap_, std::size_t partial)
        : std::runtime_error("cap exceeded: " + std::to_string(partial) +
                             " members at cap " + std::to_string(cap_)),
          cap(cap_),
          partial_count(partial) {}
};

// The requested object/distribution does not exist (no perfect matching in
// the auxiliary graph, no feasible distribution under group constraints).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fairdist
