#pragma once

#include <stdexcept>
#include <string>

namespace boxlab {

// p^d (or p^{2d} after a product construction) exceeded the dense bit-array cap.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched modulus or dimension between operands.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Input too small / degenerate for the requested operation.
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

// Grid resolution cannot resolve the requested construction.
struct ResolutionError : std::runtime_error {
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// Violated an explicit operation precondition (e.g. required disjointness).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Bad experiment configuration or file format.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace boxlab
