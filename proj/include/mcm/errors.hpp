#pragma once

#include <stdexcept>
#include <string>

namespace mcm {

// Shape / field mismatches in matrix arithmetic.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by fd-algebra operations that are only sound in characteristic 0.
struct UnsupportedField : std::invalid_argument {
    explicit UnsupportedField(const std::string& what) : std::invalid_argument(what) {}
};

// Top of a module does not decompose along the idempotent blocks.
struct NonSplitTop : std::runtime_error {
    explicit NonSplitTop(const std::string& what) : std::runtime_error(what) {}
};

// Minimal resolution did not terminate within the cap; means "pd > cap".
struct ResolutionCapExceeded : std::runtime_error {
    explicit ResolutionCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Base ring outside the regimes an operation supports.
struct UnsupportedBase : std::invalid_argument {
    explicit UnsupportedBase(const std::string& what) : std::invalid_argument(what) {}
};

// Input sequence fails the required exactness.
struct NotExact : std::invalid_argument {
    explicit NotExact(const std::string& what) : std::invalid_argument(what) {}
};

// Polynomial arithmetic over the local ring would exceed the degree cap.
struct DegreeCapExceeded : std::runtime_error {
    explicit DegreeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Violated operation precondition (e.g. non-torsion input where torsion is required).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed user input (CLI descriptors, JSON payloads).
struct BadInput : std::invalid_argument {
    explicit BadInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mcm
