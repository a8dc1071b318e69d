#pragma once

#include <stdexcept>
#include <string>

namespace algpos {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root finder ran out of its iteration budget. Callers widen the tolerance
// or reject the matrix.
struct RootFindingFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simplex exceeded its pivot budget. Unreachable with Bland's rule; kept as
// a defensive signal.
struct LpNumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateScale : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TemplateMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A constructed recipe polynomial failed its positivity re-check; treated as
// a table transcription bug and surfaced with the offending values.
struct RecipeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No table template matches an irreducible 3x3 pattern: table coverage bug.
struct TableMiss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace algpos
