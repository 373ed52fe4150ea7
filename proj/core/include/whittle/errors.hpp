#pragma once

#include <stdexcept>
#include <string>

namespace whittle {

// A closed-form bound was requested outside the parameter region where it holds.
struct BoundInapplicableError : std::domain_error {
    using std::domain_error::domain_error;
};

// A belief trajectory never crosses the requested threshold, so an operation
// that needs a finite first crossing time cannot proceed. `step` identifies
// the position in a k-sequence at which this happened (-1 when not applicable).
struct CrossingNeverHappensError : std::domain_error {
    explicit CrossingNeverHappensError(const std::string& what, int step_index = -1)
        : std::domain_error(what), step(step_index) {}
    int step;
};

// The linear system behind a value/passive-time chain lost rank (pivot below
// the singularity threshold). Callers fall back to the belief-proportional index.
struct SolverDegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact enumeration (finite-horizon tree, joint DP) would exceed the
// configured size limits.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace whittle
