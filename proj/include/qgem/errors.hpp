#pragma once

#include <stdexcept>

namespace qgem {

// Invalid geometry: overlapping spheres, nonpositive gap, d <= dx, ...
struct GeometryError : std::domain_error {
    using std::domain_error::domain_error;
};

// A trajectory reached the plate surface; the design is infeasible.
struct CollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A root or threshold search found no admissible solution in its bracket.
struct NoSolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A spec struct violates one of its invariants.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A config file could not be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qgem
