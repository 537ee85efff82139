#pragma once

#include <stdexcept>
#include <string>

namespace filament {

/// Base for all library errors that carry a numerical cause.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coincident points, zero-length chords, self-intersections.
struct GeometryError : Error {
    using Error::Error;
};

/// Singular Stokeslet evaluation (x == y or x == y^r).
struct SingularPoint : Error {
    using Error::Error;
};

/// A simulated state left the admissible set.
struct GeometryViolation : Error {
    GeometryViolation(std::string invariant_name, long step_index, const std::string& what)
        : Error(what), invariant(std::move(invariant_name)), step(step_index)
    {
    }
    std::string invariant;
    long step;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace filament
