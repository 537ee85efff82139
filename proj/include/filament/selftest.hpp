#pragma once

#include <string>
#include <vector>

namespace filament {

/// Radical inverse of i in the given base (Halton sequence), in [0, 1).
double halton(unsigned i, unsigned base);

struct SelftestResult {
    std::string name;
    bool passed = false;
    double value = 0.0;
    double threshold = 0.0;
};

/// Invariant battery: no-slip, Stokes residual, semigroup eigenfunctions,
/// L_D kernel, endpoint vanishing, sin-equivalence, Poisson norms.
std::vector<SelftestResult> run_selftest();

}  // namespace filament
