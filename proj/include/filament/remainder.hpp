#pragma once

#include <vector>

#include "filament/geometry.hpp"
#include "filament/vec.hpp"

namespace filament {

/// Discrete interaction kernels; entry (k, l) is the 2x2 block acting on the
/// tension at s_l for the velocity at s_k. The full kernel is
/// (h1 + h2 + h3) / (4 pi).
struct KernelMatrices {
    std::size_t n = 0;
    std::vector<Mat2> h1, h2, h3;

    const Mat2& h1_at(std::size_t k, std::size_t l) const { return h1[k * n + l]; }
    const Mat2& h2_at(std::size_t k, std::size_t l) const { return h2[k * n + l]; }
    const Mat2& h3_at(std::size_t k, std::size_t l) const { return h3[k * n + l]; }
    Mat2 total(std::size_t k, std::size_t l) const
    {
        return (h1_at(k, l) + h2_at(k, l) + h3_at(k, l)) / (4.0 * pi);
    }
};

/// Throws GeometryError on self-intersection (X_k == X_l, k != l) or on a
/// degenerate reflected pair (X_k == R X_l away from the anchor corners).
KernelMatrices assemble_kernels(const Filament& f);

/// R_k = sum_l w_l K(k, l) (D_h^2 X)_l with trapezoid weights.
Curve remainder_contract(const KernelMatrices& kernels, const Filament& f);

/// Same result as assemble_kernels + remainder_contract without storing the
/// kernels.
Curve remainder_assemble(const Filament& f);

/// Selects the terms of the continuous remainder summed by the oracle.
enum OracleTerms : unsigned { oracle_r1 = 1u, oracle_r2 = 2u, oracle_r3 = 4u, oracle_all = 7u };

/// Quadrature of the continuous remainder on a grid refined spectrally by
/// `refine`, sampled back at the N original nodes.
Curve remainder_continuous_oracle(const Filament& f, int refine, unsigned terms = oracle_all);

}  // namespace filament
