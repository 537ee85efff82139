#pragma once

#include <span>
#include <string>
#include <vector>

namespace filament {

struct HolderParams {
    double alpha = 0.5;
    double beta = 0.5;
    double gamma = 0.25;

    /// alpha in (0,1), beta in [0,1), gamma in (0, 1-alpha).
    void validate() const;
};

enum class HolderVariant {
    C0_minusbeta,  // |u|_inf + sup sin((s+t)/2)^beta |s-t|^-alpha |u(s)-u(t)|
    C1_beta,       // |u|_inf + |u'|_inf + sup sin((s+t)/2)^-beta |s-t|^-alpha |u'(s)-u'(t)|
};

/// Grid version with an exhaustive pair scan; u' from the spectral derivative.
double weighted_holder_norm(std::span<const double> u, const HolderParams& p, HolderVariant variant);

/// Only the pair-scan seminorm of `u` (no derivative taken).
double weighted_seminorm(std::span<const double> u, double alpha, double weight_exponent);

struct SmoothingResult {
    double lhs = 0.0;        // |S(t) u0|_{C^{1,alpha}_beta}
    double rhs_bound = 0.0;  // (16/t) |u0|_{C^{0,alpha}_{-beta}}
    bool passes = false;
};

/// u0 has its linear part removed first. Throws for t <= 0.
SmoothingResult semigroup_smoothing_test(std::span<const double> u0, const HolderParams& p, double t);

struct BatteryDatum {
    std::string name;
    std::vector<double> samples;
};

/// Twenty deterministic data vanishing at 0 and pi.
std::vector<BatteryDatum> smoothing_battery(std::size_t n);

struct SinEquivalence {
    double worst_ratio_low = 0.0;   // min of sin((x+y)/2) / (sin x + |x-y|)
    double worst_ratio_high = 0.0;  // max of the same ratio
    double tightest_constant = 0.0;
    bool passes = false;
};

/// Scans a samples x samples grid on [0, pi]^2 against the constant C.
SinEquivalence sin_equivalence_check(int samples, double constant);

}  // namespace filament
