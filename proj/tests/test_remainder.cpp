#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "curves.hpp"
#include "filament/equilibria.hpp"
#include "filament/errors.hpp"
#include "filament/remainder.hpp"
#include "filament/spectral.hpp"
#include "filament/timestepper.hpp"

using namespace filament;
using namespace testcurves;

namespace {

double max_norm(const Curve& c)
{
    double m = 0.0;
    for (const auto& v : c)
        m = std::max(m, v.norm());
    return m;
}

double max_diff(const Curve& a, const Curve& b)
{
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        m = std::max(m, (a[j] - b[j]).norm());
    return m;
}

Curve total_velocity(const Filament& f)
{
    const auto x1 = component(f.nodes(), 0);
    const auto x2 = component(f.nodes(), 1);
    const auto l1 = linear_operator_LD(x1);
    const auto l2 = linear_operator_LD(x2);
    Curve r = remainder_assemble(f);
    for (std::size_t j = 0; j < f.size(); ++j)
        r[j] += Vec2(l1[j], l2[j]);
    return r;
}

double min_time(const Filament& f, int repeats)
{
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const Curve r = remainder_assemble(f);
        const auto t1 = std::chrono::steady_clock::now();
        CHECK(r.size() == f.size());
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

TEST_CASE("log term of the first kernel vanishes on the unit circle")
{
    const std::size_t n = 64;
    const Filament sc = semicircle(n);
    const KernelMatrices k = assemble_kernels(sc);
    for (std::size_t a = 0; a < n; a += 3)
        for (std::size_t b = 0; b < n; b += 5) {
            if (a == b)
                continue;
            const Vec2 d = sc[a] - sc[b];
            const Mat2 rest = d * d.transpose() / d.squaredNorm();
            CHECK((k.h1_at(a, b) - rest).norm() <= 1e-13);
        }
}

TEST_CASE("wall kernel vanishes on anchor rows")
{
    const std::size_t n = 64;
    InitialCondition ic;
    const KernelMatrices k = assemble_kernels(make_initial(ic, n));
    for (std::size_t l = 0; l < n; ++l) {
        CHECK(k.h3_at(0, l).norm() == 0.0);
        CHECK(k.h3_at(n - 1, l).norm() == 0.0);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            CHECK(k.h1_at(a, b).allFinite());
            CHECK(k.h2_at(a, b).allFinite());
            CHECK(k.h3_at(a, b).allFinite());
        }
}

TEST_CASE("first kernel diagonal matches the off-diagonal limit")
{
    double prev = 0.0;
    for (std::size_t n : {65, 129, 257, 513}) {
        const Filament f = perturbed_arc(n);
        const KernelMatrices k = assemble_kernels(f);
        const std::size_t j = (n - 1) / 4;
        const Mat2 limit = 0.5 * (k.h1_at(j, j + 1) + k.h1_at(j, j - 1));
        const double err = (k.h1_at(j, j) - limit).norm();
        CHECK(err <= 10.0 * f.ds());
        if (prev > 0.0)
            CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("fused assembly equals stored kernels")
{
    for (std::size_t n : {32, 97}) {
        const Filament f = random_filament(n, 4);
        const Curve a = remainder_contract(assemble_kernels(f), f);
        const Curve b = remainder_assemble(f);
        CHECK(max_diff(a, b) <= 1e-13 * (1.0 + max_norm(a)));
    }
}

TEST_CASE("remainder vanishes at the anchors")
{
    InitialCondition ic;
    for (std::size_t n : {128, 512}) {
        const Curve r = remainder_assemble(make_initial(ic, n));
        CHECK(r.front().norm() <= 1e-6);
        CHECK(r.back().norm() <= 1e-6);
    }
    const Curve r = remainder_assemble(random_filament(200, 8));
    CHECK(r.front().norm() <= 1e-6);
    CHECK(r.back().norm() <= 1e-6);
}

TEST_CASE("total velocity of circular arcs vanishes under refinement")
{
    for (double c : {-0.5, 0.0, 1.0}) {
        const double v128 = max_norm(total_velocity(equilibrium_arc(c, 128)));
        const double v512 = max_norm(total_velocity(equilibrium_arc(c, 512)));
        MESSAGE("c = " << c << " |v|_128 = " << v128 << " |v|_512 = " << v512);
        CHECK(v512 <= 5e-3);
        CHECK(v512 < v128);
    }
}

TEST_CASE("remainder is nonlinear")
{
    const std::size_t n = 128;
    const Filament f = perturbed_arc(n);
    // double the deviation from the chord so the anchors stay fixed
    Curve pts(n);
    for (std::size_t j = 0; j < n; ++j)
        pts[j] = 2.0 * f[j] - Vec2(1.0 - 2.0 * f.s(j) / pi, 0.0);
    const Filament g(pts);
    const Curve rf = remainder_assemble(f);
    const Curve rg = remainder_assemble(g);
    double diff = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        diff = std::max(diff, (rg[j] - 2.0 * rf[j]).norm());
    CHECK(diff >= 1e-2 * max_norm(rf));
}

TEST_CASE("continuous oracle vanishes at anchors and agrees with the discrete remainder")
{
    const std::size_t n = 256;
    const Filament f = perturbed_arc(n);
    const Curve oracle = remainder_continuous_oracle(f, 4);
    const Curve discrete = remainder_assemble(f);
    CHECK(oracle.front().norm() <= 1e-6);
    CHECK(oracle.back().norm() <= 1e-6);
    const double rel = max_diff(oracle, discrete) / max_norm(oracle);
    MESSAGE("relative disagreement " << rel);
    CHECK(rel <= 1e-3);
}

TEST_CASE("oracle agreement improves with oracle refinement")
{
    const std::size_t n = 64;
    const Filament f = perturbed_arc(n);
    const Curve discrete = remainder_assemble(f);
    const double e2 = max_diff(remainder_continuous_oracle(f, 2), discrete);
    const double e8 = max_diff(remainder_continuous_oracle(f, 8), discrete);
    MESSAGE("refine 2: " << e2 << " refine 8: " << e8);
    CHECK(e8 < e2);
}

TEST_CASE("wall term of the oracle carries the height prefactor")
{
    const std::size_t n = 64;
    auto wall_part = [n](double eps) {
        const Filament f = Filament::sample(n, [eps](double s) {
            return Vec2(std::cos(s) + 0.1 * std::sin(s) * std::sin(2 * s), eps * std::sin(s) * (1.0 + 0.2 * std::cos(2 * s)));
        });
        return max_norm(remainder_continuous_oracle(f, 2, oracle_r3));
    };
    const double base = wall_part(1.0);
    const double flat = wall_part(1e-8);
    CHECK(base > 0.0);
    CHECK(flat <= 1e-7 * base);
}

TEST_CASE("oracle terms sum to the full oracle")
{
    const Filament f = perturbed_arc(48);
    const Curve all = remainder_continuous_oracle(f, 2);
    const Curve a = remainder_continuous_oracle(f, 2, oracle_r1);
    const Curve b = remainder_continuous_oracle(f, 2, oracle_r2 | oracle_r3);
    for (std::size_t j = 0; j < f.size(); ++j)
        CHECK((all[j] - a[j] - b[j]).norm() <= 1e-13 * (1.0 + all[j].norm()));
}

TEST_CASE("chord fails the membership precondition")
{
    const Filament c = Filament::chord(64);
    GeometricBounds b;
    CHECK_FALSE(deltar_ratio_bound_check(c, b).passes);
    CHECK_THROWS_AS(assemble_kernels(c), GeometryError);
    CHECK_THROWS_AS(remainder_assemble(c), GeometryError);
}

TEST_CASE("assembly cost grows quadratically")
{
    const double t128 = min_time(perturbed_arc(128), 7);
    const double t512 = min_time(perturbed_arc(512), 5);
    const double slope = std::log2(t512 / t128);
    MESSAGE("log2 time ratio " << slope);
    CHECK(slope == doctest::Approx(4.0).epsilon(0.125));
}
