#include <doctest.h>

#include <cmath>
#include <random>

#include "filament/errors.hpp"
#include "filament/stokeslet.hpp"

using namespace filament;

namespace {

struct Triple {
    Vec2 x, y, f;
};

// x and y in the open upper half-plane, separated from each other and the wall
std::vector<Triple> random_triples(unsigned seed, int count)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> u1(-2.0, 2.0), u2(0.2, 2.0), uf(-1.0, 1.0);
    std::vector<Triple> out;
    while (static_cast<int>(out.size()) < count) {
        Triple t{Vec2(u1(gen), u2(gen)), Vec2(u1(gen), u2(gen)), Vec2(uf(gen), uf(gen))};
        if ((t.x - t.y).norm() > 0.2)
            out.push_back(t);
    }
    return out;
}

Mat2 rotation(double phi)
{
    Mat2 r;
    r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return r;
}

}  // namespace

TEST_CASE("free Stokeslet hand values")
{
    const Vec2 u = stokeslet_free(Vec2(1.0, 0.0), Vec2(0.0, 0.0), Vec2(1.0, 0.0));
    CHECK(u.x() == doctest::Approx(1.0 / (4 * pi)).epsilon(1e-15));
    CHECK(u.y() == 0.0);
    CHECK(stokeslet_free(Vec2(0.3, 0.7), Vec2(-1.0, 2.0), Vec2(0.0, 0.0)).norm() == 0.0);
    CHECK_THROWS_AS(stokeslet_free(Vec2(0.3, 0.7), Vec2(0.3, 0.7), Vec2(1.0, 0.0)), SingularPoint);
}

TEST_CASE("free Stokeslet rotation equivariance")
{
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> ang(0.0, 2 * pi), u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const Vec2 d(u(gen), u(gen)), f(u(gen), u(gen));
        const Mat2 r = rotation(ang(gen));
        const Vec2 lhs = stokeslet_free(r * d, Vec2(0, 0), r * f);
        const Vec2 rhs = r * stokeslet_free(d, Vec2(0, 0), f);
        CHECK((lhs - rhs).norm() <= 1e-14 * (1.0 + rhs.norm()));
    }
}

TEST_CASE("correction potential")
{
    const double phi = correction_potential(Vec2(0.0, 1.0), Vec2(0.0, 1.0), Vec2(0.0, 1.0));
    CHECK(phi == doctest::Approx(-std::log(2.0) / (2 * pi) + 1.0 / (4 * pi)).epsilon(1e-14));
    CHECK(correction_potential(Vec2(0.4, 0.5), Vec2(0.1, 0.0), Vec2(2.0, 0.0)) == 0.0);
    CHECK_THROWS_AS(correction_potential(Vec2(0.2, -0.5), Vec2(0.2, 0.5), Vec2(1.0, 1.0)), SingularPoint);

    const double h = 1e-4;
    for (const auto& t : random_triples(5, 30)) {
        auto phi_at = [&](const Vec2& z) { return correction_potential(z, t.y, t.f); };
        const Vec2 ex(h, 0.0), ey(0.0, h);
        const double lap =
            (phi_at(t.x + ex) + phi_at(t.x - ex) + phi_at(t.x + ey) + phi_at(t.x - ey) - 4 * phi_at(t.x)) / (h * h);
        const double d2 = (phi_at(t.x + ex) - 2 * phi_at(t.x) + phi_at(t.x - ex)) / (h * h);
        CHECK(std::abs(lap) <= 1e-5 * (1.0 + 2 * std::abs(d2)));

        const Vec2 g = correction_potential_gradient(t.x, t.y, t.f);
        const Vec2 fd((phi_at(t.x + ex) - phi_at(t.x - ex)) / (2 * h), (phi_at(t.x + ey) - phi_at(t.x - ey)) / (2 * h));
        CHECK((g - fd).norm() <= 1e-6 * (1.0 + g.norm()));
    }
}

TEST_CASE("half-space Stokeslet satisfies no-slip")
{
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u1(-3.0, 3.0), u2(1e-3, 3.0), uf(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const Vec2 x(u1(gen), 0.0), y(u1(gen), u2(gen)), f(uf(gen), uf(gen));
        CHECK(stokeslet_halfspace(x, y, f).norm() <= 1e-13);
        CHECK(stokeslet_halfspace_images(x, y, f).norm() <= 1e-13);
    }
    CHECK(stokeslet_halfspace(Vec2(0.3, 0.0), Vec2(0.0, 1.0), Vec2(1.0, 2.0)).norm() <= 1e-15);
}

TEST_CASE("force on the wall gives the zero field")
{
    const Vec2 u = stokeslet_halfspace(Vec2(0.5, 0.7), Vec2(-0.2, 0.0), Vec2(1.0, -1.0));
    CHECK(u.x() == 0.0);
    CHECK(u.y() == 0.0);
}

TEST_CASE("direct formula agrees with the image decomposition")
{
    for (const auto& t : random_triples(17, 100)) {
        const Vec2 a = stokeslet_halfspace(t.x, t.y, t.f);
        const Vec2 b = stokeslet_halfspace_images(t.x, t.y, t.f);
        CHECK((a - b).norm() <= 1e-12 * std::max(1.0, a.norm()));
    }
    CHECK_THROWS_AS(stokeslet_halfspace(Vec2(1.0, 1.0), Vec2(1.0, 1.0), Vec2(1.0, 0.0)), SingularPoint);
}

TEST_CASE("linearity in the force")
{
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const auto& t : random_triples(29, 20)) {
        const Vec2 g(u(gen), u(gen));
        const double a = u(gen), b = u(gen);
        const Vec2 lhs = stokeslet_halfspace(t.x, t.y, a * t.f + b * g);
        const Vec2 rhs = a * stokeslet_halfspace(t.x, t.y, t.f) + b * stokeslet_halfspace(t.x, t.y, g);
        CHECK((lhs - rhs).norm() <= 1e-13 * (1.0 + rhs.norm()));
        const double pl = pressure_halfspace(t.x, t.y, a * t.f + b * g);
        const double pr = a * pressure_halfspace(t.x, t.y, t.f) + b * pressure_halfspace(t.x, t.y, g);
        CHECK(std::abs(pl - pr) <= 1e-13 * (1.0 + std::abs(pr)));
    }
    CHECK(pressure_halfspace(Vec2(0.1, 0.4), Vec2(0.5, 1.0), Vec2(0.0, 0.0)) == 0.0);
}

TEST_CASE("pressure vanishes as the force approaches the wall")
{
    for (const auto& t : random_triples(31, 20)) {
        const Vec2 y(t.y.x(), 1e-8);
        const double scale = std::abs(pressure_free(t.x, y, t.f)) + std::abs(pressure_image(t.x, y, t.f));
        CHECK(std::abs(pressure_halfspace(t.x, y, t.f)) <= 1e-6 * scale);
    }
}

TEST_CASE("pressure decays like the inverse square of distance")
{
    const Vec2 y(0.3, 0.8), f(0.6, -1.1);
    for (double theta : {0.3, 1.2, 2.5}) {
        double prev = -1.0;
        for (double r : {1e2, 1e3, 1e4}) {
            const Vec2 x(r * std::cos(theta), r * std::sin(theta));
            const double scaled = std::abs(pressure_halfspace(x, y, f)) * r * r;
            CHECK(scaled <= 10.0);
            if (prev > 0)
                CHECK(scaled == doctest::Approx(prev).epsilon(0.05));
            prev = scaled;
        }
    }
}

TEST_CASE("half-space pair solves the Stokes equations away from the source")
{
    for (const auto& t : random_triples(37, 40)) {
        const StokesResidual r = stokes_residual_check(t.x, t.y, t.f, 1e-4);
        CHECK(r.relative_momentum() <= 1e-5);
        CHECK(r.relative_divergence() <= 1e-5);
    }
}

TEST_CASE("free Stokeslet is divergence free")
{
    for (const auto& t : random_triples(41, 40)) {
        const auto r = stokes_residual([&](const Vec2& z) { return stokeslet_free(z, t.y, t.f); },
                                       [&](const Vec2& z) { return pressure_free(z, t.y, t.f); }, t.x, 1e-4);
        CHECK(r.relative_divergence() <= 1e-5);
        CHECK(r.relative_momentum() <= 1e-5);
    }
}

TEST_CASE("correction field pairs with its pressure")
{
    for (const auto& t : random_triples(43, 40)) {
        const auto r = stokes_residual([&](const Vec2& z) { return stokeslet_correction(z, t.y, t.f); },
                                       [&](const Vec2& z) { return pressure_correction(z, t.y, t.f); }, t.x, 1e-4);
        CHECK(r.relative_momentum() <= 1e-5);
        CHECK(r.relative_divergence() <= 1e-5);
    }
}
