#include <cmath>
#include <random>

#include <doctest.h>

#include "orbits/action.hpp"
#include "orbits/bounds.hpp"
#include "orbits/loops.hpp"
#include "orbits/quadrature.hpp"
#include "orbits/tables.hpp"

using namespace orbits;

TEST_CASE("Gordon bound closed form and scalings") {
    CHECK(gordon_bound(1.0, 0.0, 1.0) ==
          doctest::Approx(5.10753288221513211).epsilon(1e-14));
    CHECK(gordon_bound(1.0, 2.0, 10.0) ==
          doctest::Approx(2.0 * gordon_bound(1.0, 0.0, 1.0)).epsilon(1e-14));
    CHECK(gordon_bound(8.0, 0.0, 1.0) ==
          doctest::Approx(4.0 * gordon_bound(1.0, 0.0, 1.0)).epsilon(1e-14));
    CHECK(gordon_bound(0.7, 0.0, 1.3) == doctest::Approx(long_zhang_bound(0.7, 1.3)));
}

TEST_CASE("collision constant C") {
    {
        const auto rep = collision_constant_C(masses_new(1, 1, 1));
        CHECK(rep.C == doctest::Approx(3.25406771863486614).epsilon(1e-14));
    }
    {
        const auto rep = collision_constant_C(masses_new(0.29, 0.42, 0.29));
        CHECK(rep.C == doctest::Approx(1.06111297173744451).epsilon(1e-13));
        CHECK(rep.min_index == 0);   // tie between bodies 1 and 3, lowest index wins
        CHECK(rep.per_body_terms[0] == doctest::Approx(rep.per_body_terms[2]).epsilon(1e-13));
    }
    {
        // Permuting the masses permutes the terms; C is invariant.
        const auto a = collision_constant_C(masses_new(0.2, 0.5, 0.3));
        const auto b = collision_constant_C(masses_new(0.5, 0.3, 0.2));
        CHECK(a.C == doctest::Approx(b.C).epsilon(1e-14));
        CHECK(a.per_body_terms[0] == doctest::Approx(b.per_body_terms[2]).epsilon(1e-14));
        CHECK(a.per_body_terms[1] == doctest::Approx(b.per_body_terms[0]).epsilon(1e-14));
        CHECK(a.C == doctest::Approx(*std::min_element(a.per_body_terms.begin(),
                                                       a.per_body_terms.end())));
    }
}

TEST_CASE("collision threshold d1 against printed values") {
    CHECK(collision_lower_bound_d1(masses_new(1, 1, 1), 1.0).d1 ==
          doctest::Approx(11.523843).epsilon(1e-7));
    CHECK(collision_lower_bound_d1(masses_new(0.29, 0.42, 0.29), 1.0).d1 ==
          doctest::Approx(5.419669).epsilon(1e-7));
    CHECK(collision_lower_bound_d1(masses_new(0.10, 0.75, 0.15), 1.0).d1 ==
          doctest::Approx(5.062791).epsilon(1e-7));
}

TEST_CASE("every embedded d1 entry is reproduced") {
    for (const TableRow& row : reference_rows()) {
        const auto rep = collision_lower_bound_d1(masses_new(row.m1, row.m2, row.m3), 1.0);
        CHECK(std::abs(rep.d1 - row.d1_ref) <= 1e-6);
    }
}

TEST_CASE("certify_noncollision") {
    BoundReport rep;
    rep.d1 = 5.419669;
    const Certificate pass = certify_noncollision(5.417862, rep);
    CHECK(pass.passes);
    CHECK(pass.margin == doctest::Approx(0.001807).epsilon(1e-3));

    rep.d1 = 11.523843;
    CHECK_FALSE(certify_noncollision(11.523843, rep).passes);   // strict inequality
    const Certificate wide = certify_noncollision(10.483477, rep);
    CHECK(wide.passes);
    CHECK(wide.margin == doctest::Approx(1.040366).epsilon(1e-5));
}

TEST_CASE("Long-Zhang equality witness and inequality direction") {
    // Kepler action of a mean-zero circle of radius r about a fixed center of
    // strength a: T (2 pi^2 r^2 / T^2 + a / r), minimized at r* = (a T^2/4pi^2)^(1/3).
    const double a = 1.37, T = 1.0;
    const double r_star = std::cbrt(a * T * T / (4 * M_PI * M_PI));
    FourierLoop circle;
    circle.T = T;
    circle.cos_c = {{r_star, 0.0}};
    circle.sin_c = {{0.0, r_star}};

    auto kepler_action = [&](const FourierLoop& loop) {
        const Loop l = make_loop(loop);
        return integrate_periodic(
            [&](double t) { return 0.5 * norm2(l.vel(t)) + a / norm(l.pos(t)); }, T,
            QuadratureSettings{1e-12, 30, 64});
    };

    CHECK(std::abs(kepler_action(circle) - long_zhang_bound(a, T)) <= 1e-9);

    std::mt19937 rng(19);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        FourierLoop loop;
        loop.T = T;
        // Dominant near-circular first harmonic keeps |q| bounded away from
        // the center so the quadrature stays cheap; ripples on top.
        loop.cos_c.push_back({0.4 + 0.2 * u(rng), 0.05 * u(rng)});
        loop.sin_c.push_back({0.05 * u(rng), 0.4 + 0.2 * u(rng)});
        for (int j = 1; j < 4; ++j) {
            const double s = 0.05 / ((2 * j + 1) * (2 * j + 1));
            loop.cos_c.push_back({s * u(rng), s * u(rng)});
            loop.sin_c.push_back({s * u(rng), s * u(rng)});
        }
        // Mean-zero holds automatically: only nonconstant harmonics present.
        CHECK(kepler_action(loop) >= long_zhang_bound(a, T) * (1 - 1e-12));
    }
}
