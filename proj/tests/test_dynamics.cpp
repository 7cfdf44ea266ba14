#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include "orbits/config.hpp"
#include "orbits/dynamics.hpp"
#include "orbits/errors.hpp"

using namespace orbits;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Single mass m1 = 1 pinned at the origin (r1 = 0): the small body then obeys
// the plain Kepler problem. l is kept at the equal-mass scale so the
// singularity guards have a sensible length unit.
PrimaryConfig pinned_center() {
    PrimaryConfig cfg;
    cfg.T = 1.0;
    cfg.l = std::cbrt(1.0 / (4.0 * M_PI * M_PI));
    cfg.r = {0.0, 0.0, 0.0};
    cfg.theta = {0.0, 0.0, 0.0};
    return cfg;
}

// Circular Kepler orbit of period 1 around a unit mass: radius (1/4pi^2)^(1/3).
FourierLoop kepler_circle() {
    const double rho = std::cbrt(1.0 / (4.0 * M_PI * M_PI));
    FourierLoop loop;
    loop.T = 1.0;
    loop.cos_c = {{rho, 0.0}};
    loop.sin_c = {{0.0, rho}};
    return loop;
}

}  // namespace

TEST_CASE("rhs symmetry, monopole limit, and the singularity guard") {
    const Masses m = masses_new(1, 1, 1);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);

    // Equal masses at equal radii: the field vanishes at the center of mass.
    CHECK(norm(rhs(cfg, m, 0.0, Vec2{0, 0})) < 1e-12);

    // Far away the field is the monopole M/|q|^2 to 1%.
    const Vec2 far{1e3 * cfg.l, 0.0};
    const Vec2 acc = rhs(cfg, m, 0.17, far);
    const Vec2 monopole = (-m.total() / std::pow(norm(far), 3)) * far;
    CHECK(norm(acc - monopole) <= 0.01 * norm(monopole));

    const Vec2 near = primary_position(cfg, 0, 0.0) + Vec2{1e-13 * cfg.l, 0.0};
    CHECK_THROWS_AS(rhs(cfg, m, 0.0, near), CollisionSingularity);
}

TEST_CASE("rhs is minus the gradient of the potential sum") {
    const Masses m = masses_new(0.2, 0.5, 0.3);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);

    auto potential = [&](double t, Vec2 q) {
        double v = 0.0;
        for (int i = 0; i < 3; ++i) v += m[i] / norm(q - primary_position(cfg, i, t));
        return v;
    };

    const double h = 1e-6 * cfg.l;
    int checked = 0;
    while (checked < 32) {
        const Vec2 q{u(rng) * cfg.l, u(rng) * cfg.l};
        const double t = 0.5 * (u(rng) + 2.0);
        bool safe = true;
        for (int i = 0; i < 3; ++i)
            if (norm(q - primary_position(cfg, i, t)) < 0.2 * cfg.l) safe = false;
        if (!safe) continue;
        ++checked;
        const Vec2 grad{(potential(t, q + Vec2{h, 0}) - potential(t, q - Vec2{h, 0})) / (2 * h),
                        (potential(t, q + Vec2{0, h}) - potential(t, q - Vec2{0, h})) / (2 * h)};
        const Vec2 a = rhs(cfg, m, t, q);
        CHECK(norm(a - grad) <= 1e-6 * norm(a));
    }
}

TEST_CASE("zero field gives exact uniform motion") {
    PrimaryConfig cfg = pinned_center();
    const Masses none{0.0, 0.0, 0.0};
    const State s0{{0.1, -0.2}, {0.7, 0.4}, 0.0};
    const auto traj = integrate(cfg, none, s0, 1.0, 1e-12);
    const Vec2 expect = s0.position + 1.0 * s0.velocity;
    CHECK(norm(traj.back().position - expect) <= 1e-13);
    CHECK(norm(traj.back().velocity - s0.velocity) <= 1e-13);
}

TEST_CASE("reduced Kepler circle: residual and periodicity") {
    const PrimaryConfig cfg = pinned_center();
    const Masses m{1.0, 0.0, 0.0};
    const FourierLoop circle = kepler_circle();

    const ResidualReport res = el_residual(circle, m, cfg, 512);
    CHECK(res.l2_residual <= 1e-10);
    CHECK(res.max_residual <= 1e-10);

    CHECK(periodicity_error(cfg, m, circle, 1e-12) <= 1e-9);
}

TEST_CASE("RK4 shows fourth-order endpoint convergence on Kepler") {
    const PrimaryConfig cfg = pinned_center();
    const Masses m{1.0, 0.0, 0.0};
    const double rho = std::cbrt(1.0 / (4.0 * M_PI * M_PI));
    const State s0{{rho, 0.0}, {0.0, kTwoPi * rho}, 0.0};
    const Vec2 exact = s0.position;   // closes after one period

    auto endpoint_error = [&](int steps) {
        State s = s0;
        const double h = 1.0 / steps;
        // Re-run the integrator kernel through the public API by requesting a
        // tolerance we immediately bypass: use fixed counts via integrate's
        // internal halving is not addressable, so step manually with rhs.
        std::vector<State> traj{s};
        for (int k = 0; k < steps; ++k) {
            // classical RK4
            auto f = [&](double t, Vec2 q) { return rhs(cfg, m, t, q); };
            const Vec2 k1v = f(s.time, s.position), k1x = s.velocity;
            const Vec2 k2v = f(s.time + h / 2, s.position + (h / 2) * k1x);
            const Vec2 k2x = s.velocity + (h / 2) * k1v;
            const Vec2 k3v = f(s.time + h / 2, s.position + (h / 2) * k2x);
            const Vec2 k3x = s.velocity + (h / 2) * k2v;
            const Vec2 k4v = f(s.time + h, s.position + h * k3x);
            const Vec2 k4x = s.velocity + h * k3v;
            s.position += (h / 6) * (k1x + 2 * k2x + 2 * k3x + k4x);
            s.velocity += (h / 6) * (k1v + 2 * k2v + 2 * k3v + k4v);
            s.time += h;
        }
        return norm(s.position - exact);
    };

    const double e1 = endpoint_error(256);
    const double e2 = endpoint_error(512);
    CHECK(e1 / e2 >= 12.0);
    CHECK(e1 / e2 <= 20.0);
}

TEST_CASE("rotating-frame Jacobi quantity drifts slowly") {
    const Masses m = masses_new(1, 1, 1);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);
    const double w = kTwoPi / cfg.T;

    auto jacobi = [&](const State& s) {
        double pot = 0.0;
        for (int i = 0; i < 3; ++i)
            pot += m[i] / norm(s.position - primary_position(cfg, i, s.time));
        return 0.5 * norm2(s.velocity) - w * cross(s.position, s.velocity) - pot;
    };

    // Start well outside the triangle so the trajectory stays smooth.
    const State s0{{3.0 * cfg.l, 0.0}, {0.0, 0.6}, 0.0};
    const auto traj = integrate(cfg, m, s0, cfg.T, 1e-10);
    double lo = jacobi(traj.front()), hi = lo;
    for (const State& s : traj) {
        const double c = jacobi(s);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    CHECK(hi - lo <= 1e-8);
}

TEST_CASE("spectral acceleration matches second differences") {
    FourierLoop loop;
    loop.T = 1.0;
    loop.cos_c = {{0.3, -0.1}, {0.02, 0.01}};
    loop.sin_c = {{0.05, 0.4}, {-0.01, 0.015}};
    const double h = 1e-4;
    for (int k = 0; k < 16; ++k) {
        const double t = k / 16.0;
        const Vec2 fd =
            (loop.position(t + h) - 2.0 * loop.position(t) + loop.position(t - h)) / (h * h);
        const Vec2 acc = loop.acceleration(t);
        CHECK(norm(fd - acc) <= 1e-5 * std::max(1.0, norm(acc)));
    }
}

TEST_CASE("trajectory CSV header") {
    const PrimaryConfig cfg = pinned_center();
    const Masses none{0.0, 0.0, 0.0};
    const auto traj = integrate(cfg, none, State{{0, 0}, {1, 0}, 0.0}, 0.5, 1e-10);
    std::ostringstream out;
    write_trajectory_csv(out, traj);
    CHECK(out.str().substr(0, 12) == "t,x,y,vx,vy\n");
}
