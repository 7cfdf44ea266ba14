#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include "orbits/action.hpp"
#include "orbits/config.hpp"
#include "orbits/loops.hpp"
#include "orbits/minimize.hpp"

using namespace orbits;

namespace {

FourierLoop random_loop(std::mt19937& rng, int K, double T) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FourierLoop loop;
    loop.T = T;
    loop.cos_c.resize(K);
    loop.sin_c.resize(K);
    // dominant first harmonic keeps the loop clear of the primaries
    loop.cos_c[0] = {0.45 + 0.1 * u(rng), 0.05 * u(rng)};
    loop.sin_c[0] = {0.05 * u(rng), 0.45 + 0.1 * u(rng)};
    for (int j = 1; j < K; ++j) {
        const double s = 0.02 / (j * j);
        loop.cos_c[j] = {s * u(rng), s * u(rng)};
        loop.sin_c[j] = {s * u(rng), s * u(rng)};
    }
    return loop;
}

double flat_dot(const FourierLoop& a, const FourierLoop& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cos_c.size(); ++j) {
        s += dot(a.cos_c[j], b.cos_c[j]) + dot(a.sin_c[j], b.sin_c[j]);
    }
    return s;
}

}  // namespace

TEST_CASE("action gradient matches central differences") {
    const Masses m = masses_new(0.29, 0.42, 0.29);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);
    std::mt19937 rng(11);
    QuadratureSettings quad;
    quad.abs_tol = 1e-11;

    const int K = 8;
    const FourierLoop loop = random_loop(rng, K, cfg.T);
    const FourierLoop grad = action_gradient(loop, m, cfg, quad);
    REQUIRE(grad.harmonics() == K);

    const double h = 1e-6;
    double err2 = 0.0, ref2 = 0.0;
    for (int j = 0; j < K; ++j) {
        for (int c = 0; c < 4; ++c) {
            auto coeff = [&](FourierLoop& lp) -> double& {
                Vec2& v = (c < 2) ? lp.cos_c[j] : lp.sin_c[j];
                return (c % 2 == 0) ? v.x : v.y;
            };
            FourierLoop plus = loop, minus = loop;
            coeff(plus) += h;
            coeff(minus) -= h;
            const double g =
                (action_direct(make_loop(plus), m, cfg, quad).total -
                 action_direct(make_loop(minus), m, cfg, quad).total) /
                (2 * h);
            FourierLoop gl = grad;
            const double ga = coeff(gl);
            err2 += (ga - g) * (ga - g);
            ref2 += ga * ga;
        }
    }
    CHECK(std::sqrt(err2) <= 1e-6 * std::sqrt(ref2));
}

TEST_CASE("pure kinetic gradient is the explicit diagonal form") {
    const Masses none{0.0, 0.0, 0.0};
    PrimaryConfig cfg;
    cfg.T = 1.0;
    cfg.l = 1.0;
    cfg.r = {0.0, 0.0, 0.0};
    cfg.theta = {0.0, 0.0, 0.0};

    FourierLoop loop;
    loop.T = 1.0;
    loop.cos_c = {{0.3, -0.2}, {0.07, 0.0}};
    loop.sin_c = {{0.1, 0.25}, {0.0, -0.04}};
    QuadratureSettings quad;
    const FourierLoop grad = action_gradient(loop, none, cfg, quad);
    for (int j = 0; j < 2; ++j) {
        const double k = loop.harmonic_order(j);
        const double w = 2.0 * M_PI * k / loop.T;
        const double scale = w * w * loop.T / 2.0;
        CHECK(norm(grad.cos_c[j] - scale * loop.cos_c[j]) <= 1e-9 * scale);
        CHECK(norm(grad.sin_c[j] - scale * loop.sin_c[j]) <= 1e-9 * scale);
    }
}

TEST_CASE("minimize from a circular start and certify the result") {
    const Masses m = masses_new(1, 1, 1);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);

    MinimizeOptions opts;
    opts.K = 16;
    opts.grad_tol = 1e-8;
    const Loop start = make_loop(CircularLoopParams{0.33, M_PI / 2}, cfg);
    const FourierLoop init = project_to_fourier(start.pos, cfg.T, opts.K, 512);

    const MinimizeResult res = minimize_action(init, m, cfg, opts);
    REQUIRE(res.converged);
    CHECK(res.grad_norm <= opts.grad_tol);
    CHECK(res.action < action_direct(make_loop(init), m, cfg, QuadratureSettings{}).total);

    const CertificationReport cert = certify_minimizer(res, m, cfg, 1);
    CHECK(cert.passes);
    CHECK(cert.degree == 1);
    CHECK(cert.margin > 0.0);
    for (double s : cert.separations) CHECK(s > 1e-4 * cfg.l);
    CHECK(cert.l2_residual <= 1e-4);
    CHECK(cert.periodicity_error <= 1e-3);

    SUBCASE("a converged point re-minimizes in place") {
        const MinimizeResult again = minimize_action(res.loop, m, cfg, opts);
        CHECK(again.iterations <= 2);
        CHECK(std::abs(again.action - res.action) <= 1e-10);
    }
}

TEST_CASE("iteration cap is honored and reported") {
    const Masses m = masses_new(1, 1, 1);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);
    MinimizeOptions opts;
    opts.K = 8;
    opts.max_iters = 1;
    opts.grad_tol = 1e-14;
    const Loop start = make_loop(CircularLoopParams{0.33, M_PI / 2}, cfg);
    const FourierLoop init = project_to_fourier(start.pos, cfg.T, opts.K, 256);
    const MinimizeResult res = minimize_action(init, m, cfg, opts);
    CHECK_FALSE(res.converged);
    CHECK(res.status == MinimizeStatus::MaxIterations);
    CHECK(res.iterations == 1);
}

TEST_CASE("descent direction: one gradient step lowers the action") {
    const Masses m = masses_new(0.2, 0.5, 0.3);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);
    std::mt19937 rng(23);
    QuadratureSettings quad;
    const FourierLoop loop = random_loop(rng, 6, cfg.T);
    const FourierLoop grad = action_gradient(loop, m, cfg, quad);
    const double g2 = flat_dot(grad, grad);
    REQUIRE(g2 > 0.0);

    FourierLoop stepped = loop;
    const double eta = 1e-6 / std::sqrt(g2);
    for (std::size_t j = 0; j < stepped.cos_c.size(); ++j) {
        stepped.cos_c[j] -= eta * grad.cos_c[j];
        stepped.sin_c[j] -= eta * grad.sin_c[j];
    }
    const double before = action_direct(make_loop(loop), m, cfg, quad).total;
    const double after = action_direct(make_loop(stepped), m, cfg, quad).total;
    CHECK(after < before);
}

TEST_CASE("the zero loop fails certification with a degree-specific reason") {
    const Masses m = masses_new(1, 1, 1);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);
    MinimizeResult res;
    res.loop.T = cfg.T;
    res.loop.cos_c = {{0.0, 0.0}};
    res.loop.sin_c = {{0.0, 0.0}};
    res.converged = true;
    const CertificationReport cert = certify_minimizer(res, m, cfg, 1);
    CHECK_FALSE(cert.passes);
    CHECK(cert.reason.find("degree") != std::string::npos);
}

TEST_CASE("iteration log CSV header") {
    const Masses m = masses_new(1, 1, 1);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);
    MinimizeOptions opts;
    opts.K = 4;
    opts.max_iters = 3;
    opts.keep_log = true;
    const Loop start = make_loop(CircularLoopParams{0.33, M_PI / 2}, cfg);
    const FourierLoop init = project_to_fourier(start.pos, cfg.T, opts.K, 128);
    const MinimizeResult res = minimize_action(init, m, cfg, opts);
    REQUIRE(!res.log.empty());
    std::ostringstream out;
    write_iteration_csv(out, res.log);
    CHECK(out.str().substr(0, 48).find("iter,action,grad_norm") == 0);
}
