#include "orbits/action.hpp"

#include <cmath>

#include "orbits/errors.hpp"

namespace orbits {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void guard_no_collision(const Loop& loop, const PrimaryConfig& cfg) {
    const auto sep = min_separation(loop, cfg, 256);
    for (double s : sep)
        if (s < 1e-12 * cfg.l)
            throw CollisionOnPath("loop passes within 1e-12*l of a primary");
}

}  // namespace

ActionBreakdown action_direct(const Loop& loop, const Masses& masses,
                              const PrimaryConfig& cfg, const QuadratureSettings& qs) {
    guard_no_collision(loop, cfg);

    ActionBreakdown out;
    out.kinetic = integrate_periodic(
        [&](double t) { return 0.5 * norm2(loop.vel(t)); }, loop.T, qs);
    for (int i = 0; i < 3; ++i) {
        out.potential[static_cast<size_t>(i)] = integrate_periodic(
            [&](double t) {
                return masses[i] / norm(loop.pos(t) - primary_position(cfg, i, t));
            },
            loop.T, qs);
    }
    out.total = out.kinetic + out.potential[0] + out.potential[1] + out.potential[2];
    return out;
}

double action_d2(const EllipticLoopParams& p, const Masses& masses,
                 const PrimaryConfig& cfg, const QuadratureSettings& qs,
                 ThirdBodyPhase phase) {
    guard_no_collision(make_loop(p, cfg), cfg);

    const double T = cfg.T;
    const double M = masses.total();
    const double a = p.a, b = p.b, th = p.theta;
    const double r1 = cfg.r[0], r2 = cfg.r[1], r3 = cfg.r[2];
    const double t1 = cfg.theta[0], t2 = cfg.theta[1], t3 = cfg.theta[2];

    const double prefactor =
        (2.0 * M_PI * M_PI / T) *
        ((a * a + b * b) / 2.0 + (masses.m2 + masses.m3 - masses.m1) / M * r1 * r1 -
         (2.0 * masses.m2 * r2 * std::cos(t2 - t1) + 2.0 * masses.m3 * r3 * std::cos(t3 - t1)) /
             M * r1 +
         masses.m2 * (a - b) / M * (r1 * std::cos(t1 + th) - r2 * std::cos(t2 + th)) +
         masses.m3 * (a - b) / M * (r1 * std::cos(t1 + th) - r3 * std::cos(t3 + th)));

    auto ellipse_sq = [&](double t) {
        return (a * a + b * b) / 2.0 +
               (a * a - b * b) / 2.0 * std::cos(2.0 * kTwoPi * t / T - 2.0 * th);
    };

    const double I1 = integrate_periodic(
        [&](double t) { return 1.0 / std::sqrt(ellipse_sq(t)); }, T, qs);

    auto body_integral = [&](double ri, double thi, double const_phase) {
        return integrate_periodic(
            [&](double t) {
                const double v =
                    ellipse_sq(t) + r1 * r1 + ri * ri - 2.0 * r1 * ri * std::cos(const_phase) +
                    (a + b) * (r1 * std::cos(2.0 * kTwoPi * t / T + t1 - th) -
                               ri * std::cos(2.0 * kTwoPi * t / T + thi - th)) +
                    (a - b) * (r1 * std::cos(t1 + th) - ri * std::cos(thi + th));
                return 1.0 / std::sqrt(v);
            },
            T, qs);
    };

    const double third_phase = (phase == ThirdBodyPhase::Corrected) ? (t3 - t1) : (t2 - t1);
    const double I2 = body_integral(r2, t2, t2 - t1);
    const double I3 = body_integral(r3, t3, third_phase);

    return prefactor + masses.m1 * I1 + masses.m2 * I2 + masses.m3 * I3;
}

double action_d3(const CircularLoopParams& p, const Masses& masses,
                 const PrimaryConfig& cfg, const QuadratureSettings& qs) {
    guard_no_collision(make_loop(p, cfg), cfg);

    const double T = cfg.T;
    const double M = masses.total();
    const double a = p.a, th = p.theta;
    const double r1 = cfg.r[0], r2 = cfg.r[1], r3 = cfg.r[2];
    const double t1 = cfg.theta[0], t2 = cfg.theta[1], t3 = cfg.theta[2];

    const double prefactor =
        (2.0 * M_PI * M_PI / T) *
        (a * a + (masses.m2 + masses.m3 - masses.m1) / M * r1 * r1 -
         (2.0 * masses.m2 * r2 * std::cos(t2 - t1) + 2.0 * masses.m3 * r3 * std::cos(t3 - t1)) /
             M * r1 +
         2.0 * (masses.m2 + masses.m3) / M * a * r1 * std::cos(t1 - th) -
         (2.0 * masses.m2 * r2 * std::cos(t2 - th) + 2.0 * masses.m3 * r3 * std::cos(t3 - th)) /
             M * a);

    // The two remaining separations are constant in time; the quadrature is
    // kept anyway so all table entries flow through the same machinery.
    auto body_integral = [&](double ri, double thi) {
        return integrate_periodic(
            [&](double) {
                const double v = a * a + r1 * r1 + ri * ri -
                                 2.0 * r1 * ri * std::cos(thi - t1) +
                                 2.0 * a * r1 * std::cos(t1 - th) -
                                 2.0 * a * ri * std::cos(thi - th);
                return 1.0 / std::sqrt(v);
            },
            T, qs);
    };

    return prefactor + masses.m1 * T / a + masses.m2 * body_integral(r2, t2) +
           masses.m3 * body_integral(r3, t3);
}

double action_decomposed(const Loop& loop, const Masses& masses,
                         const PrimaryConfig& cfg, const QuadratureSettings& qs) {
    guard_no_collision(loop, cfg);

    const double M = masses.total();
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        sum += masses[i] / M *
               integrate_periodic(
                   [&](double t) {
                       const Vec2 dq = loop.vel(t) - primary_velocity(cfg, i, t);
                       const Vec2 q = loop.pos(t) - primary_position(cfg, i, t);
                       return 0.5 * norm2(dq) + M / norm(q);
                   },
                   loop.T, qs);
    }
    return sum + primary_kinetic_term(masses, cfg);
}

double primary_kinetic_term(const Masses& masses, const PrimaryConfig& cfg) {
    const double M = masses.total();
    return -0.5 * std::pow(kTwoPi, 2.0 / 3.0) * masses.pair_sum() *
           std::pow(M, -4.0 / 3.0) * std::cbrt(cfg.T);
}

}  // namespace orbits
