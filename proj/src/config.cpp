#include "orbits/config.hpp"

#include <cmath>

#include "orbits/errors.hpp"

namespace orbits {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}
}  // namespace

Masses masses_new(double m1, double m2, double m3) {
    if (!(m1 > 0.0) || !(m2 > 0.0) || !(m3 > 0.0))
        throw NonPositiveMass("all masses must be strictly positive");
    return Masses{m1, m2, m3};
}

double side_length(const Masses& masses, double T) {
    return std::cbrt(masses.total() * T * T / (4.0 * M_PI * M_PI));
}

PrimaryConfig lagrange_orbits(const Masses& masses, double T) {
    const double m1 = masses.m1, m2 = masses.m2, m3 = masses.m3;
    const double M = masses.total();
    const double l = side_length(masses, T);

    const double s1 = std::sqrt(m2 * m2 + m2 * m3 + m3 * m3);
    const double s2 = std::sqrt(m1 * m1 + m1 * m3 + m3 * m3);
    const double s3 = std::sqrt(m1 * m1 + m1 * m2 + m2 * m2);

    PrimaryConfig cfg;
    cfg.T = T;
    cfg.l = l;
    cfg.r = {s1 * l / M, s2 * l / M, s3 * l / M};

    const double rt3 = std::sqrt(3.0);
    cfg.theta = {
        wrap_angle(std::atan2((-m2 + m3) / (2.0 * s1), rt3 * (m2 + m3) / (2.0 * s1))),
        wrap_angle(std::atan2((m1 + 2.0 * m3) / (2.0 * s2), -rt3 * m1 / (2.0 * s2))),
        wrap_angle(std::atan2(-(m1 + 2.0 * m2) / (2.0 * s3), -rt3 * m1 / (2.0 * s3))),
    };
    return cfg;
}

Vec2 primary_position(const PrimaryConfig& cfg, int i, double t) {
    const double phase = kTwoPi * t / cfg.T + cfg.theta[static_cast<size_t>(i)];
    const double r = cfg.r[static_cast<size_t>(i)];
    return {r * std::cos(phase), r * std::sin(phase)};
}

Vec2 primary_velocity(const PrimaryConfig& cfg, int i, double t) {
    const double w = kTwoPi / cfg.T;
    const double phase = w * t + cfg.theta[static_cast<size_t>(i)];
    const double r = cfg.r[static_cast<size_t>(i)];
    return {-r * w * std::sin(phase), r * w * std::cos(phase)};
}

}  // namespace orbits
