#pragma once

#include <array>

#include "orbits/vec2.hpp"

namespace orbits {

// Three primary masses, G = 1 units. The total is always recomputed from
// the parts so that the center-of-mass identity stays exact to rounding.
struct Masses {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;

    double total() const { return m1 + m2 + m3; }
    double pair_sum() const { return m1 * m2 + m1 * m3 + m2 * m3; }
    double operator[](int i) const { return i == 0 ? m1 : (i == 1 ? m2 : m3); }
};

// Throws NonPositiveMass unless all three masses are strictly positive.
Masses masses_new(double m1, double m2, double m3);

// Rotating equilateral (Lagrange) configuration of the three primaries.
// Primary i moves on the circle of radius r[i], phase theta[i], with
// angular rate 2*pi/T about the center of mass at the origin.
struct PrimaryConfig {
    double T = 1.0;                      // period
    double l = 0.0;                      // equilateral side length
    std::array<double, 3> r{};           // orbit radii
    std::array<double, 3> theta{};       // phase angles in [0, 2*pi)
};

// Side of the equilateral triangle: l = (M T^2 / 4 pi^2)^(1/3).
double side_length(const Masses& masses, double T);

// Radii and phase angles of the rotating Lagrange configuration.
// Angles are recovered from their (sin, cos) pairs via atan2 and
// normalized into [0, 2*pi).
PrimaryConfig lagrange_orbits(const Masses& masses, double T);

// Position/velocity of primary i (0-based, i in {0,1,2}) at time t.
Vec2 primary_position(const PrimaryConfig& cfg, int i, double t);
Vec2 primary_velocity(const PrimaryConfig& cfg, int i, double t);

}  // namespace orbits
