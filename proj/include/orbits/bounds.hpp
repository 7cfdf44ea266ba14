#pragma once

#include <array>

#include "orbits/config.hpp"

namespace orbits {

struct BoundReport {
    double C = 0.0;
    double d1 = 0.0;
    std::array<double, 3> per_body_terms{};
    int min_index = 0;   // lowest index attaining the minimum
};

struct Certificate {
    bool passes = false;
    double margin = 0.0;
};

// Gordon: action of a Kepler-type arc pinned at the singularity at both ends
// is at least (3/2)(2pi)^(2/3) a^(2/3) (t2-t1)^(1/3).
double gordon_bound(double a, double t1, double t2);

// Long-Zhang: same closed form over a full period for mean-zero loops.
double long_zhang_bound(double a, double T);

// The collision constant C = min over bodies of
//   2^(2/3) m_i + (M - m_i) - (1/3M)(m1 m2 + m1 m3 + m2 m3).
BoundReport collision_constant_C(const Masses& masses);

// Collision threshold d1 = (3/2)(2pi)^(2/3) C M^(-1/3) T^(1/3): any
// anti-T/2-symmetric loop touching a primary has action >= d1.
BoundReport collision_lower_bound_d1(const Masses& masses, double T);

// passes iff test_action < d1 strictly.
Certificate certify_noncollision(double test_action, const BoundReport& report);

}  // namespace orbits
