#pragma once

#include <array>

#include "orbits/config.hpp"
#include "orbits/loops.hpp"
#include "orbits/quadrature.hpp"

namespace orbits {

struct ActionBreakdown {
    double kinetic = 0.0;
    std::array<double, 3> potential{};   // one attraction term per primary
    double total = 0.0;
};

// Which constant appears in the |q - q3| integrand of the elliptic
// closed form. As printed, that term reads cos(theta2 - theta1); the
// derivation pattern requires cos(theta3 - theta1). Both are offered so
// the two readings can be compared against the reference tables.
enum class ThirdBodyPhase {
    Printed,     // cos(theta2 - theta1)
    Corrected,   // cos(theta3 - theta1)
};

// Lagrangian action f(q) = int_0^T [ |q'|^2/2 + sum_i m_i/|q - q_i| ] dt
// by direct periodic quadrature of each term. Throws CollisionOnPath if
// the loop comes within 1e-12*l of a primary.
ActionBreakdown action_direct(const Loop& loop, const Masses& masses,
                              const PrimaryConfig& cfg, const QuadratureSettings& qs = {});

// Closed-form-assisted action of the elliptic test loop: explicit
// trigonometric prefactor plus three one-dimensional integrals.
double action_d2(const EllipticLoopParams& p, const Masses& masses,
                 const PrimaryConfig& cfg, const QuadratureSettings& qs = {},
                 ThirdBodyPhase phase = ThirdBodyPhase::Corrected);

// Closed-form-assisted action of the circular test loop: explicit prefactor
// + m1*T/a + two integrals (whose integrands are constant in time).
double action_d3(const CircularLoopParams& p, const Masses& masses,
                 const PrimaryConfig& cfg, const QuadratureSettings& qs = {});

// Same action evaluated through the per-primary two-body decomposition
//   (1/M) sum_i int m_i [ |q'-q_i'|^2/2 + M/|q-q_i| ] dt - (1/2M) int sum_i m_i |q_i'|^2 dt.
double action_decomposed(const Loop& loop, const Masses& masses,
                         const PrimaryConfig& cfg, const QuadratureSettings& qs = {});

// The constant term -(1/2M) int sum_i m_i |q_i'|^2 dt of the decomposition,
// equal in closed form to -(1/2)(2pi)^(2/3) (m1 m2 + m1 m3 + m2 m3) M^(-4/3) T^(1/3).
double primary_kinetic_term(const Masses& masses, const PrimaryConfig& cfg);

}  // namespace orbits
