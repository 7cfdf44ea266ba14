#pragma once

#include <vector>

#include "orbits/config.hpp"
#include "orbits/loops.hpp"
#include "orbits/vec2.hpp"

namespace orbits {

struct State {
    Vec2 position{};
    Vec2 velocity{};
    double time = 0.0;
};

struct ResidualReport {
    double l2_residual = 0.0;        // rms defect, normalized by (2pi/T)^2 * l
    double max_residual = 0.0;       // max-norm defect, same normalization
    double periodicity_error = 0.0;  // filled by periodicity_error()
};

// Small-mass acceleration: sum_i m_i (q_i(t) - q) / |q_i(t) - q|^3.
// Throws CollisionSingularity within 1e-12*l of a primary.
Vec2 rhs(const PrimaryConfig& cfg, const Masses& masses, double t, Vec2 q);

// Fixed-step RK4 over [s0.time, t_end], with the step chosen by Richardson
// halving so the endpoint moves by <= step_tol between successive step
// sizes. Aborts with SingularityApproach below 1e-6*l separation and
// StepTooSmall below h = 1e-12*T.
std::vector<State> integrate(const PrimaryConfig& cfg, const Masses& masses,
                             const State& s0, double t_end, double step_tol);

// Euler-Lagrange defect of a Fourier loop: spectral q'' minus rhs, sampled
// on an N-point grid.
ResidualReport el_residual(const FourierLoop& loop, const Masses& masses,
                           const PrimaryConfig& cfg, int N);

// Integrate the equation of motion from the loop's state at t = 0 over one
// period and report max(|dq|/l, |dv| T/(2pi l)) at the far end.
double periodicity_error(const PrimaryConfig& cfg, const Masses& masses,
                         const FourierLoop& loop, double step_tol);

void write_trajectory_csv(std::ostream& out, const std::vector<State>& trajectory);

}  // namespace orbits
