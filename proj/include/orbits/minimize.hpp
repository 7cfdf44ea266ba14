#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbits/bounds.hpp"
#include "orbits/config.hpp"
#include "orbits/dynamics.hpp"
#include "orbits/loops.hpp"
#include "orbits/quadrature.hpp"

namespace orbits {

struct MinimizeOptions {
    int K = 16;                      // retained odd harmonics (orders 1..2K-1)
    double grad_tol = 1e-8;          // max-norm of the kinetic-metric gradient
    int max_iters = 10000;
    double collision_floor = 0.0;    // 0 means the default 1e-4 * l
    QuadratureSettings quadrature{};
    bool keep_log = false;
};

struct IterationRow {
    int iter = 0;
    double action = 0.0;
    double grad_norm = 0.0;
    std::array<double, 3> min_sep{};
    double step = 0.0;
};

enum class MinimizeStatus {
    Converged,
    MaxIterations,
    CollisionApproach,   // stopped before a separation fell below the floor
};

struct MinimizeResult {
    FourierLoop loop;
    double action = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    std::array<double, 3> min_separations{};
    bool converged = false;
    MinimizeStatus status = MinimizeStatus::MaxIterations;
    std::vector<IterationRow> log;
};

struct CertificationReport {
    int degree = 0;
    double action = 0.0;
    double d1 = 0.0;
    double margin = 0.0;
    std::array<double, 3> separations{};
    double l2_residual = 0.0;
    double max_residual = 0.0;
    double periodicity_error = 0.0;
    bool passes = false;
    std::string reason;   // first failed check, empty when passing
};

// Exact gradient of the grid-discretized action with respect to every
// Fourier coefficient (kinetic part in closed form, potential part paired
// with each harmonic basis function on the grid). The grid is doubled until
// the gradient max-norm stabilizes to qs.abs_tol. Returned in loop shape.
FourierLoop action_gradient(const FourierLoop& loop, const Masses& masses,
                            const PrimaryConfig& cfg, const QuadratureSettings& qs = {});

// Monotone descent over the odd-harmonic coefficient space: steepest descent
// in the kinetic metric with a Barzilai-Borwein step and Armijo backtracking
// (c = 1e-4, factor 0.5). Stops at grad_tol, max_iters, or when a separation
// approaches the collision floor (last safe iterate is returned).
MinimizeResult minimize_action(const FourierLoop& init, const Masses& masses,
                               const PrimaryConfig& cfg, const MinimizeOptions& opts = {});

// Bundle of certificates for a converged minimizer: winding degree of
// q - q1, action vs d1, separations vs the collision floor, Euler-Lagrange
// residual (l2 <= 1e-4) and periodicity under time integration (<= 1e-3).
CertificationReport certify_minimizer(const MinimizeResult& result, const Masses& masses,
                                      const PrimaryConfig& cfg, int expected_degree,
                                      double collision_floor = 0.0);

void write_iteration_csv(std::ostream& out, const std::vector<IterationRow>& log);

}  // namespace orbits
