#pragma once

#include <functional>

namespace orbits {

struct QuadratureSettings {
    double abs_tol = 1e-9;
    int max_doublings = 20;
    int initial_points = 64;   // power of two, >= 16
};

// Integral of a smooth T-periodic function over one period, by the periodic
// trapezoid rule (equal-weight average of uniform samples) with grid doubling
// until two successive estimates differ by <= abs_tol. Spectrally accurate
// for smooth periodic integrands. Throws NoConvergence if the doubling
// budget runs out.
double integrate_periodic(const std::function<double(double)>& f, double T,
                          const QuadratureSettings& qs = {});

}  // namespace orbits
