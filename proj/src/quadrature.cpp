#include "orbits/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "orbits/errors.hpp"

namespace orbits {

double integrate_periodic(const std::function<double(double)>& f, double T,
                          const QuadratureSettings& qs) {
    int n = qs.initial_points < 16 ? 16 : qs.initial_points;
    const double h0 = T / n;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += f(j * h0);
    double estimate = sum * T / n;

    for (int d = 0; d < qs.max_doublings; ++d) {
        // New samples are the midpoints of the current grid.
        const double h = T / n;
        double mid = 0.0;
        for (int j = 0; j < n; ++j) mid += f((j + 0.5) * h);
        sum += mid;
        n *= 2;
        const double next = sum * T / n;
        if (std::abs(next - estimate) <= qs.abs_tol) return next;
        estimate = next;
    }
    throw NoConvergence("periodic quadrature did not converge within the doubling budget");
}

}  // namespace orbits
