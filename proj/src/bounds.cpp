#include "orbits/bounds.hpp"

#include <cmath>

namespace orbits {

namespace {
const double kPrefactor = 1.5 * std::pow(2.0 * M_PI, 2.0 / 3.0);
}

double gordon_bound(double a, double t1, double t2) {
    return kPrefactor * std::pow(a, 2.0 / 3.0) * std::cbrt(t2 - t1);
}

double long_zhang_bound(double a, double T) {
    return kPrefactor * std::pow(a, 2.0 / 3.0) * std::cbrt(T);
}

BoundReport collision_constant_C(const Masses& masses) {
    const double M = masses.total();
    const double shared = masses.pair_sum() / (3.0 * M);
    const double two23 = std::pow(2.0, 2.0 / 3.0);

    BoundReport report;
    for (int i = 0; i < 3; ++i)
        report.per_body_terms[static_cast<size_t>(i)] =
            two23 * masses[i] + (M - masses[i]) - shared;

    report.min_index = 0;
    for (int i = 1; i < 3; ++i)
        if (report.per_body_terms[static_cast<size_t>(i)] <
            report.per_body_terms[static_cast<size_t>(report.min_index)])
            report.min_index = i;
    report.C = report.per_body_terms[static_cast<size_t>(report.min_index)];
    return report;
}

BoundReport collision_lower_bound_d1(const Masses& masses, double T) {
    BoundReport report = collision_constant_C(masses);
    report.d1 = kPrefactor * report.C * std::pow(masses.total(), -1.0 / 3.0) * std::cbrt(T);
    return report;
}

Certificate certify_noncollision(double test_action, const BoundReport& report) {
    return Certificate{test_action < report.d1, report.d1 - test_action};
}

}  // namespace orbits
