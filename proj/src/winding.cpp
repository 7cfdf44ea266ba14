#include "orbits/winding.hpp"

#include <cmath>
#include <vector>

#include "orbits/errors.hpp"

namespace orbits {

namespace {

struct Accumulated {
    bool ok = false;        // false when some increment reached pi/2
    double angle = 0.0;     // total signed angle
    double max_step = 0.0;
};

Accumulated accumulate(const std::vector<Vec2>& pts, Vec2 p) {
    // Curve diameter for the point-on-curve guard.
    double diameter = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); j += pts.size() / 16 + 1)
            diameter = std::max(diameter, norm(pts[i] - pts[j]));
    for (const Vec2& x : pts)
        if (norm(x - p) <= 1e-12 * diameter)
            throw PointOnCurve("reference point lies on the curve");

    Accumulated acc;
    acc.ok = true;
    const size_t n = pts.size();
    for (size_t j = 0; j < n; ++j) {
        const Vec2 u = pts[j] - p;
        const Vec2 v = pts[(j + 1) % n] - p;
        const double step = std::atan2(cross(u, v), dot(u, v));
        if (std::abs(step) >= M_PI / 2.0) {
            acc.ok = false;
            return acc;
        }
        if (std::abs(step) > std::abs(acc.max_step)) acc.max_step = step;
        acc.angle += step;
    }
    return acc;
}

WindingResult to_result(const Accumulated& acc) {
    const double turns = acc.angle / (2.0 * M_PI);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 1e-6)
        throw Undersampled("accumulated winding is not integral");
    return WindingResult{static_cast<int>(rounded), acc.max_step};
}

}  // namespace

WindingResult winding_number(const std::function<Vec2(double)>& curve, double T,
                             Vec2 p, int N) {
    if (N < 64) N = 64;
    for (int n = N; n <= (1 << 16); n *= 2) {
        std::vector<Vec2> pts(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) pts[static_cast<size_t>(j)] = curve(j * T / n);
        const Accumulated acc = accumulate(pts, p);
        if (acc.ok) return to_result(acc);
    }
    throw Undersampled("winding computation still aliased at 2^16 samples");
}

WindingResult winding_number(const SampledLoop& curve, Vec2 p) {
    if (curve.positions.size() < 64)
        throw Undersampled("winding needs at least 64 samples");
    const Accumulated acc = accumulate(curve.positions, p);
    if (!acc.ok)
        throw Undersampled("angle increment reached pi/2; supply a finer sampling");
    return to_result(acc);
}

}  // namespace orbits
