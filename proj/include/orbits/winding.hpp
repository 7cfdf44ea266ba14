#pragma once

#include <functional>

#include "orbits/loops.hpp"
#include "orbits/vec2.hpp"

namespace orbits {

struct WindingResult {
    int degree = 0;
    double max_step = 0.0;   // largest single signed angle increment seen (radians)
};

// Winding number of a T-periodic closed curve about the point p: sum of
// signed angle increments of (x(t)-p)/|x(t)-p| between consecutive samples.
// Starts at N samples; if any increment reaches pi/2 the grid is doubled
// internally (up to 2^16 points) before giving up with Undersampled.
// Throws PointOnCurve if p lies within 1e-12 * diameter of a sample.
WindingResult winding_number(const std::function<Vec2(double)>& curve, double T,
                             Vec2 p, int N = 256);

// Fixed-sample variant; cannot refine, so it throws Undersampled outright
// when an increment reaches pi/2.
WindingResult winding_number(const SampledLoop& curve, Vec2 p);

}  // namespace orbits
