#pragma once

#include <stdexcept>
#include <string>

namespace orbits {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveMass : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct CollisionOnPath : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct PointOnCurve : Error { using Error::Error; };
struct Undersampled : Error { using Error::Error; };
struct CollisionSingularity : Error { using Error::Error; };
struct SingularityApproach : Error { using Error::Error; };
struct StepTooSmall : Error { using Error::Error; };
struct CollisionApproach : Error { using Error::Error; };
struct NotDescending : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace orbits
