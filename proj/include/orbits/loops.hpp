#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbits/config.hpp"
#include "orbits/vec2.hpp"

namespace orbits {

// Elliptic test loop: q(t) = q1(t) + (a cos(-2pi t/T + theta), b sin(-2pi t/T + theta)).
// The relative curve is traversed clockwise, so deg(q - q1) = -1.
struct EllipticLoopParams {
    double a = 0.0;
    double b = 0.0;
    double theta = 0.0;
};

// Circular test loop: q(t) = q1(t) + a (cos(2pi t/T + theta), sin(2pi t/T + theta)),
// counterclockwise relative curve, deg(q - q1) = +1.
struct CircularLoopParams {
    double a = 0.0;
    double theta = 0.0;
};

// Anti-T/2-symmetric planar loop stored as odd-harmonic trigonometric
// coefficients. Harmonic j of the arrays is k = 2j+1, so
//   q(t) = sum_j cos_c[j] cos(2pi k t/T) + sin_c[j] sin(2pi k t/T)
// and q(t + T/2) = -q(t) holds exactly by construction.
struct FourierLoop {
    double T = 1.0;
    std::vector<Vec2> cos_c;
    std::vector<Vec2> sin_c;

    int harmonics() const { return static_cast<int>(cos_c.size()); }
    int harmonic_order(int j) const { return 2 * j + 1; }

    Vec2 position(double t) const;
    Vec2 velocity(double t) const;
    Vec2 acceleration(double t) const;
};

struct SampledLoop {
    std::vector<double> times;
    std::vector<Vec2> positions;
};

// A loop presented as analytic position and velocity functions of time.
struct Loop {
    double T = 1.0;
    std::function<Vec2(double)> pos;
    std::function<Vec2(double)> vel;
};

Vec2 elliptic_loop_position(const EllipticLoopParams& p, const PrimaryConfig& cfg, double t);
Vec2 elliptic_loop_velocity(const EllipticLoopParams& p, const PrimaryConfig& cfg, double t);
Vec2 circular_loop_position(const CircularLoopParams& p, const PrimaryConfig& cfg, double t);
Vec2 circular_loop_velocity(const CircularLoopParams& p, const PrimaryConfig& cfg, double t);

Loop make_loop(const EllipticLoopParams& p, const PrimaryConfig& cfg);
Loop make_loop(const CircularLoopParams& p, const PrimaryConfig& cfg);
Loop make_loop(const FourierLoop& loop);

// Discrete Fourier projection of a T-periodic source onto the odd harmonics
// k = 1, 3, ..., 2K-1 using an N-point uniform grid. Requires N >= 4K
// (throws GridTooCoarse). Band-limited anti-symmetric sources are
// reconstructed exactly; arbitrary sources are symmetrized by construction.
FourierLoop project_to_fourier(const std::function<Vec2(double)>& source, double T,
                               int K, int N);

SampledLoop sample_loop(const Loop& loop, int N);

// Minimum distance from the loop to each primary over one period: grid scan
// on N points refined by golden-section search to absolute tolerance 1e-10.
std::array<double, 3> min_separation(const Loop& loop, const PrimaryConfig& cfg, int N);

// Closed-form integrals over one period from the coefficients:
//   int |q|^2 dt  and  int |q'|^2 dt  (Parseval).
double integral_pos_sq(const FourierLoop& loop);
double integral_vel_sq(const FourierLoop& loop);

// Serialization. FourierLoop <-> JSON {T, K, cos: [[cx,cy]...], sin: [[sx,sy]...]},
// harmonics in ascending odd order; SampledLoop -> CSV with header t,x,y.
std::string fourier_to_json(const FourierLoop& loop);
FourierLoop fourier_from_json(const std::string& text);
void write_sampled_csv(std::ostream& out, const SampledLoop& loop);

}  // namespace orbits
