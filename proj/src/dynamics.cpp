#include "orbits/dynamics.hpp"

#include <cmath>
#include <ostream>

#include "orbits/errors.hpp"

namespace orbits {

Vec2 rhs(const PrimaryConfig& cfg, const Masses& masses, double t, Vec2 q) {
    Vec2 a{};
    for (int i = 0; i < 3; ++i) {
        const Vec2 d = primary_position(cfg, i, t) - q;
        const double r = norm(d);
        if (masses[i] != 0.0 && r < 1e-12 * cfg.l)
            throw CollisionSingularity("evaluation point coincides with a primary");
        if (masses[i] != 0.0) a += (masses[i] / (r * r * r)) * d;
    }
    return a;
}

namespace {

State rk4_step(const PrimaryConfig& cfg, const Masses& masses, const State& s, double h) {
    auto accel = [&](double t, Vec2 q) { return rhs(cfg, masses, t, q); };
    const Vec2 k1v = accel(s.time, s.position);
    const Vec2 k1x = s.velocity;
    const Vec2 k2v = accel(s.time + h / 2, s.position + (h / 2) * k1x);
    const Vec2 k2x = s.velocity + (h / 2) * k1v;
    const Vec2 k3v = accel(s.time + h / 2, s.position + (h / 2) * k2x);
    const Vec2 k3x = s.velocity + (h / 2) * k2v;
    const Vec2 k4v = accel(s.time + h, s.position + h * k3x);
    const Vec2 k4x = s.velocity + h * k3v;
    State out;
    out.position = s.position + (h / 6) * (k1x + 2 * k2x + 2 * k3x + k4x);
    out.velocity = s.velocity + (h / 6) * (k1v + 2 * k2v + 2 * k3v + k4v);
    out.time = s.time + h;
    return out;
}

std::vector<State> run_fixed_step(const PrimaryConfig& cfg, const Masses& masses,
                                  const State& s0, double t_end, int steps) {
    std::vector<State> traj;
    traj.reserve(static_cast<size_t>(steps) + 1);
    traj.push_back(s0);
    const double h = (t_end - s0.time) / steps;
    State s = s0;
    for (int k = 0; k < steps; ++k) {
        for (int i = 0; i < 3; ++i) {
            if (masses[i] == 0.0) continue;
            if (norm(s.position - primary_position(cfg, i, s.time)) < 1e-6 * cfg.l)
                throw SingularityApproach("trajectory came within 1e-6*l of a primary");
        }
        s = rk4_step(cfg, masses, s, h);
        traj.push_back(s);
    }
    return traj;
}

}  // namespace

std::vector<State> integrate(const PrimaryConfig& cfg, const Masses& masses,
                             const State& s0, double t_end, double step_tol) {
    const double span = t_end - s0.time;
    int steps = 64;
    std::vector<State> traj = run_fixed_step(cfg, masses, s0, t_end, steps);
    while (true) {
        if (span / (2.0 * steps) < 1e-12 * cfg.T)
            throw StepTooSmall("step fell below 1e-12*T before reaching step_tol");
        std::vector<State> finer = run_fixed_step(cfg, masses, s0, t_end, steps * 2);
        const Vec2 dq = finer.back().position - traj.back().position;
        const Vec2 dv = finer.back().velocity - traj.back().velocity;
        const double change = std::max(norm(dq), norm(dv));
        traj = std::move(finer);
        steps *= 2;
        if (change <= step_tol) return traj;
    }
}

ResidualReport el_residual(const FourierLoop& loop, const Masses& masses,
                           const PrimaryConfig& cfg, int N) {
    const auto sep = min_separation(make_loop(loop), cfg, N);
    for (double s : sep)
        if (s < 1e-12 * cfg.l) throw CollisionOnPath("loop passes through a primary");

    const double scale = std::pow(2.0 * M_PI / loop.T, 2.0) * cfg.l;
    double sum_sq = 0.0, max_r = 0.0;
    for (int j = 0; j < N; ++j) {
        const double t = j * loop.T / N;
        const Vec2 r = loop.acceleration(t) - rhs(cfg, masses, t, loop.position(t));
        const double rn = norm(r);
        sum_sq += rn * rn;
        max_r = std::max(max_r, rn);
    }
    ResidualReport report;
    report.l2_residual = std::sqrt(sum_sq / N) / scale;
    report.max_residual = max_r / scale;
    return report;
}

double periodicity_error(const PrimaryConfig& cfg, const Masses& masses,
                         const FourierLoop& loop, double step_tol) {
    State s0{loop.position(0.0), loop.velocity(0.0), 0.0};
    const auto traj = integrate(cfg, masses, s0, loop.T, step_tol);
    const Vec2 dq = traj.back().position - s0.position;
    const Vec2 dv = traj.back().velocity - s0.velocity;
    return std::max(norm(dq) / cfg.l, norm(dv) * loop.T / (2.0 * M_PI * cfg.l));
}

void write_trajectory_csv(std::ostream& out, const std::vector<State>& trajectory) {
    out << "t,x,y,vx,vy\n";
    out.precision(17);
    for (const State& s : trajectory)
        out << s.time << ',' << s.position.x << ',' << s.position.y << ','
            << s.velocity.x << ',' << s.velocity.y << '\n';
}

}  // namespace orbits
