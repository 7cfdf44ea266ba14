#include "orbits/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "orbits/action.hpp"
#include "orbits/errors.hpp"
#include "orbits/winding.hpp"

namespace orbits {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Grid-discretized action and its exact coefficient gradient. The kinetic
// term is the Parseval closed form; the potential term is the N-point
// periodic trapezoid sum. Tracks the smallest grid separation per primary.
struct GridEvaluation {
    double action = 0.0;
    std::array<double, 3> min_sep{1e300, 1e300, 1e300};
};

GridEvaluation evaluate_on_grid(const FourierLoop& loop, const Masses& masses,
                                const PrimaryConfig& cfg, int N) {
    GridEvaluation ev;
    ev.action = 0.5 * integral_vel_sq(loop);
    double pot = 0.0;
    for (int j = 0; j < N; ++j) {
        const double t = j * loop.T / N;
        const Vec2 q = loop.position(t);
        for (int i = 0; i < 3; ++i) {
            const double d = norm(q - primary_position(cfg, i, t));
            ev.min_sep[static_cast<size_t>(i)] =
                std::min(ev.min_sep[static_cast<size_t>(i)], d);
            pot += masses[i] / d;
        }
    }
    ev.action += pot * loop.T / N;
    return ev;
}

FourierLoop gradient_on_grid(const FourierLoop& loop, const Masses& masses,
                             const PrimaryConfig& cfg, int N) {
    const int K = loop.harmonics();
    const double w = kTwoPi / loop.T;

    FourierLoop grad;
    grad.T = loop.T;
    grad.cos_c.assign(static_cast<size_t>(K), Vec2{});
    grad.sin_c.assign(static_cast<size_t>(K), Vec2{});

    // Kinetic part: d/dc of (1/2) sum (w k)^2 (T/2)(|c|^2+|s|^2).
    for (int jk = 0; jk < K; ++jk) {
        const double wk = w * loop.harmonic_order(jk);
        const double kin = wk * wk * loop.T / 2.0;
        grad.cos_c[static_cast<size_t>(jk)] = kin * loop.cos_c[static_cast<size_t>(jk)];
        grad.sin_c[static_cast<size_t>(jk)] = kin * loop.sin_c[static_cast<size_t>(jk)];
    }

    // Potential part: pair dV/dq = -sum_i m_i (q - q_i)/|q - q_i|^3 with each
    // basis function under the same trapezoid weights.
    for (int j = 0; j < N; ++j) {
        const double t = j * loop.T / N;
        const Vec2 q = loop.position(t);
        Vec2 dV{};
        for (int i = 0; i < 3; ++i) {
            const Vec2 d = q - primary_position(cfg, i, t);
            const double r = norm(d);
            dV += (-masses[i] / (r * r * r)) * d;
        }
        dV *= loop.T / N;
        for (int jk = 0; jk < K; ++jk) {
            const double ph = w * loop.harmonic_order(jk) * t;
            grad.cos_c[static_cast<size_t>(jk)] += std::cos(ph) * dV;
            grad.sin_c[static_cast<size_t>(jk)] += std::sin(ph) * dV;
        }
    }
    return grad;
}

double max_norm(const FourierLoop& g) {
    double m = 0.0;
    for (const Vec2& v : g.cos_c) m = std::max({m, std::abs(v.x), std::abs(v.y)});
    for (const Vec2& v : g.sin_c) m = std::max({m, std::abs(v.x), std::abs(v.y)});
    return m;
}

int default_grid(const FourierLoop& loop) {
    int n = 256;
    while (n < 8 * loop.harmonics()) n *= 2;
    return n;
}

}  // namespace

FourierLoop action_gradient(const FourierLoop& loop, const Masses& masses,
                            const PrimaryConfig& cfg, const QuadratureSettings& qs) {
    int N = std::max(default_grid(loop), qs.initial_points);
    FourierLoop g = gradient_on_grid(loop, masses, cfg, N);
    for (int d = 0; d < qs.max_doublings; ++d) {
        FourierLoop g2 = gradient_on_grid(loop, masses, cfg, 2 * N);
        double change = 0.0;
        for (int jk = 0; jk < g.harmonics(); ++jk) {
            change = std::max(change, norm(g2.cos_c[static_cast<size_t>(jk)] -
                                           g.cos_c[static_cast<size_t>(jk)]));
            change = std::max(change, norm(g2.sin_c[static_cast<size_t>(jk)] -
                                           g.sin_c[static_cast<size_t>(jk)]));
        }
        g = std::move(g2);
        N *= 2;
        if (change <= qs.abs_tol) return g;
    }
    throw NoConvergence("action gradient did not stabilize under grid doubling");
}

MinimizeResult minimize_action(const FourierLoop& init, const Masses& masses,
                               const PrimaryConfig& cfg, const MinimizeOptions& opts) {
    const double floor = opts.collision_floor > 0.0 ? opts.collision_floor : 1e-4 * cfg.l;

    // Working copy padded/truncated to K harmonics.
    FourierLoop x = init;
    x.cos_c.resize(static_cast<size_t>(opts.K), Vec2{});
    x.sin_c.resize(static_cast<size_t>(opts.K), Vec2{});

    const int N = default_grid(x);
    const double w = kTwoPi / x.T;

    // Kinetic metric diagonal, the preconditioner for the descent direction.
    std::vector<double> precond(static_cast<size_t>(opts.K));
    for (int jk = 0; jk < opts.K; ++jk) {
        const double wk = w * x.harmonic_order(jk);
        precond[static_cast<size_t>(jk)] = 1.0 / (wk * wk * x.T / 2.0);
    }

    auto preconditioned = [&](const FourierLoop& g) {
        FourierLoop d = g;
        for (int jk = 0; jk < opts.K; ++jk) {
            d.cos_c[static_cast<size_t>(jk)] *= precond[static_cast<size_t>(jk)];
            d.sin_c[static_cast<size_t>(jk)] *= precond[static_cast<size_t>(jk)];
        }
        return d;
    };
    auto inner = [&](const FourierLoop& a, const FourierLoop& b) {
        double s = 0.0;
        for (int jk = 0; jk < opts.K; ++jk) {
            s += dot(a.cos_c[static_cast<size_t>(jk)], b.cos_c[static_cast<size_t>(jk)]);
            s += dot(a.sin_c[static_cast<size_t>(jk)], b.sin_c[static_cast<size_t>(jk)]);
        }
        return s;
    };
    auto axpy = [&](const FourierLoop& base, double alpha, const FourierLoop& dir) {
        FourierLoop out = base;
        for (int jk = 0; jk < opts.K; ++jk) {
            out.cos_c[static_cast<size_t>(jk)] += alpha * dir.cos_c[static_cast<size_t>(jk)];
            out.sin_c[static_cast<size_t>(jk)] += alpha * dir.sin_c[static_cast<size_t>(jk)];
        }
        return out;
    };

    GridEvaluation ev = evaluate_on_grid(x, masses, cfg, N);
    FourierLoop g = gradient_on_grid(x, masses, cfg, N);

    MinimizeResult result;
    result.loop = x;
    result.action = ev.action;
    // Stationarity is measured on the preconditioned gradient: raw components
    // at harmonic k carry a (2 pi k / T)^2 kinetic weight, so their raw size
    // says nothing about how much action an admissible step could release.
    result.grad_norm = max_norm(preconditioned(g));
    result.min_separations = ev.min_sep;

    if (result.grad_norm <= opts.grad_tol) {
        result.converged = true;
        result.status = MinimizeStatus::Converged;
        return result;
    }

    double alpha = 0.25;   // preconditioned Hessian is O(1), so this is a mild start
    FourierLoop prev_x = x, prev_g = g;
    bool have_prev = false;

    for (int iter = 1; iter <= opts.max_iters; ++iter) {
        const FourierLoop ghat = preconditioned(g);
        const double slope = inner(g, ghat);   // positive

        if (have_prev) {
            // BB step in the kinetic metric: <s, s>_B / <s, y>, with
            // <s, s>_B recovered from the unpreconditioned difference.
            FourierLoop s = axpy(x, -1.0, prev_x);
            FourierLoop y = axpy(g, -1.0, prev_g);
            double ss = 0.0;
            for (int jk = 0; jk < opts.K; ++jk) {
                const double inv_p = 1.0 / precond[static_cast<size_t>(jk)];
                ss += inv_p * (norm2(s.cos_c[static_cast<size_t>(jk)]) +
                               norm2(s.sin_c[static_cast<size_t>(jk)]));
            }
            const double sy = inner(s, y);
            if (sy > 0.0) alpha = std::clamp(ss / sy, 1e-10, 1e4);
        }

        // Armijo backtracking along -ghat, rejecting collision-bound trials.
        double tau = 1.0;
        FourierLoop cand;
        GridEvaluation cand_ev;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            cand = axpy(x, -tau * alpha, ghat);
            cand_ev = evaluate_on_grid(cand, masses, cfg, N);
            const double floor_hit =
                *std::min_element(cand_ev.min_sep.begin(), cand_ev.min_sep.end());
            if (floor_hit > floor &&
                cand_ev.action <= ev.action - 1e-4 * tau * alpha * slope) {
                accepted = true;
                break;
            }
            tau *= 0.5;
        }
        if (!accepted)
            throw NotDescending("line search failed to reduce the action at a nonzero gradient");

        prev_x = std::move(x);
        prev_g = std::move(g);
        have_prev = true;
        x = std::move(cand);
        ev = cand_ev;
        g = gradient_on_grid(x, masses, cfg, N);

        result.iterations = iter;
        result.grad_norm = max_norm(preconditioned(g));
        result.action = ev.action;
        result.min_separations = ev.min_sep;

        if (opts.keep_log)
            result.log.push_back(IterationRow{iter, ev.action, result.grad_norm,
                                              ev.min_sep, tau * alpha});

        const double closest = *std::min_element(ev.min_sep.begin(), ev.min_sep.end());
        if (closest <= 1.05 * floor) {
            // Next step would risk crossing the floor; stop at the last safe point.
            result.loop = x;
            result.converged = false;
            result.status = MinimizeStatus::CollisionApproach;
            result.min_separations = min_separation(make_loop(x), cfg, N);
            return result;
        }
        if (result.grad_norm <= opts.grad_tol) {
            result.loop = x;
            result.converged = true;
            result.status = MinimizeStatus::Converged;
            result.min_separations = min_separation(make_loop(x), cfg, N);
            return result;
        }
    }

    result.loop = x;
    result.converged = false;
    result.status = MinimizeStatus::MaxIterations;
    result.min_separations = min_separation(make_loop(x), cfg, N);
    return result;
}

CertificationReport certify_minimizer(const MinimizeResult& result, const Masses& masses,
                                      const PrimaryConfig& cfg, int expected_degree,
                                      double collision_floor) {
    const double floor = collision_floor > 0.0 ? collision_floor : 1e-4 * cfg.l;

    CertificationReport report;
    const Loop loop = make_loop(result.loop);

    double coeff_scale = 0.0;
    for (const Vec2& c : result.loop.cos_c) coeff_scale = std::max(coeff_scale, norm(c));
    for (const Vec2& s : result.loop.sin_c) coeff_scale = std::max(coeff_scale, norm(s));
    if (coeff_scale <= 1e-14 * cfg.l) {
        report.reason = "degenerate zero loop: winding degree about the first primary is undefined";
        return report;
    }

    const WindingResult wind = winding_number(
        [&](double t) { return loop.pos(t) - primary_position(cfg, 0, t); },
        loop.T, Vec2{0.0, 0.0});
    report.degree = wind.degree;

    report.action = action_direct(loop, masses, cfg).total;
    const BoundReport bound = collision_lower_bound_d1(masses, cfg.T);
    report.d1 = bound.d1;
    report.margin = bound.d1 - report.action;
    report.separations = min_separation(loop, cfg, 1024);

    const ResidualReport res = el_residual(result.loop, masses, cfg, 1024);
    report.l2_residual = res.l2_residual;
    report.max_residual = res.max_residual;
    report.periodicity_error = periodicity_error(cfg, masses, result.loop, 1e-10);

    report.passes = true;
    auto fail = [&](const std::string& why) {
        if (report.passes) report.reason = why;
        report.passes = false;
    };
    if (!result.converged) fail("descent did not converge");
    if (report.degree != expected_degree) fail("winding degree changed during descent");
    if (!(report.action < report.d1)) fail("action does not beat the collision bound d1");
    for (double s : report.separations)
        if (!(s > floor)) fail("separation at or below the collision floor");
    if (!(report.l2_residual <= 1e-4)) fail("Euler-Lagrange residual above 1e-4");
    if (!(report.periodicity_error <= 1e-3)) fail("periodicity error above 1e-3");
    return report;
}

void write_iteration_csv(std::ostream& out, const std::vector<IterationRow>& log) {
    out << "iter,action,grad_norm,min_sep1,min_sep2,min_sep3,step\n";
    out.precision(17);
    for (const IterationRow& row : log)
        out << row.iter << ',' << row.action << ',' << row.grad_norm << ','
            << row.min_sep[0] << ',' << row.min_sep[1] << ',' << row.min_sep[2] << ','
            << row.step << '\n';
}

}  // namespace orbits
