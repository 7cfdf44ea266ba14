#include "orbits/loops.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "orbits/errors.hpp"

namespace orbits {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

Vec2 FourierLoop::position(double t) const {
    const double w = kTwoPi / T;
    Vec2 q{};
    for (int j = 0; j < harmonics(); ++j) {
        const double ph = w * harmonic_order(j) * t;
        const double c = std::cos(ph), s = std::sin(ph);
        q += c * cos_c[static_cast<size_t>(j)] + s * sin_c[static_cast<size_t>(j)];
    }
    return q;
}

Vec2 FourierLoop::velocity(double t) const {
    const double w = kTwoPi / T;
    Vec2 v{};
    for (int j = 0; j < harmonics(); ++j) {
        const double wk = w * harmonic_order(j);
        const double ph = wk * t;
        const double c = std::cos(ph), s = std::sin(ph);
        v += wk * (-s * cos_c[static_cast<size_t>(j)] + c * sin_c[static_cast<size_t>(j)]);
    }
    return v;
}

Vec2 FourierLoop::acceleration(double t) const {
    const double w = kTwoPi / T;
    Vec2 a{};
    for (int j = 0; j < harmonics(); ++j) {
        const double wk = w * harmonic_order(j);
        const double ph = wk * t;
        const double c = std::cos(ph), s = std::sin(ph);
        a += -wk * wk * (c * cos_c[static_cast<size_t>(j)] + s * sin_c[static_cast<size_t>(j)]);
    }
    return a;
}

Vec2 elliptic_loop_position(const EllipticLoopParams& p, const PrimaryConfig& cfg, double t) {
    const double ph = -kTwoPi * t / cfg.T + p.theta;
    return primary_position(cfg, 0, t) + Vec2{p.a * std::cos(ph), p.b * std::sin(ph)};
}

Vec2 elliptic_loop_velocity(const EllipticLoopParams& p, const PrimaryConfig& cfg, double t) {
    const double w = kTwoPi / cfg.T;
    const double ph = -w * t + p.theta;
    return primary_velocity(cfg, 0, t) + Vec2{p.a * w * std::sin(ph), -p.b * w * std::cos(ph)};
}

Vec2 circular_loop_position(const CircularLoopParams& p, const PrimaryConfig& cfg, double t) {
    const double ph = kTwoPi * t / cfg.T + p.theta;
    return primary_position(cfg, 0, t) + Vec2{p.a * std::cos(ph), p.a * std::sin(ph)};
}

Vec2 circular_loop_velocity(const CircularLoopParams& p, const PrimaryConfig& cfg, double t) {
    const double w = kTwoPi / cfg.T;
    const double ph = w * t + p.theta;
    return primary_velocity(cfg, 0, t) + Vec2{-p.a * w * std::sin(ph), p.a * w * std::cos(ph)};
}

Loop make_loop(const EllipticLoopParams& p, const PrimaryConfig& cfg) {
    return Loop{cfg.T,
                [p, cfg](double t) { return elliptic_loop_position(p, cfg, t); },
                [p, cfg](double t) { return elliptic_loop_velocity(p, cfg, t); }};
}

Loop make_loop(const CircularLoopParams& p, const PrimaryConfig& cfg) {
    return Loop{cfg.T,
                [p, cfg](double t) { return circular_loop_position(p, cfg, t); },
                [p, cfg](double t) { return circular_loop_velocity(p, cfg, t); }};
}

Loop make_loop(const FourierLoop& loop) {
    return Loop{loop.T,
                [loop](double t) { return loop.position(t); },
                [loop](double t) { return loop.velocity(t); }};
}

FourierLoop project_to_fourier(const std::function<Vec2(double)>& source, double T,
                               int K, int N) {
    if (N < 4 * K)
        throw GridTooCoarse("projection grid must have at least 4K points");

    std::vector<Vec2> samples(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) samples[static_cast<size_t>(j)] = source(j * T / N);

    FourierLoop out;
    out.T = T;
    out.cos_c.resize(static_cast<size_t>(K));
    out.sin_c.resize(static_cast<size_t>(K));
    for (int jk = 0; jk < K; ++jk) {
        const int k = 2 * jk + 1;
        Vec2 c{}, s{};
        for (int j = 0; j < N; ++j) {
            const double ph = kTwoPi * k * j / N;
            c += std::cos(ph) * samples[static_cast<size_t>(j)];
            s += std::sin(ph) * samples[static_cast<size_t>(j)];
        }
        out.cos_c[static_cast<size_t>(jk)] = (2.0 / N) * c;
        out.sin_c[static_cast<size_t>(jk)] = (2.0 / N) * s;
    }
    return out;
}

SampledLoop sample_loop(const Loop& loop, int N) {
    SampledLoop s;
    s.times.resize(static_cast<size_t>(N));
    s.positions.resize(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) {
        const double t = j * loop.T / N;
        s.times[static_cast<size_t>(j)] = t;
        s.positions[static_cast<size_t>(j)] = loop.pos(t);
    }
    return s;
}

namespace {

// Golden-section minimization of a smooth scalar function on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return std::min(fc, fd);
}

}  // namespace

std::array<double, 3> min_separation(const Loop& loop, const PrimaryConfig& cfg, int N) {
    std::array<double, 3> result{};
    const double h = loop.T / N;
    for (int i = 0; i < 3; ++i) {
        auto sep = [&](double t) { return norm(loop.pos(t) - primary_position(cfg, i, t)); };
        double best = sep(0.0);
        int best_j = 0;
        for (int j = 1; j < N; ++j) {
            const double d = sep(j * h);
            if (d < best) { best = d; best_j = j; }
        }
        const double refined = golden_min(sep, (best_j - 1) * h, (best_j + 1) * h, 1e-10);
        result[static_cast<size_t>(i)] = std::min(best, refined);
    }
    return result;
}

double integral_pos_sq(const FourierLoop& loop) {
    double s = 0.0;
    for (int j = 0; j < loop.harmonics(); ++j)
        s += norm2(loop.cos_c[static_cast<size_t>(j)]) + norm2(loop.sin_c[static_cast<size_t>(j)]);
    return s * loop.T / 2.0;
}

double integral_vel_sq(const FourierLoop& loop) {
    const double w = kTwoPi / loop.T;
    double s = 0.0;
    for (int j = 0; j < loop.harmonics(); ++j) {
        const double wk = w * loop.harmonic_order(j);
        s += wk * wk * (norm2(loop.cos_c[static_cast<size_t>(j)]) +
                        norm2(loop.sin_c[static_cast<size_t>(j)]));
    }
    return s * loop.T / 2.0;
}

std::string fourier_to_json(const FourierLoop& loop) {
    nlohmann::json j;
    j["T"] = loop.T;
    j["K"] = loop.harmonics();
    auto& jo = j["orders"] = nlohmann::json::array();
    for (int k = 0; k < loop.harmonics(); ++k) jo.push_back(loop.harmonic_order(k));
    auto& jc = j["cos"] = nlohmann::json::array();
    auto& js = j["sin"] = nlohmann::json::array();
    for (int k = 0; k < loop.harmonics(); ++k) {
        jc.push_back({loop.cos_c[static_cast<size_t>(k)].x, loop.cos_c[static_cast<size_t>(k)].y});
        js.push_back({loop.sin_c[static_cast<size_t>(k)].x, loop.sin_c[static_cast<size_t>(k)].y});
    }
    return j.dump(2);
}

FourierLoop fourier_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid loop JSON: ") + e.what());
    }
    if (!j.contains("T") || !j.contains("K") || !j.contains("cos") || !j.contains("sin"))
        throw ParseError("loop JSON must contain T, K, cos, sin");

    FourierLoop loop;
    loop.T = j["T"].get<double>();
    const int K = j["K"].get<int>();
    if (loop.T <= 0.0) throw ParseError("loop period T must be positive");
    if (K <= 0) throw ParseError("loop must retain at least one harmonic");
    const auto& jc = j["cos"];
    const auto& js = j["sin"];
    if (static_cast<int>(jc.size()) != K || static_cast<int>(js.size()) != K)
        throw ParseError("cos/sin arrays must each have K entries (odd harmonics only)");
    if (j.contains("orders")) {
        // the stored basis must be exactly the odd orders 1, 3, ..., 2K-1;
        // anything else breaks the q(t + T/2) = -q(t) symmetry
        const auto& jo = j["orders"];
        if (static_cast<int>(jo.size()) != K)
            throw ParseError("orders must list K harmonic orders");
        for (int k = 0; k < K; ++k)
            if (jo[static_cast<size_t>(k)].get<int>() != 2 * k + 1)
                throw ParseError("orders must be the odd harmonics 1, 3, ..., 2K-1");
    }
    for (int k = 0; k < K; ++k) {
        if (jc[static_cast<size_t>(k)].size() != 2 || js[static_cast<size_t>(k)].size() != 2)
            throw ParseError("each coefficient must be a 2-vector");
        Vec2 c{jc[static_cast<size_t>(k)][0].get<double>(), jc[static_cast<size_t>(k)][1].get<double>()};
        Vec2 s{js[static_cast<size_t>(k)][0].get<double>(), js[static_cast<size_t>(k)][1].get<double>()};
        if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(s.x) || !std::isfinite(s.y))
            throw ParseError("coefficients must be finite");
        loop.cos_c.push_back(c);
        loop.sin_c.push_back(s);
    }
    return loop;
}

void write_sampled_csv(std::ostream& out, const SampledLoop& loop) {
    out << "t,x,y\n";
    out.precision(17);
    for (size_t j = 0; j < loop.times.size(); ++j)
        out << loop.times[j] << ',' << loop.positions[j].x << ',' << loop.positions[j].y << '\n';
}

}  // namespace orbits
