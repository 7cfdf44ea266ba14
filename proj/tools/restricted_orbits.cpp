// restricted-orbits: reference-table checks, action minimization, and
// certification for the planar restricted four-body setup.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbits/action.hpp"
#include "orbits/bounds.hpp"
#include "orbits/config.hpp"
#include "orbits/dynamics.hpp"
#include "orbits/errors.hpp"
#include "orbits/loops.hpp"
#include "orbits/minimize.hpp"
#include "orbits/tables.hpp"
#include "orbits/winding.hpp"

using nlohmann::json;
using namespace orbits;

namespace {

int thread_budget() {
    if (const char* env = std::getenv("RESTRICTED_ORBITS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 4;
}

struct RowResult {
    TableRow row;
    double d1_ours = 0.0;
    double d_ours = 0.0;
    bool d1_ok = false;
    bool d_ok = false;
    bool certified = false;
};

double d_tolerance(int table) { return table == 1 ? 1e-5 : 5e-6; }

RowResult check_row(const TableRow& row) {
    const Masses m = masses_new(row.m1, row.m2, row.m3);
    const PrimaryConfig cfg = lagrange_orbits(m, 1.0);
    RowResult out;
    out.row = row;

    const BoundReport b = collision_lower_bound_d1(m, cfg.T);
    out.d1_ours = b.d1;
    out.d1_ok = std::abs(b.d1 - row.d1_ref) <= 1e-6;

    if (row.elliptic()) {
        out.d_ours = action_d2(EllipticLoopParams{row.a, row.b, row.theta()}, m, cfg);
    } else {
        out.d_ours = action_d3(CircularLoopParams{row.a, row.theta()}, m, cfg);
    }
    out.d_ok = std::abs(out.d_ours - row.d_ref) <= d_tolerance(row.table);
    out.certified = certify_noncollision(out.d_ours, b).passes;
    return out;
}

int cmd_tables(const std::vector<int>& which, const std::string& out_path) {
    std::vector<TableRow> rows;
    if (which.empty()) {
        rows = reference_rows();
    } else {
        for (int t : which) {
            const auto part = reference_rows(t);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    }
    if (rows.empty()) {
        std::cerr << "no rows selected\n";
        return 2;
    }

    const int budget = thread_budget();
    std::vector<RowResult> results(rows.size());
    std::size_t next = 0;
    while (next < rows.size()) {
        std::vector<std::future<RowResult>> batch;
        for (int k = 0; k < budget && next + k < rows.size(); ++k) {
            const TableRow& row = rows[next + k];
            batch.push_back(std::async(std::launch::async, check_row, row));
        }
        for (std::size_t k = 0; k < batch.size(); ++k) {
            results[next + k] = batch[k].get();
        }
        next += batch.size();
    }

    std::ostringstream csv;
    csv << "table,a,b,theta,m1,m2,m3,d1_ref,d1_ours,d1_absdiff,"
           "d_ref,d_ours,d_absdiff,certified\n";
    csv << std::setprecision(12);
    int bad = 0;
    for (const RowResult& r : results) {
        csv << r.row.table << ',' << r.row.a << ',' << r.row.b << ','
            << r.row.theta_num << "pi/" << r.row.theta_den << ','
            << r.row.m1 << ',' << r.row.m2 << ',' << r.row.m3 << ','
            << r.row.d1_ref << ',' << r.d1_ours << ','
            << std::abs(r.d1_ours - r.row.d1_ref) << ','
            << r.row.d_ref << ',' << r.d_ours << ','
            << std::abs(r.d_ours - r.row.d_ref) << ','
            << (r.certified ? 1 : 0) << '\n';
        if (!r.d1_ok || !r.d_ok || !r.certified) {
            ++bad;
            std::cerr << "mismatch: table " << r.row.table << " a=" << r.row.a
                      << " b=" << r.row.b << " theta=" << r.row.theta_num << "pi/"
                      << r.row.theta_den << " |dd1|="
                      << std::abs(r.d1_ours - r.row.d1_ref) << " |dd|="
                      << std::abs(r.d_ours - r.row.d_ref)
                      << (r.certified ? "" : " UNCERTIFIED") << '\n';
        }
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open " << out_path << '\n';
            return 2;
        }
        f << csv.str();
    }
    std::cerr << results.size() << " rows, " << bad << " outside tolerance\n";
    return bad == 0 ? 0 : 1;
}

json certification_json(const CertificationReport& cert) {
    return json{{"degree", cert.degree},
                {"action", cert.action},
                {"d1", cert.d1},
                {"margin", cert.margin},
                {"separations", {cert.separations[0], cert.separations[1], cert.separations[2]}},
                {"l2_residual", cert.l2_residual},
                {"max_residual", cert.max_residual},
                {"periodicity_error", cert.periodicity_error},
                {"passes", cert.passes},
                {"reason", cert.reason}};
}

FourierLoop initial_loop(const json& spec, const PrimaryConfig& cfg, int K) {
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "fourier") {
        return fourier_from_json(spec.dump());
    }
    Loop start;
    if (kind == "elliptic") {
        start = make_loop(EllipticLoopParams{spec.at("a").get<double>(),
                                             spec.at("b").get<double>(),
                                             spec.value("theta", 0.0)},
                          cfg);
    } else if (kind == "circular") {
        start = make_loop(CircularLoopParams{spec.at("a").get<double>(),
                                             spec.value("theta", 0.0)},
                          cfg);
    } else {
        throw ParseError("loop.kind must be elliptic, circular, or fourier");
    }
    return project_to_fourier(start.pos, cfg.T, K, std::max(512, 8 * K));
}

int cmd_minimize(const std::string& config_path) {
    std::ifstream f(config_path);
    if (!f) {
        std::cerr << "cannot open " << config_path << '\n';
        return 2;
    }
    json conf = json::parse(f);

    const auto& jm = conf.at("masses");
    const Masses m = masses_new(jm.at(0).get<double>(), jm.at(1).get<double>(),
                                jm.at(2).get<double>());
    const double T = conf.value("T", 1.0);
    const PrimaryConfig cfg = lagrange_orbits(m, T);

    MinimizeOptions opts;
    if (conf.contains("options")) {
        const json& jo = conf["options"];
        opts.K = jo.value("K", opts.K);
        opts.grad_tol = jo.value("grad_tol", opts.grad_tol);
        opts.max_iters = jo.value("max_iters", opts.max_iters);
        opts.collision_floor = jo.value("collision_floor", opts.collision_floor);
        opts.quadrature.abs_tol = jo.value("quad_tol", opts.quadrature.abs_tol);
    }
    opts.keep_log = conf.contains("iteration_log");

    const FourierLoop init = initial_loop(conf.at("loop"), cfg, opts.K);
    const int expected_degree = conf.value("expected_degree",
        winding_number(make_loop(init).pos, cfg.T, primary_position(cfg, 0, 0.0)).degree);

    const MinimizeResult res = minimize_action(init, m, cfg, opts);
    const CertificationReport cert =
        certify_minimizer(res, m, cfg, expected_degree, opts.collision_floor);

    json report{{"masses", {m.m1, m.m2, m.m3}},
                {"T", T},
                {"K", opts.K},
                {"status", res.status == MinimizeStatus::Converged      ? "converged"
                           : res.status == MinimizeStatus::MaxIterations ? "max_iterations"
                                                                         : "collision_approach"},
                {"iterations", res.iterations},
                {"action", res.action},
                {"grad_norm", res.grad_norm},
                {"min_separations",
                 {res.min_separations[0], res.min_separations[1], res.min_separations[2]}},
                {"certificate", certification_json(cert)}};

    if (conf.contains("loop_out")) {
        std::ofstream out(conf["loop_out"].get<std::string>());
        out << fourier_to_json(res.loop) << '\n';
    }
    if (conf.contains("samples_out")) {
        std::ofstream out(conf["samples_out"].get<std::string>());
        write_sampled_csv(out, sample_loop(make_loop(res.loop), 1024));
    }
    if (conf.contains("iteration_log")) {
        std::ofstream out(conf["iteration_log"].get<std::string>());
        write_iteration_csv(out, res.log);
    }
    if (conf.contains("report_out")) {
        std::ofstream out(conf["report_out"].get<std::string>());
        out << report.dump(2) << '\n';
    }
    std::cout << report.dump(2) << '\n';
    return cert.passes ? 0 : 1;
}

int cmd_verify(const std::string& loop_path, double m1, double m2, double m3,
               double T, int expected_degree) {
    std::ifstream f(loop_path);
    if (!f) {
        std::cerr << "cannot open " << loop_path << '\n';
        return 2;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    const FourierLoop loop = fourier_from_json(buf.str());
    if (std::abs(loop.T - T) > 1e-12 * T) {
        std::cerr << "loop period " << loop.T << " does not match T=" << T << '\n';
        return 2;
    }
    const Masses m = masses_new(m1, m2, m3);
    const PrimaryConfig cfg = lagrange_orbits(m, T);

    MinimizeResult res;
    res.loop = loop;
    res.converged = true;
    res.status = MinimizeStatus::Converged;
    const CertificationReport cert = certify_minimizer(res, m, cfg, expected_degree);
    std::cout << certification_json(cert).dump(2) << '\n';
    return cert.passes ? 0 : 1;
}

int cmd_bounds(double m1, double m2, double m3, double T) {
    const Masses m = masses_new(m1, m2, m3);
    const PrimaryConfig cfg = lagrange_orbits(m, T);
    const BoundReport b = collision_lower_bound_d1(m, T);
    json out{{"masses", {m.m1, m.m2, m.m3}},
             {"T", T},
             {"side_length", cfg.l},
             {"radii", {cfg.r[0], cfg.r[1], cfg.r[2]}},
             {"theta", {cfg.theta[0], cfg.theta[1], cfg.theta[2]}},
             {"C", b.C},
             {"d1", b.d1},
             {"per_body_terms", {b.per_body_terms[0], b.per_body_terms[1], b.per_body_terms[2]}},
             {"min_index", b.min_index}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic-orbit action bounds, minimization, and certification"};
    app.require_subcommand(1);

    std::vector<int> which_tables;
    std::string tables_out;
    auto* tables = app.add_subcommand("tables", "recompute the reference tables");
    tables->add_option("--table", which_tables, "restrict to table 1-4 (repeatable)")
        ->check(CLI::Range(1, 4));
    tables->add_option("--out", tables_out, "write CSV here instead of stdout");

    std::string minimize_config;
    auto* minimize = app.add_subcommand("minimize", "minimize the action from a JSON config");
    minimize->add_option("--config", minimize_config, "JSON run configuration")
        ->required()
        ->check(CLI::ExistingFile);

    std::string verify_loop;
    double vm1 = 0, vm2 = 0, vm3 = 0, vT = 1.0;
    int vdeg = 1;
    auto* verify = app.add_subcommand("verify", "certify a stored Fourier loop");
    verify->add_option("--loop", verify_loop, "loop JSON file")->required()->check(CLI::ExistingFile);
    verify->add_option("--m1", vm1)->required();
    verify->add_option("--m2", vm2)->required();
    verify->add_option("--m3", vm3)->required();
    verify->add_option("--T", vT);
    verify->add_option("--degree", vdeg, "expected winding degree about the first primary");

    double bm1 = 0, bm2 = 0, bm3 = 0, bT = 1.0;
    auto* bounds = app.add_subcommand("bounds", "print the collision lower bound");
    bounds->add_option("--m1", bm1)->required();
    bounds->add_option("--m2", bm2)->required();
    bounds->add_option("--m3", bm3)->required();
    bounds->add_option("--T", bT);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tables) return cmd_tables(which_tables, tables_out);
        if (*minimize) return cmd_minimize(minimize_config);
        if (*verify) return cmd_verify(verify_loop, vm1, vm2, vm3, vT, vdeg);
        if (*bounds) return cmd_bounds(bm1, bm2, bm3, bT);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
