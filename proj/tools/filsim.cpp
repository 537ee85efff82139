// filsim: drive simulations and verification runs of an anchored elastic
// filament in half-plane Stokes flow.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "filament/config.hpp"
#include "filament/equilibria.hpp"
#include "filament/errors.hpp"
#include "filament/io.hpp"
#include "filament/selftest.hpp"
#include "filament/timestepper.hpp"

namespace fs = std::filesystem;
using namespace filament;

namespace {

enum Exit { ok = 0, config_error = 2, geometry_violation = 3, selftest_failure = 4 };

struct Options {
    std::string mode;
    std::string config;
    std::string out_dir = "out";
    std::optional<long> snapshot_every;
    bool seedless = false;
    std::optional<double> area;
    std::optional<double> center;
};

std::ofstream open_output(const fs::path& p)
{
    std::ofstream out(p);
    if (!out)
        throw ConfigError("cannot write " + p.string());
    return out;
}

int run_simulate(const RunConfig& rc, const fs::path& dir, RunManifest& man)
{
    const SimResult res = simulate(rc.sim);
    {
        auto out = open_output(dir / "diagnostics.csv");
        write_diagnostics(out, res.diagnostics);
    }
    {
        auto out = open_output(dir / "trajectory.txt");
        write_trajectory(out, res.snapshots);
    }
    man.outputs = {"diagnostics.csv", "trajectory.txt"};
    if (!res.diagnostics.empty()) {
        const auto& last = res.diagnostics.back();
        std::cout << "steps " << last.step << "  t " << format_double(last.time) << "  max area drift "
                  << format_double(res.max_area_drift()) << "  iso_error " << format_double(last.iso_error)
                  << '\n';
    }
    if (res.aborted) {
        std::cerr << "geometry violation (" << res.violated_invariant << ") at step " << res.violation_step << ": "
                  << res.message << '\n';
        return geometry_violation;
    }
    return ok;
}

int run_selftest_mode()
{
    const auto results = run_selftest();
    bool all = true;
    std::printf("%-34s %-6s %-24s %s\n", "check", "result", "value", "threshold");
    for (const auto& r : results) {
        std::printf("%-34s %-6s %-24s %.3g\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                    format_double(r.value).c_str(), r.threshold);
        all = all && r.passed;
    }
    return all ? ok : selftest_failure;
}

int run_convergence(const RunConfig& rc, const fs::path& dir, RunManifest& man)
{
    SimConfig cfg = rc.sim;
    cfg.dt = rc.convergence_dt;
    cfg.t_final = rc.convergence_t_final;
    const OrderResult order = second_order_check(cfg);
    auto out = open_output(dir / "convergence.csv");
    out << "kind,n_nodes,dt,value\n";
    out << "order," << cfg.n_nodes << ',' << format_double(cfg.dt) << ',' << format_double(order.order) << '\n';
    std::cout << "observed order " << format_double(order.order) << " (|dX| " << format_double(order.diff_coarse)
              << " -> " << format_double(order.diff_fine) << ")\n";
    for (std::size_t n : rc.convergence_sizes) {
        SimConfig c = rc.sim;
        c.n_nodes = n;
        c.dt = rc.convergence_dt / 4;
        c.t_final = rc.convergence_t_final;
        c.snapshot_every = 1 << 30;
        const SimResult res = simulate(c);
        if (res.aborted) {
            std::cerr << "geometry violation at N=" << n << ": " << res.message << '\n';
            return geometry_violation;
        }
        out << "area_drift," << n << ',' << format_double(c.dt) << ',' << format_double(res.max_area_drift())
            << '\n';
        std::cout << "N " << n << "  max area drift " << format_double(res.max_area_drift()) << '\n';
    }
    man.outputs = {"convergence.csv"};
    return ok;
}

int run_equilibrium(const std::optional<double>& area, const std::optional<double>& center)
{
    if (area.has_value() == center.has_value())
        throw ConfigError("equilibrium mode needs exactly one of area or center");
    const double c = area ? center_of_area(*area) : *center;
    const ArcCenter a = arc_center(c);
    std::cout << "c " << format_double(a.c) << "\nr " << format_double(a.r) << "\nh " << format_double(a.h)
              << "\narea " << format_double(area_of_center(c)) << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Anchored filament in half-plane Stokes flow"};
    Options opt;
    app.add_option("--mode", opt.mode, "simulate | selftest | convergence | equilibrium")
        ->required()
        ->check(CLI::IsMember({"simulate", "selftest", "convergence", "equilibrium"}));
    app.add_option("--config", opt.config, "configuration file");
    app.add_option("--out-dir", opt.out_dir, "output directory");
    app.add_option("--snapshot-every", opt.snapshot_every, "override output.snapshot_every");
    app.add_flag("--seedless", opt.seedless, "refuse configurations that ask for random input");
    app.add_option("--area", opt.area, "equilibrium mode: enclosed area");
    app.add_option("--center", opt.center, "equilibrium mode: center height c");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    RunManifest man;
    man.mode = opt.mode;
    man.config_path = opt.config;
    man.seedless = opt.seedless;
    man.start = std::chrono::system_clock::now();
    int code = ok;
    try {
        std::optional<RunConfig> rc;
        if (!opt.config.empty()) {
            rc = load_config(opt.config);
            man.config_echo = rc->echo;
            if (opt.seedless)
                for (const auto& [k, v] : rc->echo)
                    if (k.find("seed") != std::string::npos)
                        throw ConfigError("--seedless: config requests a seed via '" + k + "'");
            if (opt.snapshot_every) {
                if (*opt.snapshot_every < 1)
                    throw ConfigError("--snapshot-every must be positive");
                rc->sim.snapshot_every = *opt.snapshot_every;
            }
        }
        if ((opt.mode == "simulate" || opt.mode == "convergence") && !rc)
            throw ConfigError(opt.mode + " mode needs --config");

        fs::path dir(opt.out_dir);
        if (opt.mode != "equilibrium") {
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec)
                throw ConfigError("cannot create output directory " + dir.string());
        }

        if (opt.mode == "simulate")
            code = run_simulate(*rc, dir, man);
        else if (opt.mode == "selftest")
            code = run_selftest_mode();
        else if (opt.mode == "convergence")
            code = run_convergence(*rc, dir, man);
        else
            code = run_equilibrium(opt.area ? opt.area : (rc ? rc->equilibrium_area : std::nullopt),
                                   opt.center ? opt.center : (rc ? rc->equilibrium_center : std::nullopt));

        if (opt.mode != "equilibrium") {
            man.end = std::chrono::system_clock::now();
            man.exit_code = code;
            write_manifest(dir / "manifest.json", man);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return config_error;
    } catch (const GeometryViolation& e) {
        std::cerr << "geometry violation (" << e.invariant << ") at step " << e.step << ": " << e.what() << '\n';
        return geometry_violation;
    }
    return code;
}
