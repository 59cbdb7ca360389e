// spinres: transition probabilities of a spin-1/2 in a rotating field.
//
//   spinres evolve     --omega0 1 --omega1 0.5 --omega 1 --tau-max 20 --samples 401 --out curve.csv
//   spinres sweep      --variable omega --start 0 --stop 2 --steps 201 --omega0 1 --omega1 0.01
//   spinres compare    --omega0 1 --omega1 1 --omega 1 --tol 1e-6
//   spinres plotscript curve.csv --out curve.py

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "spinres/commands.hpp"

namespace {

using namespace spinres;

void add_field_options(CLI::App& cmd, cli::ParamInput& in, bool with_omega)
{
    auto* o0 = cmd.add_option("--omega0", in.omega0, "longitudinal frequency omega0 (rad/s)");
    auto* o1 = cmd.add_option("--omega1", in.omega1, "transverse frequency omega1 >= 0 (rad/s)");
    auto* g = cmd.add_option("--gamma", in.gamma, "gyromagnetic ratio (default 1 with --field)");
    auto* f = cmd.add_option("--field", in.field, "field amplitude H");
    auto* t = cmd.add_option("--theta", in.theta, "field polar angle in [0, pi] (rad)");
    for (auto* freq : {o0, o1}) {
        for (auto* phys : {g, f, t}) {
            freq->excludes(phys);
        }
    }
    if (with_omega) {
        cmd.add_option("--omega", in.omega, "drive rotation frequency >= 0 (rad/s)");
    }
}

const std::map<std::string, Scheme> kSchemes{{"midpoint", Scheme::midpoint_exponential}, {"rk4", Scheme::rk4}};

// Runs a command writing to --out (or stdout).
template <typename Fn>
int with_output(const std::string& path, Fn&& fn)
{
    if (path.empty() || path == "-") {
        return fn(std::cout);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "spinres: cannot open '" << path << "' for writing\n";
        return cli::kExitValidation;
    }
    return fn(file);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Transition probabilities of a spin-1/2 driven by a rotating magnetic field"};
    app.set_version_flag("--version", std::string(cli::kVersion));
    app.require_subcommand(1);

    std::string out_path;

    cli::EvolveOptions evolve;
    auto* evolve_cmd = app.add_subcommand("evolve", "sample w1937, w1954 and w_unified over a tau grid");
    add_field_options(*evolve_cmd, evolve.params, true);
    evolve_cmd->add_option("--t1", evolve.t1, "start time (s)");
    evolve_cmd->add_option("--tau-max", evolve.tau_max, "largest evolution time (default 4 pi / Omega)");
    evolve_cmd->add_option("--samples", evolve.samples, "number of tau samples (>= 2)");
    evolve_cmd->add_flag("--oracle", evolve.with_oracle, "append numerically integrated columns");
    evolve_cmd->add_option("--dt", evolve.dt, "integrator step (default 1e-4 / fastest frequency)");
    evolve_cmd->add_option("--scheme", evolve.scheme, "midpoint or rk4")
        ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case));
    evolve_cmd->add_option("--out", out_path, "output CSV (default stdout)");

    cli::SweepSpec sweep;
    const std::map<std::string, cli::SweepSpec::Variable> variables{
        {"omega", cli::SweepSpec::Variable::omega},
        {"tau", cli::SweepSpec::Variable::tau},
        {"theta", cli::SweepSpec::Variable::theta}};
    auto* sweep_cmd = app.add_subcommand("sweep", "peak probabilities across omega or theta, or values across tau");
    sweep_cmd->add_option("--variable", sweep.variable, "omega, tau or theta")
        ->transform(CLI::CheckedTransformer(variables, CLI::ignore_case));
    sweep_cmd->add_option("--start", sweep.start, "first value")->required();
    sweep_cmd->add_option("--stop", sweep.stop, "last value")->required();
    sweep_cmd->add_option("--steps", sweep.steps, "number of grid points (>= 2)");
    sweep_cmd->add_option("--cycles", sweep.cycles, "peak window in Rabi cycles");
    sweep_cmd->add_option("--tau-samples", sweep.tau_samples, "tau grid used for peak search");
    add_field_options(*sweep_cmd, sweep.fixed, true);
    sweep_cmd->add_option("--out", out_path, "output CSV (default stdout)");

    cli::CompareOptions compare;
    auto* compare_cmd = app.add_subcommand("compare", "closed forms against the numerical integrator");
    add_field_options(*compare_cmd, compare.params, true);
    compare_cmd->add_option("--t1", compare.t1, "start time (s)");
    compare_cmd->add_option("--tau-max", compare.tau_max, "largest evolution time (default 4 pi / Omega)");
    compare_cmd->add_option("--samples", compare.samples, "number of tau samples (>= 2)");
    compare_cmd->add_option("--dt", compare.dt, "integrator step (default 1e-4 / fastest frequency)");
    compare_cmd->add_option("--scheme", compare.scheme, "midpoint or rk4")
        ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case));
    compare_cmd->add_option("--tol", compare.tol, "maximum allowed absolute deviation");
    compare_cmd->add_option("--out", out_path, "report path (default stdout)");

    std::string curve_path;
    std::string script_path;
    auto* plot_cmd = app.add_subcommand("plotscript", "write a matplotlib script for a CSV produced by spinres");
    plot_cmd->add_option("csv", curve_path, "CSV written by evolve or sweep")->required();
    plot_cmd->add_option("--out", script_path, "script path (default <csv>.py)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitValidation;
    }

    if (*evolve_cmd) {
        return with_output(out_path, [&](std::ostream& os) { return cli::cmd_evolve(evolve, os, std::cerr); });
    }
    if (*sweep_cmd) {
        return with_output(out_path, [&](std::ostream& os) { return cli::cmd_sweep(sweep, os, std::cerr); });
    }
    if (*compare_cmd) {
        return with_output(out_path, [&](std::ostream& os) { return cli::cmd_compare(compare, os, std::cerr); });
    }
    if (script_path.empty()) {
        script_path = curve_path + ".py";
    }
    return cli::cmd_plotscript(curve_path, script_path, std::cerr);
}
