#include "spinres/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "spinres/closed_forms.hpp"
#include "spinres/errors.hpp"

namespace spinres::cli {

namespace {

std::vector<double> linspace(double start, double stop, std::size_t n)
{
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = start + (stop - start) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    out.back() = stop;
    return out;
}

double resolve_tau_max(const std::optional<double>& tau_max, const DerivedFrequencies& d)
{
    const double value = tau_max.value_or(4.0 * std::numbers::pi / d.big_omega);
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw std::invalid_argument("--tau-max must be finite and > 0");
    }
    return value;
}

void require_samples(std::size_t samples)
{
    if (samples < 2) {
        throw std::invalid_argument("--samples must be >= 2");
    }
}

void add_param_meta(TransitionCurve& curve, const FieldParams& p, const DerivedFrequencies& d)
{
    curve.add_meta("gamma", p.gamma);
    curve.add_meta("field", p.field);
    curve.add_meta("theta", d.theta);
    curve.add_meta("omega_bar", d.omega_bar);
    curve.add_meta("omega0", d.omega0);
    curve.add_meta("omega1", d.omega1);
    curve.add_meta("omega", d.omega);
    curve.add_meta("big_omega", d.big_omega);
}

const char* scheme_name(Scheme s)
{
    return s == Scheme::rk4 ? "rk4" : "midpoint";
}

IntegratorConfig make_config(const DerivedFrequencies& d, const std::optional<double>& dt, Scheme scheme)
{
    IntegratorConfig cfg{dt.value_or(default_dt(d)), scheme};
    cfg.validate(d);
    return cfg;
}

// Runs fn, mapping library errors onto exit codes and a diagnostic line.
template <typename Fn>
int guarded(std::ostream& err, const char* command, Fn&& fn)
{
    try {
        return fn();
    } catch (const std::exception& e) {
        err << "spinres " << command << ": " << e.what() << '\n';
        return kExitValidation;
    }
}

std::string python_string(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '\\' || c == '"') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

FieldParams ParamInput::resolve() const
{
    const bool freq = omega0 || omega1;
    const bool phys = gamma || field || theta;
    if (freq && phys) {
        throw std::invalid_argument("use either --omega0/--omega1 or --gamma/--field/--theta, not both");
    }
    if (!omega) {
        throw std::invalid_argument("--omega is required");
    }
    if (freq) {
        if (!omega0 || !omega1) {
            throw std::invalid_argument("--omega0 and --omega1 must be given together");
        }
        return from_frequencies(*omega0, *omega1, *omega);
    }
    if (!field || !theta) {
        throw std::invalid_argument("field required: give --omega0/--omega1 or --field/--theta [--gamma]");
    }
    FieldParams p{gamma.value_or(1.0), *field, *theta, *omega};
    p.validate();
    return p;
}

void SweepSpec::validate() const
{
    if (steps < 2) {
        throw std::invalid_argument("sweep: --steps must be >= 2");
    }
    if (!(start < stop) || !std::isfinite(start) || !std::isfinite(stop)) {
        throw std::invalid_argument("sweep: requires finite --start < --stop");
    }
    if (!(cycles > 0.0) || !std::isfinite(cycles)) {
        throw std::invalid_argument("sweep: --cycles must be > 0");
    }
    if (tau_samples < 2) {
        throw std::invalid_argument("sweep: --tau-samples must be >= 2");
    }
}

double CompareReport::worst() const
{
    return std::max({w1937, w1954, w_unified});
}

TransitionCurve evolve_curve(const EvolveOptions& opts)
{
    require_samples(opts.samples);
    if (!std::isfinite(opts.t1)) {
        throw std::invalid_argument("--t1 must be finite");
    }
    const FieldParams p = opts.params.resolve();
    const DerivedFrequencies d = derive(p);
    const double tau_max = resolve_tau_max(opts.tau_max, d);
    const std::vector<double> taus = linspace(0.0, tau_max, opts.samples);

    TransitionCurve curve;
    curve.add_meta("tool", std::string("spinres"));
    curve.add_meta("version", std::string(kVersion));
    curve.add_meta("command", std::string("evolve"));
    add_param_meta(curve, p, d);
    curve.add_meta("t1", opts.t1);
    curve.add_meta("tau_max", tau_max);
    curve.add_meta("samples", std::to_string(opts.samples));
    curve.columns = {"tau", "w1937", "w1954", "w_unified"};

    std::vector<Mat2> numeric;
    if (opts.with_oracle) {
        const IntegratorConfig cfg = make_config(d, opts.dt, opts.scheme);
        curve.add_meta("scheme", std::string(scheme_name(cfg.scheme)));
        curve.add_meta("dt", cfg.dt);
        std::vector<double> times(taus.size());
        std::transform(taus.begin(), taus.end(), times.begin(), [&](double tau) { return opts.t1 + tau; });
        numeric = propagate_at(d, opts.t1, times, cfg);
        curve.columns.insert(curve.columns.end(), {"oracle_w1937", "oracle_w1954", "oracle_w_unified"});
    }

    for (std::size_t k = 0; k < taus.size(); ++k) {
        const double tau = taus[k];
        std::vector<double> row{tau, w1937(d, tau), w1954(d, tau), w_unified(d, tau)};
        if (opts.with_oracle) {
            const double t2 = opts.t1 + tau;
            row.push_back(project(d, numeric[k], Projection::field_eigenbasis, opts.t1, t2, SpinLabel::down,
                                  SpinLabel::up));
            row.push_back(
                project(d, numeric[k], Projection::laboratory, opts.t1, t2, SpinLabel::down, SpinLabel::up));
            row.push_back(
                project(d, numeric[k], Projection::frozen_field, opts.t1, t2, SpinLabel::down, SpinLabel::up));
        }
        curve.rows.push_back(std::move(row));
    }
    curve.validate();
    return curve;
}

TransitionCurve sweep_curve(const SweepSpec& spec)
{
    spec.validate();
    const std::vector<double> grid = linspace(spec.start, spec.stop, spec.steps);

    TransitionCurve curve;
    curve.add_meta("tool", std::string("spinres"));
    curve.add_meta("version", std::string(kVersion));
    curve.add_meta("command", std::string("sweep"));

    auto params_at = [&](double value) {
        ParamInput in = spec.fixed;
        switch (spec.variable) {
        case SweepSpec::Variable::omega:
            in.omega = value;
            return in.resolve();
        case SweepSpec::Variable::theta: {
            // Keep omega_bar = gamma H fixed and tilt the field.
            FieldParams p = in.resolve();
            p.field = p.gamma * p.field;
            p.gamma = 1.0;
            p.theta = value;
            p.validate();
            return p;
        }
        case SweepSpec::Variable::tau:
            break;
        }
        return in.resolve();
    };

    if (spec.variable == SweepSpec::Variable::tau) {
        if (spec.start < 0.0) {
            throw std::invalid_argument("sweep: tau must be >= 0");
        }
        const FieldParams p = spec.fixed.resolve();
        const DerivedFrequencies d = derive(p);
        curve.add_meta("variable", std::string("tau"));
        add_param_meta(curve, p, d);
        curve.columns = {"tau", "w1937", "w1954", "w_unified"};
        for (double tau : grid) {
            curve.rows.push_back({tau, w1937(d, tau), w1954(d, tau), w_unified(d, tau)});
        }
        curve.validate();
        return curve;
    }

    const bool by_omega = spec.variable == SweepSpec::Variable::omega;
    curve.add_meta("variable", std::string(by_omega ? "omega" : "theta"));
    {
        // Parameter record of the sweep start point; the swept column overrides it.
        const FieldParams p0 = params_at(grid.front());
        curve.add_meta("gamma", p0.gamma);
        curve.add_meta("field", p0.field);
        if (by_omega) {
            curve.add_meta("theta", p0.theta);
        } else {
            curve.add_meta("omega", p0.omega);
        }
    }
    curve.add_meta("cycles", spec.cycles);
    curve.add_meta("tau_samples", std::to_string(spec.tau_samples));
    curve.columns = {by_omega ? "omega" : "theta", "peak_w1937", "peak_w1954", "peak_w_unified"};

    curve.rows.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const DerivedFrequencies d = derive(params_at(grid[i]));
        const double window = 2.0 * std::numbers::pi * spec.cycles / d.big_omega;
        double p37 = 0.0;
        double p54 = 0.0;
        double pu = 0.0;
        for (double tau : linspace(0.0, window, spec.tau_samples)) {
            p37 = std::max(p37, w1937(d, tau));
            p54 = std::max(p54, w1954(d, tau));
            pu = std::max(pu, w_unified(d, tau));
        }
        curve.rows[i] = {grid[i], p37, p54, pu};
    }
    curve.validate();
    return curve;
}

CompareReport compare_report(const CompareOptions& opts)
{
    require_samples(opts.samples);
    if (!(opts.tol >= 0.0)) {
        throw std::invalid_argument("--tol must be >= 0");
    }
    const FieldParams p = opts.params.resolve();
    const DerivedFrequencies d = derive(p);
    const double tau_max = resolve_tau_max(opts.tau_max, d);
    const IntegratorConfig cfg = make_config(d, opts.dt, opts.scheme);

    const std::vector<double> taus = linspace(0.0, tau_max, opts.samples);
    std::vector<double> times(taus.size());
    std::transform(taus.begin(), taus.end(), times.begin(), [&](double tau) { return opts.t1 + tau; });
    const std::vector<Mat2> numeric = propagate_at(d, opts.t1, times, cfg);

    CompareReport report;
    for (std::size_t k = 0; k < taus.size(); ++k) {
        const double tau = taus[k];
        const double t2 = times[k];
        auto oracle = [&](Projection proj) {
            return project(d, numeric[k], proj, opts.t1, t2, SpinLabel::down, SpinLabel::up);
        };
        report.w1937 = std::max(report.w1937, std::abs(w1937(d, tau) - oracle(Projection::field_eigenbasis)));
        report.w1954 = std::max(report.w1954, std::abs(w1954(d, tau) - oracle(Projection::laboratory)));
        report.w_unified =
            std::max(report.w_unified, std::abs(w_unified(d, tau) - oracle(Projection::frozen_field)));
    }
    return report;
}

int cmd_evolve(const EvolveOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded(err, "evolve", [&] {
        write_csv(evolve_curve(opts), out);
        return kExitOk;
    });
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err)
{
    return guarded(err, "sweep", [&] {
        write_csv(sweep_curve(spec), out);
        return kExitOk;
    });
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded(err, "compare", [&] {
        const CompareReport r = compare_report(opts);
        const std::pair<const char*, double> rows[] = {
            {"w1937_vs_oracle", r.w1937}, {"w1954_vs_oracle", r.w1954}, {"w_unified_vs_oracle", r.w_unified}};
        out << "pair,max_abs_deviation,tolerance,status\n";
        bool ok = true;
        for (const auto& [name, dev] : rows) {
            const bool pass = dev <= opts.tol;
            ok = ok && pass;
            out << name << ',' << format_number(dev) << ',' << format_number(opts.tol) << ','
                << (pass ? "ok" : "FAIL") << '\n';
        }
        if (!ok) {
            err << "spinres compare: deviation above tolerance " << format_number(opts.tol) << '\n';
        }
        return ok ? kExitOk : kExitTolerance;
    });
}

std::string plot_script(const TransitionCurve& curve, const std::filesystem::path& curve_path)
{
    if (curve.columns.size() < 2) {
        throw std::runtime_error("plotscript: curve needs an abscissa and at least one data column");
    }
    const std::string& x = curve.columns.front();
    std::ostringstream py;
    py << "#!/usr/bin/env python3\n"
       << "# Generated by spinres plotscript. Reads the CSV at run time.\n"
       << "import csv\n"
       << "import sys\n\n"
       << "import matplotlib\n"
       << "matplotlib.use(\"Agg\")\n"
       << "import matplotlib.pyplot as plt\n\n"
       << "CSV_PATH = sys.argv[1] if len(sys.argv) > 1 else " << python_string(curve_path.string()) << "\n"
       << "OUT_PATH = sys.argv[2] if len(sys.argv) > 2 else CSV_PATH + \".png\"\n"
       << "X = " << python_string(x) << "\n"
       << "SERIES = [";
    for (std::size_t c = 1; c < curve.columns.size(); ++c) {
        py << (c > 1 ? ", " : "") << python_string(curve.columns[c]);
    }
    py << "]\n\n"
       << "with open(CSV_PATH, newline=\"\") as fh:\n"
       << "    rows = list(csv.DictReader(line for line in fh if not line.startswith(\"#\")))\n\n"
       << "xs = [float(r[X]) for r in rows]\n"
       << "fig, ax = plt.subplots(figsize=(8, 4.5))\n"
       << "for name in SERIES:\n"
       << "    ax.plot(xs, [float(r[name]) for r in rows], label=name)\n"
       << "ax.set_xlabel(X)\n"
       << "ax.set_ylabel(\"transition probability\")\n"
       << "ax.set_ylim(-0.02, 1.02)\n"
       << "ax.legend()\n"
       << "fig.tight_layout()\n"
       << "fig.savefig(OUT_PATH, dpi=150)\n";
    return py.str();
}

int cmd_plotscript(const std::filesystem::path& curve_path, const std::filesystem::path& script_path,
                   std::ostream& err)
{
    return guarded(err, "plotscript", [&] {
        std::ifstream in(curve_path);
        if (!in) {
            throw std::runtime_error("cannot open '" + curve_path.string() + "'");
        }
        const TransitionCurve curve = read_csv(in);
        if (curve.rows.empty()) {
            throw std::runtime_error("'" + curve_path.string() + "' has no data rows");
        }
        const std::string script = plot_script(curve, curve_path);
        std::ofstream out(script_path);
        if (!out || !(out << script)) {
            throw std::runtime_error("cannot write '" + script_path.string() + "'");
        }
        return kExitOk;
    });
}

}  // namespace spinres::cli
