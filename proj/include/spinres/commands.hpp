#pragma once

// Subcommand implementations behind the spinres CLI. Each returns the process
// exit code and writes data to `out`, diagnostics to `err`.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "spinres/curve.hpp"
#include "spinres/model.hpp"
#include "spinres/oracle.hpp"

namespace spinres::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitTolerance = 2;

inline constexpr const char* kVersion = "0.1.0";

/// Field given either as (omega0, omega1) or as (gamma, H, theta); omega in both cases.
struct ParamInput {
    std::optional<double> omega0;
    std::optional<double> omega1;
    std::optional<double> gamma;
    std::optional<double> field;
    std::optional<double> theta;
    std::optional<double> omega;

    /// Throws std::invalid_argument if the groups are mixed or incomplete.
    FieldParams resolve() const;
    bool frequency_form() const { return omega0.has_value() || omega1.has_value(); }
};

struct EvolveOptions {
    ParamInput params;
    double t1 = 0.0;
    std::optional<double> tau_max;  ///< default 4 pi / Omega
    std::size_t samples = 201;
    bool with_oracle = false;
    std::optional<double> dt;
    Scheme scheme = Scheme::midpoint_exponential;
};

struct SweepSpec {
    enum class Variable { omega, tau, theta };

    Variable variable = Variable::omega;
    double start = 0.0;
    double stop = 1.0;
    std::size_t steps = 101;
    ParamInput fixed;
    double cycles = 2.0;             ///< peak window is [0, 2 pi cycles / Omega]
    std::size_t tau_samples = 2001;  ///< grid used for peak search

    /// steps >= 2 and start < stop; throws std::invalid_argument.
    void validate() const;
};

struct CompareOptions {
    ParamInput params;
    double t1 = 0.0;
    std::optional<double> tau_max;
    std::size_t samples = 201;
    std::optional<double> dt;
    Scheme scheme = Scheme::midpoint_exponential;
    double tol = 1e-6;
};

/// Maximum absolute deviation between each closed form and its oracle over the tau grid.
struct CompareReport {
    double w1937 = 0.0;
    double w1954 = 0.0;
    double w_unified = 0.0;

    double worst() const;
};

TransitionCurve evolve_curve(const EvolveOptions& opts);
TransitionCurve sweep_curve(const SweepSpec& spec);
CompareReport compare_report(const CompareOptions& opts);

int cmd_evolve(const EvolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);
/// Writes a matplotlib script that reads `curve_path` by column name to `script_path`.
int cmd_plotscript(const std::filesystem::path& curve_path, const std::filesystem::path& script_path,
                   std::ostream& err);

std::string plot_script(const TransitionCurve& curve, const std::filesystem::path& curve_path);

}  // namespace spinres::cli
