#include "spinres/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinres/errors.hpp"

namespace spinres {

namespace {

void require(bool ok, const char* message)
{
    if (!ok) {
        throw std::domain_error(message);
    }
}

}  // namespace

void FieldParams::validate() const
{
    require(std::isfinite(gamma) && gamma > 0.0, "FieldParams: gamma must be finite and > 0");
    require(std::isfinite(field) && field >= 0.0, "FieldParams: field amplitude must be finite and >= 0");
    require(std::isfinite(theta) && theta >= 0.0 && theta <= std::numbers::pi,
            "FieldParams: theta must lie in [0, pi]");
    require(std::isfinite(omega) && omega >= 0.0, "FieldParams: omega must be finite and >= 0");
}

DerivedFrequencies derive(const FieldParams& params)
{
    params.validate();

    DerivedFrequencies d;
    d.omega_bar = params.gamma * params.field;
    d.theta = params.theta;
    d.omega0 = d.omega_bar * std::cos(params.theta);
    d.omega1 = d.omega_bar * std::sin(params.theta);
    d.omega = params.omega;

    const double detuning = d.omega0 - d.omega;
    d.big_omega = std::hypot(detuning, d.omega1);
    if (d.big_omega == 0.0) {
        throw DegenerateDetuningError("derive: Rabi frequency is zero (omega = omega0 with omega1 = 0)");
    }
    // omega1 >= 0 restricts atan2 to [0, pi], so sin(theta_cap) = omega1 / big_omega >= 0.
    d.theta_cap = std::atan2(d.omega1, detuning);
    d.gamma_cap = d.theta_cap - d.theta;
    return d;
}

FieldParams from_frequencies(double omega0, double omega1, double omega)
{
    require(std::isfinite(omega0) && std::isfinite(omega1) && std::isfinite(omega),
            "from_frequencies: frequencies must be finite");
    require(omega1 >= 0.0, "from_frequencies: omega1 must be >= 0");
    require(omega >= 0.0, "from_frequencies: omega must be >= 0");
    require(omega0 != 0.0 || omega1 != 0.0, "from_frequencies: omega0 and omega1 cannot both be zero");

    FieldParams p;
    p.gamma = 1.0;
    p.field = std::hypot(omega0, omega1);
    p.theta = std::atan2(omega1, omega0);
    p.omega = omega;
    return p;
}

DerivedFrequencies derive_from_frequencies(double omega0, double omega1, double omega)
{
    return derive(from_frequencies(omega0, omega1, omega));
}

}  // namespace spinres
