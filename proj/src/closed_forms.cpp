#include "spinres/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spinres/errors.hpp"

namespace spinres {

namespace {

constexpr double kResonanceTolerance = 1e-9;

void check_common(const DerivedFrequencies& d, double tau, const char* who, bool needs_field)
{
    if (!(d.big_omega > 0.0)) {
        throw DegenerateDetuningError(std::string(who) + ": Rabi frequency must be > 0");
    }
    if (needs_field && !(d.omega_bar > 0.0)) {
        throw std::domain_error(std::string(who) + ": omega_bar must be > 0");
    }
    if (!std::isfinite(tau) || tau < 0.0) {
        throw std::domain_error(std::string(who) + ": tau must be finite and >= 0");
    }
}

double sq(double x)
{
    return x * x;
}

}  // namespace

double w1937(const DerivedFrequencies& d, double tau)
{
    check_common(d, tau, "w1937", true);
    const double amp = d.omega * d.omega1 / (d.omega_bar * d.big_omega);
    return sq(amp) * sq(std::sin(0.5 * d.big_omega * tau));
}

double w1954(const DerivedFrequencies& d, double tau)
{
    check_common(d, tau, "w1954", false);
    return sq(d.omega1 / d.big_omega) * sq(std::sin(0.5 * d.big_omega * tau));
}

double w_unified(const DerivedFrequencies& d, double tau)
{
    check_common(d, tau, "w_unified", true);
    const double sd = std::sin(0.5 * d.big_omega * tau);
    const double cd = std::cos(0.5 * d.big_omega * tau);
    const double sk = std::sin(0.5 * d.omega * tau);
    const double ck = std::cos(0.5 * d.omega * tau);

    const double dynamical = sq(d.omega1 / d.big_omega) * sq(sd) * sq(sk);
    const double mixed = (d.omega * d.omega1 / (d.big_omega * d.omega_bar)) * sd * ck
                         - (d.omega1 / d.omega_bar) * cd * sk;
    return dynamical + sq(mixed);
}

bool on_resonance(const DerivedFrequencies& d)
{
    return std::abs(d.omega - d.omega0) <= kResonanceTolerance * std::max(d.omega, d.omega0);
}

double w_resonance(const DerivedFrequencies& d, double tau)
{
    check_common(d, tau, "w_resonance", true);
    if (!on_resonance(d)) {
        throw std::domain_error("w_resonance: omega must equal omega0; use w_unified off resonance");
    }
    const double sd = std::sin(0.5 * d.big_omega * tau);
    const double cd = std::cos(0.5 * d.big_omega * tau);
    const double sk = std::sin(0.5 * d.omega * tau);
    const double ck = std::cos(0.5 * d.omega * tau);
    const double mixed = (d.omega / d.omega_bar) * sd * ck - (d.big_omega / d.omega_bar) * cd * sk;
    return sq(sd) * sq(sk) + sq(mixed);
}

double w_weak_resonance(double big_omega, double tau)
{
    if (!(big_omega > 0.0)) {
        throw std::domain_error("w_weak_resonance: big_omega must be > 0");
    }
    return sq(std::sin(0.5 * big_omega * tau));
}

double w_second_resonance(double omega, double tau)
{
    if (!(omega > 0.0)) {
        throw std::domain_error("w_second_resonance: omega must be > 0");
    }
    return sq(sq(std::sin(0.5 * omega * tau)));
}

double complement(double w)
{
    // closed forms may overshoot [0, 1] by rounding
    constexpr double slack = 1e-12;
    if (!(w >= -slack && w <= 1.0 + slack)) {
        throw std::domain_error("complement: probability must lie in [0, 1]");
    }
    return std::clamp(1.0 - w, 0.0, 1.0);
}

std::vector<ProbabilityPoint> sample(ClosedForm w, const DerivedFrequencies& d, const std::vector<double>& taus)
{
    std::vector<ProbabilityPoint> out;
    out.reserve(taus.size());
    for (double tau : taus) {
        out.push_back({tau, w(d, tau)});
    }
    return out;
}

}  // namespace spinres
