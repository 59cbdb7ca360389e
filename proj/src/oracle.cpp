#include "spinres/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "spinres/errors.hpp"

namespace spinres {

namespace {

constexpr double kResolutionGuard = 0.5;

// One step of size h from t for the state matrix u (columns evolve independently).
Mat2 step(const DerivedFrequencies& d, const Mat2& u, double t, double h, Scheme scheme)
{
    if (scheme == Scheme::midpoint_exponential) {
        return instantaneous_hamiltonian(d, t + 0.5 * h).evolution(h).matrix() * u;
    }
    const cplx mi{0.0, -1.0};
    auto rhs = [&](double s, const Mat2& v) { return mi * (instantaneous_hamiltonian(d, s).matrix() * v); };
    const Mat2 k1 = rhs(t, u);
    const Mat2 k2 = rhs(t + 0.5 * h, u + cplx{0.5 * h} * k1);
    const Mat2 k3 = rhs(t + 0.5 * h, u + cplx{0.5 * h} * k2);
    const Mat2 k4 = rhs(t + h, u + cplx{h} * k3);
    return u + cplx{h / 6.0} * (k1 + cplx{2.0} * k2 + cplx{2.0} * k3 + k4);
}

// Advances u from t_from to t_to in ceil((t_to - t_from)/dt) equal steps.
Mat2 advance(const DerivedFrequencies& d, Mat2 u, double t_from, double t_to, const IntegratorConfig& cfg)
{
    const double span = t_to - t_from;
    if (span <= 0.0) {
        return u;
    }
    const auto n = static_cast<long long>(std::ceil(span / cfg.dt - 1e-9));
    const long long steps = std::max<long long>(n, 1);
    const double h = span / static_cast<double>(steps);
    for (long long k = 0; k < steps; ++k) {
        u = step(d, u, t_from + static_cast<double>(k) * h, h, cfg.scheme);
    }
    return u;
}

Mat2 column_state(const Spinor& psi)
{
    return {{psi.up, cplx{0.0}, psi.down, cplx{0.0}}};
}

Spinor first_column(const Mat2& m)
{
    return {m(0, 0), m(1, 0)};
}

void check_times(double t1, double t2)
{
    if (!std::isfinite(t1) || !std::isfinite(t2) || t2 < t1) {
        throw std::domain_error("oracle: requires finite t1 <= t2");
    }
}

void check_initial(const Spinor& psi0)
{
    if (!psi0.is_normalized()) {
        throw std::domain_error("oracle: initial state must be normalized");
    }
}

Spinor basis_state(SpinLabel m)
{
    return m == SpinLabel::up ? Spinor::spin_up() : Spinor::spin_down();
}

}  // namespace

void IntegratorConfig::validate(const DerivedFrequencies& d) const
{
    std::ostringstream why;
    if (!std::isfinite(dt) || !(dt > 0.0)) {
        why << "dt must be finite and > 0 (got " << dt << ")";
    } else if (dt * d.omega_bar >= kResolutionGuard) {
        why << "dt * omega_bar = " << dt * d.omega_bar << " violates the resolution guard (< 0.5)";
    } else if (dt * d.omega >= kResolutionGuard) {
        why << "dt * omega = " << dt * d.omega << " violates the resolution guard (< 0.5)";
    } else {
        return;
    }
    throw ConfigError("IntegratorConfig: " + why.str());
}

double default_dt(const DerivedFrequencies& d)
{
    double fastest = 0.0;
    for (double f : {d.omega_bar, d.omega, d.big_omega}) {
        fastest = std::max(fastest, std::abs(f));
    }
    if (fastest == 0.0) {
        return 1e-4;
    }
    return 1e-4 / fastest;
}

IntegratorConfig default_config(const DerivedFrequencies& d, Scheme scheme)
{
    return {default_dt(d), scheme};
}

Trajectory integrate(const DerivedFrequencies& d, const Spinor& psi0, double t1, double t2,
                     const IntegratorConfig& cfg)
{
    check_times(t1, t2);
    check_initial(psi0);
    cfg.validate(d);

    Trajectory out;
    const double span = t2 - t1;
    const auto steps = span > 0.0 ? std::max<long long>(static_cast<long long>(std::ceil(span / cfg.dt - 1e-9)), 1)
                                   : 0LL;
    out.times.reserve(static_cast<std::size_t>(steps) + 1);
    out.states.reserve(static_cast<std::size_t>(steps) + 1);
    out.times.push_back(t1);
    out.states.push_back(psi0);

    const double h = steps > 0 ? span / static_cast<double>(steps) : 0.0;
    Mat2 u = column_state(psi0);
    for (long long k = 0; k < steps; ++k) {
        const double t = t1 + static_cast<double>(k) * h;
        u = step(d, u, t, h, cfg.scheme);
        out.times.push_back(k + 1 == steps ? t2 : t1 + static_cast<double>(k + 1) * h);
        out.states.push_back(first_column(u));
    }
    return out;
}

Trajectory integrate_at(const DerivedFrequencies& d, const Spinor& psi0, double t1,
                        std::span<const double> times, const IntegratorConfig& cfg)
{
    check_initial(psi0);
    const std::vector<Mat2> us = propagate_at(d, t1, times, cfg);
    Trajectory out;
    out.times.assign(times.begin(), times.end());
    out.states.reserve(us.size());
    for (const Mat2& u : us) {
        out.states.push_back(u * psi0);
    }
    return out;
}

std::vector<Mat2> propagate_at(const DerivedFrequencies& d, double t1, std::span<const double> times,
                               const IntegratorConfig& cfg)
{
    cfg.validate(d);
    std::vector<Mat2> out;
    out.reserve(times.size());
    Mat2 u = Mat2::identity();
    double t = t1;
    for (double target : times) {
        check_times(t, target);
        u = advance(d, u, t, target, cfg);
        t = target;
        out.push_back(u);
    }
    return out;
}

double project(const DerivedFrequencies& d, const Mat2& u, Projection projection, double t1, double t2,
               SpinLabel initial, SpinLabel final_label)
{
    Spinor in;
    Spinor out;
    switch (projection) {
    case Projection::laboratory:
        in = basis_state(initial);
        out = basis_state(final_label);
        break;
    case Projection::field_eigenbasis:
        in = rotating_basis(d, t1, initial);
        out = rotating_basis(d, t2, final_label);
        break;
    case Projection::frozen_field:
        in = rotating_basis(d, t2, initial);
        out = rotating_basis(d, t2, final_label);
        break;
    }
    return std::norm(inner(out, u * in));
}

double oracle_probability(const DerivedFrequencies& d, Projection projection, double t1, double t2,
                          const IntegratorConfig& cfg, SpinLabel initial, SpinLabel final_label)
{
    check_times(t1, t2);
    const double target[] = {t2};
    const Mat2 u = propagate_at(d, t1, target, cfg).front();
    return project(d, u, projection, t1, t2, initial, final_label);
}

double oracle_w_unified(const DerivedFrequencies& d, double t1, double t2, const IntegratorConfig& cfg)
{
    return oracle_probability(d, Projection::frozen_field, t1, t2, cfg);
}

double oracle_w1954(const DerivedFrequencies& d, double t1, double t2, const IntegratorConfig& cfg)
{
    return oracle_probability(d, Projection::laboratory, t1, t2, cfg);
}

double oracle_w1937(const DerivedFrequencies& d, double t1, double t2, const IntegratorConfig& cfg)
{
    return oracle_probability(d, Projection::field_eigenbasis, t1, t2, cfg);
}

}  // namespace spinres
