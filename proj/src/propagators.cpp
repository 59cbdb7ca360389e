#include "spinres/propagators.hpp"

#include <cmath>
#include <stdexcept>

namespace spinres {

namespace {

void require_non_negative_tau(double tau, const char* who)
{
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw std::domain_error(std::string(who) + ": tau must be finite and >= 0");
    }
}

}  // namespace

FrameLabel FrameLabel::rotating_field(const DerivedFrequencies& d)
{
    return {Alpha::co_rotating, 0.0, d.theta};
}

FrameLabel FrameLabel::spin_dynamical(const DerivedFrequencies& d)
{
    return {Alpha::co_rotating, 0.0, d.theta_cap};
}

double FrameLabel::alpha_at(const DerivedFrequencies& d, double t) const
{
    return alpha_kind == Alpha::co_rotating ? -d.omega * t : alpha;
}

Unitary2 FrameLabel::to_laboratory(const DerivedFrequencies& d, double t) const
{
    return rot_z(alpha_at(d, t)) * rot_y(beta);
}

Spinor FrameLabel::basis_ket(const DerivedFrequencies& d, double t, SpinLabel m) const
{
    return to_laboratory(d, t) * (m == SpinLabel::up ? Spinor::spin_up() : Spinor::spin_down());
}

Unitary2 lab_propagator(const DerivedFrequencies& d, double t1, double t2)
{
    if (!std::isfinite(t1) || !std::isfinite(t2) || t2 < t1) {
        throw std::domain_error("lab_propagator: requires finite t1 <= t2");
    }
    return rot_z(-d.omega * t2) * rot_y(d.theta_cap) * rot_z(-d.big_omega * (t2 - t1))
           * rot_y(-d.theta_cap) * rot_z(d.omega * t1);
}

Unitary2 rotating_field_propagator(const DerivedFrequencies& d, double tau)
{
    require_non_negative_tau(tau, "rotating_field_propagator");
    return rot_y(d.gamma_cap) * rot_z(-d.big_omega * tau) * rot_y(-d.gamma_cap);
}

Unitary2 kinematic_rotation(const DerivedFrequencies& d, double tau)
{
    require_non_negative_tau(tau, "kinematic_rotation");
    return rot_y(-d.theta) * rot_z(-d.omega * tau) * rot_y(d.theta);
}

Unitary2 dual_frame_matrix(const DerivedFrequencies& d, double tau)
{
    return rotating_field_propagator(d, tau) * kinematic_rotation(d, tau);
}

Spinor rotating_basis(const DerivedFrequencies& d, double t, SpinLabel m)
{
    return FrameLabel::rotating_field(d).basis_ket(d, t, m);
}

Hermitian2 instantaneous_hamiltonian(const DerivedFrequencies& d, double t)
{
    const double wt = d.omega * t;
    return {0.0, -0.5 * d.omega1 * std::cos(wt), 0.5 * d.omega1 * std::sin(wt), -0.5 * d.omega0};
}

Hermitian2 quantization_operator(const DerivedFrequencies& d, double t)
{
    if (!(d.omega_bar > 0.0)) {
        throw std::domain_error("quantization_operator: requires omega_bar > 0");
    }
    return (-1.0 / d.omega_bar) * instantaneous_hamiltonian(d, t);
}

}  // namespace spinres
