#pragma once

// Scalar transition probabilities W(-1/2, 1/2) for the rotating-field problem.
// Amplitudes are evaluated as frequency ratios rather than through the angles
// Theta and Gamma.

#include <vector>

#include "spinres/model.hpp"

namespace spinres {

struct ProbabilityPoint {
    double tau = 0.0;
    double value = 0.0;
};

/// Projection onto the co-rotating field eigenbasis: (omega omega1 / (omega_bar Omega))^2 sin^2(Omega tau / 2).
double w1937(const DerivedFrequencies& d, double tau);

/// Projection onto the fixed I_z basis: (omega1 / Omega)^2 sin^2(Omega tau / 2).
double w1954(const DerivedFrequencies& d, double tau);

/// Both reference frames kept: dynamical rotation at Omega and kinematic rotation at omega.
///   (w1/W)^2 sin^2(W t/2) sin^2(w t/2)
///     + [ (w w1/(W wb)) sin(W t/2) cos(w t/2) - (w1/wb) cos(W t/2) sin(w t/2) ]^2
double w_unified(const DerivedFrequencies& d, double tau);

/// Specialization of w_unified to omega = omega0 (so Omega = omega1).
/// Throws std::domain_error if |omega - omega0| > 1e-9 max(omega, omega0).
double w_resonance(const DerivedFrequencies& d, double tau);

/// sin^2(Omega tau / 2). Throws std::domain_error if big_omega <= 0.
double w_weak_resonance(double big_omega, double tau);

/// sin^4(omega tau / 2), the omega = omega0 = omega1 case. Throws std::domain_error if omega <= 0.
double w_second_resonance(double omega, double tau);

/// Survival probability 1 - w. Throws std::domain_error outside [0, 1].
double complement(double w);

/// True when omega sits on the omega = omega0 manifold within the w_resonance tolerance.
bool on_resonance(const DerivedFrequencies& d);

using ClosedForm = double (*)(const DerivedFrequencies&, double);

/// Samples a closed form on the given tau grid.
std::vector<ProbabilityPoint> sample(ClosedForm w, const DerivedFrequencies& d, const std::vector<double>& taus);

}  // namespace spinres
