#pragma once

// Numerical integration of i dPsi/dt = H(t) Psi in the laboratory frame.
// Uses only instantaneous_hamiltonian(); none of the closed-form rotation
// products, so it can serve as an independent check on them.

#include <span>
#include <vector>

#include "spinres/model.hpp"
#include "spinres/propagators.hpp"
#include "spinres/su2.hpp"

namespace spinres {

enum class Scheme {
    midpoint_exponential,  ///< exp(-i H(t + h/2) h) per step; exactly unitary, second order
    rk4,                   ///< classical Runge-Kutta; fourth order, not norm preserving
};

struct IntegratorConfig {
    double dt = 1e-4;
    Scheme scheme = Scheme::midpoint_exponential;

    /// Resolution guard: dt > 0, dt omega_bar < 0.5, dt omega < 0.5. Throws ConfigError.
    void validate(const DerivedFrequencies& d) const;
};

/// 1e-4 * min(1/omega_bar, 1/omega, 1/Omega) over the non-zero frequencies.
double default_dt(const DerivedFrequencies& d);
IntegratorConfig default_config(const DerivedFrequencies& d, Scheme scheme = Scheme::midpoint_exponential);

struct Trajectory {
    std::vector<double> times;
    std::vector<Spinor> states;
};

/// Every step from t1 to t2 (the step is shrunk so the grid lands on t2).
Trajectory integrate(const DerivedFrequencies& d, const Spinor& psi0, double t1, double t2,
                     const IntegratorConfig& cfg);

/// States at the requested ascending times (all >= t1), starting from psi0 at t1.
Trajectory integrate_at(const DerivedFrequencies& d, const Spinor& psi0, double t1,
                        std::span<const double> times, const IntegratorConfig& cfg);

/// Numerical propagator U(t1, t) at each requested ascending time. Both columns are evolved.
std::vector<Mat2> propagate_at(const DerivedFrequencies& d, double t1, std::span<const double> times,
                               const IntegratorConfig& cfg);

/// Basis in which the spin is prepared at t1 and measured at t2.
enum class Projection {
    laboratory,       ///< fixed I_z eigenstates at both ends
    field_eigenbasis, ///< instantaneous I_H eigenstates: rotating_basis(t1) in, rotating_basis(t2) out
    frozen_field,     ///< rotating_basis(t2) at both ends: one field basis, frozen at the measurement time
};

/// |<final| U(t1, t2) |initial>|^2 with the bases of the given projection.
double project(const DerivedFrequencies& d, const Mat2& u, Projection projection, double t1, double t2,
               SpinLabel initial, SpinLabel final_label);

double oracle_probability(const DerivedFrequencies& d, Projection projection, double t1, double t2,
                          const IntegratorConfig& cfg, SpinLabel initial = SpinLabel::down,
                          SpinLabel final_label = SpinLabel::up);

/// Oracle for w_unified.
double oracle_w_unified(const DerivedFrequencies& d, double t1, double t2, const IntegratorConfig& cfg);
/// Oracle for w1954.
double oracle_w1954(const DerivedFrequencies& d, double t1, double t2, const IntegratorConfig& cfg);
/// Oracle for w1937.
double oracle_w1937(const DerivedFrequencies& d, double t1, double t2, const IntegratorConfig& cfg);

}  // namespace spinres
